from .decide import Decision, Reason, Verdict, check_pair, decide_rank3, enumerate_splits, exists_rank_r
from .errors import (
    EmptyIdeal,
    NotIntegrallyClosed,
    NotMPrimary,
    NotUnimodular,
    OrderOfZero,
    OrderTooSmall,
    ParseError,
    RankTooSmall,
    ShapeError,
    UnitIdeal,
    VerificationError,
    ZariskiLabError,
)
from .expressions import parse, parse_ideal, parse_polynomial, parse_vector
from .local_ideal import LocalIdeal, contains_mpower, equals_monomial, local_colength, truncated_image
from .module_lab import (
    FreeVector,
    ModulePresentation,
    build_mr,
    buchsbaum_rim,
    change_coords,
    cofree_colength,
    fitting_ideal,
    member_mr,
    phi,
)
from .monomial_ideal import MonomialIdeal, SimpleFactor, mpower
from .polynomials import Monomial, PolyMatrix, det, poly_order, sym_power, truncate

__version__ = "0.1.0"

__all__ = [
    'Monomial', 'PolyMatrix', 'det', 'poly_order', 'sym_power', 'truncate',
    'MonomialIdeal', 'SimpleFactor', 'mpower',
    'LocalIdeal', 'truncated_image', 'contains_mpower', 'equals_monomial', 'local_colength',
    'FreeVector', 'ModulePresentation', 'build_mr', 'fitting_ideal', 'phi', 'member_mr',
    'cofree_colength', 'buchsbaum_rim', 'change_coords',
    'Decision', 'Verdict', 'Reason', 'check_pair', 'enumerate_splits', 'exists_rank_r', 'decide_rank3',
    'parse', 'parse_ideal', 'parse_polynomial', 'parse_vector',
    'ZariskiLabError', 'OrderOfZero', 'ShapeError', 'EmptyIdeal', 'NotMPrimary', 'NotIntegrallyClosed',
    'OrderTooSmall', 'NotUnimodular', 'RankTooSmall', 'UnitIdeal', 'ParseError', 'VerificationError',
]
