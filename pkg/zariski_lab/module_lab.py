"""
Modules M_r(I) inside the free module F = R^r and their invariants.

M_r(I) is generated by the columns of an r x (n + r) matrix: the first n + 1
columns write the minimal generators of I over x^(r-1), x^(r-2)y, ..., y^(r-1)
and the last r - 1 columns are the Koszul relations among those monomials.
Equivalently M_r(I) is the preimage of I under
phi(v) = v_1 x^(r-1) + v_2 x^(r-2) y + ... + v_r y^(r-1).
"""

from dataclasses import dataclass, replace
from itertools import combinations
from math import comb
from typing import Any, Dict, List, Optional, Sequence, Tuple

from sympy.polys.rings import PolyElement

from .errors import (
    NotIntegrallyClosed,
    NotUnimodular,
    OrderTooSmall,
    RankTooSmall,
    ShapeError,
    VerificationError,
)
from .local_ideal import LocalIdeal, TruncationSpace, resolve_truncation_cap, truncated_span
from .monomial_ideal import MonomialIdeal
from .polynomials import (
    RING,
    X,
    Y,
    Monomial,
    PolyMatrix,
    det,
    format_poly,
    is_constant,
    iter_terms,
    monomials_of_degree,
    poly_order,
    relation_matrix,
    substitute,
    sym_power,
    to_poly,
)

DECOMPOSITION_RULE = "maximal y-row"


@dataclass(frozen=True)
class Provenance:
    """Where a presentation came from"""
    source: str
    rule: str = DECOMPOSITION_RULE
    coordinates: str = "x,y"


@dataclass(frozen=True)
class FreeVector:
    """Element of F = R^r"""
    entries: Tuple[PolyElement, ...]

    def __post_init__(self):
        object.__setattr__(self, "entries", tuple(to_poly(e) for e in self.entries))

    @classmethod
    def of(cls, *entries: Any) -> "FreeVector":
        return cls(tuple(entries))

    @classmethod
    def unit(cls, r: int, index: int, coefficient: Any = 1) -> "FreeVector":
        return cls(tuple(coefficient if i == index else 0 for i in range(r)))

    @property
    def rank(self) -> int:
        return len(self.entries)

    def __str__(self) -> str:
        return "(" + "; ".join(format_poly(e) for e in self.entries) + ")"


@dataclass(frozen=True)
class ModulePresentation:
    """Submodule of R^rank generated by the columns of matrix"""
    rank: int
    matrix: PolyMatrix
    provenance: Optional[Provenance] = None

    def __post_init__(self):
        if self.matrix.rows != self.rank:
            raise ShapeError(f"Presentation of rank {self.rank} has {self.matrix.rows} rows")
        if self.matrix.cols < self.rank:
            raise ShapeError(f"Presentation of rank {self.rank} needs at least {self.rank} columns")

    def columns(self) -> List[FreeVector]:
        return [FreeVector(col) for col in self.matrix.columns()]

    def entries_in_maximal_ideal(self) -> bool:
        return all((0, 0) not in e for row in self.matrix.entries for e in row)


def _check_rank(r: int):
    if r < 2:
        raise RankTooSmall(f"Rank must be at least 2, got {r}")


def _check_mr_preconditions(i: MonomialIdeal, r: int):
    _check_rank(r)
    if not i.is_integrally_closed():
        raise NotIntegrallyClosed(f"{i} is not integrally closed")
    if i.order() < r:
        raise OrderTooSmall(f"{i} has order {i.order()} < rank {r}")


def decompose_monomial(m: Monomial, r: int) -> Tuple[int, Monomial]:
    """Row index and coefficient writing m over x^(r-1), ..., y^(r-1), y-row as low as possible"""
    row = min(m.b, r - 1)
    return row, Monomial(m.a - (r - 1 - row), m.b - row)


def decompose_poly(p: PolyElement, r: int) -> FreeVector:
    """Termwise decomposition of a polynomial of order >= r - 1"""
    entries = [RING.zero] * r
    for m, coeff in iter_terms(p):
        row, coefficient = decompose_monomial(m, r)
        entries[row] += coefficient.to_poly(coeff)
    return FreeVector(tuple(entries))


def build_mr(i: MonomialIdeal, r: int) -> ModulePresentation:
    """
    Presentation matrix of M_r(I).

    Args:
        i: Integrally closed m-primary monomial ideal
        r: Rank, at most order(i)

    Returns:
        ModulePresentation with n + 1 generator columns and r - 1 relation columns

    Raises:
        OrderTooSmall: if order(i) < r
        NotIntegrallyClosed: if i is not integrally closed
    """
    _check_mr_preconditions(i, r)
    generator_columns = [decompose_poly(g.to_poly(), r).entries for g in i.gens]
    matrix = PolyMatrix.from_columns(generator_columns).hstack(relation_matrix(r))
    presentation = ModulePresentation(rank=r, matrix=matrix, provenance=Provenance(source=str(i)))
    if not presentation.entries_in_maximal_ideal():
        raise VerificationError(f"M_{r}{i} has a unit entry")
    return presentation


def fitting_ideal(m: ModulePresentation, k: int) -> LocalIdeal:
    """Ideal of k x k minors, zero and repeated minors dropped"""
    if not 1 <= k <= m.rank:
        raise ShapeError(f"Fitting ideal index {k} outside 1..{m.rank}")
    minors: Dict[PolyElement, None] = {}
    for rows in combinations(range(m.matrix.rows), k):
        for cols in combinations(range(m.matrix.cols), k):
            value = det(m.matrix.submatrix(rows, cols))
            if value:
                minors.setdefault(value, None)
    return LocalIdeal(tuple(minors))


def phi(v: FreeVector, r: int) -> PolyElement:
    if v.rank != r:
        raise ShapeError(f"Vector of length {v.rank} paired against rank {r}")
    return sum((e * X ** (r - 1 - idx) * Y ** idx for idx, e in enumerate(v.entries)), RING.zero)


def member_mr(v: FreeVector, i: MonomialIdeal, r: int) -> bool:
    """v lies in M_r(I) iff every term of phi(v) lies in I"""
    _check_mr_preconditions(i, r)
    return i.contains_poly(phi(v, r))


def cofree_colength(i: MonomialIdeal, r: int) -> int:
    """lambda(F / M_r(I)) = lambda(R/I) - lambda(R/m^(r-1))"""
    _check_mr_preconditions(i, r)
    return i.colength() - comb(r, 2)


def buchsbaum_rim(i: MonomialIdeal, r: int) -> int:
    """e(M_r(I)) through the length-multiplicity identity for extremal modules"""
    _check_mr_preconditions(i, r)
    return i.multiplicity() - comb(r, 2)


def change_coords(m: ModulePresentation, q: PolyMatrix) -> ModulePresentation:
    """
    Rewrite a presentation in coordinates u, v with [x y] = [u v] q.

    The result is Sym^(r-1)(q) times the entrywise substituted matrix; u and v
    are printed as x and y again.
    """
    if q.shape != (2, 2):
        raise ShapeError(f"Coordinate change needs a 2x2 matrix, got {q.rows}x{q.cols}")
    if not all(is_constant(e) for row in q.entries for e in row):
        raise NotUnimodular("Only constant coordinate changes are supported")
    if not det(q):
        raise NotUnimodular("Coordinate change matrix is singular")
    substituted = m.matrix.map(lambda e: substitute(e, q))
    matrix = sym_power(q, m.rank - 1) @ substituted
    provenance = m.provenance or Provenance(source="presentation")
    rows = "; ".join(", ".join(format_poly(e) for e in row) for row in q.entries)
    return ModulePresentation(rank=m.rank, matrix=matrix, provenance=replace(provenance, coordinates=f"[{rows}]"))


def koszul_identity_holds(q: PolyMatrix, r: int) -> bool:
    """Sym^(r-1)(q) K(substituted) == det(q) K Sym^(r-2)(q)"""
    _check_rank(r)
    kos = relation_matrix(r)
    left = sym_power(q, r - 1) @ kos.map(lambda e: substitute(e, q))
    right = (kos @ sym_power(q, r - 2)).scale(det(q))
    return left == right


def presentation_span(m: ModulePresentation, bound: int) -> TruncationSpace:
    return truncated_span(m.matrix.columns(), bound, m.rank)


def module_contains_mpower(m: ModulePresentation, n: int) -> bool:
    """m^n F inside M, certified by Nakayama at bound n + 1"""
    space = presentation_span(m, n + 1)
    return all(
        space.contains_vector(FreeVector.unit(m.rank, comp, mono.to_poly()).entries)
        for comp in range(m.rank)
        for mono in monomials_of_degree(n)
    )


def presentation_colength(m: ModulePresentation, start: int = 1, cap: Optional[int] = None) -> int:
    """
    lambda(F/M) by truncated linear algebra on the presentation alone.

    Args:
        m: Module presentation
        start: First truncation bound to try
        cap: Largest bound tried (defaults to the local-ideal cap)

    Returns:
        Length of F/M
    """
    limit = resolve_truncation_cap(cap)
    for n in range(max(start, 1), limit + 1):
        if module_contains_mpower(m, n):
            return presentation_span(m, n).codimension
    raise VerificationError(f"No power of m up to m^{limit} times F lies in the module")


def truncated_member(v: FreeVector, m: ModulePresentation, bound: int) -> bool:
    """v in M + m^bound F"""
    return presentation_span(m, bound).contains_vector(v.entries)


def contains_m_times_free(i: MonomialIdeal, r: int) -> bool:
    """Every x e_k and y e_k lies in M_r(I)"""
    return all(
        member_mr(FreeVector.unit(r, comp, var), i, r)
        for comp in range(r)
        for var in (X, Y)
    )


def colon_inclusion_holds(i: MonomialIdeal, r: int) -> bool:
    """(I : m^(r-1)) F inside M_r(I)"""
    colon = i.colon_mpow(r - 1)
    return all(
        member_mr(FreeVector.unit(r, comp, g.to_poly()), i, r)
        for comp in range(r)
        for g in colon.gens
    )


def parameter_module(a: PolyElement, b: PolyElement, r: int) -> ModulePresentation:
    """Module generated by the decompositions of a and b and the Koszul relations"""
    _check_rank(r)
    for p in (a, b):
        if poly_order(to_poly(p)) < r:
            raise OrderTooSmall(f"{format_poly(to_poly(p))} has order below rank {r}")
    columns = [decompose_poly(to_poly(a), r).entries, decompose_poly(to_poly(b), r).entries]
    matrix = PolyMatrix.from_columns(columns).hstack(relation_matrix(r))
    source = f"({format_poly(to_poly(a))}, {format_poly(to_poly(b))})"
    return ModulePresentation(rank=r, matrix=matrix, provenance=Provenance(source=source))


def parameter_identity_holds(a: PolyElement, b: PolyElement, r: int, cap: Optional[int] = None) -> bool:
    """lambda(R/(a,b)) - lambda(R/I(P)) == C(r, 2) for the parameter module P"""
    minors = fitting_ideal(parameter_module(a, b, r), r)
    return LocalIdeal.from_polys([a, b]).local_colength(cap) - minors.local_colength(cap) == comb(r, 2)


def format_matrix(m: ModulePresentation) -> str:
    """Bracket layout, columns padded to a common width"""
    cells = m.matrix.to_strings()
    widths = [max(len(cells[i][j]) for i in range(m.matrix.rows)) for j in range(m.matrix.cols)]
    lines = []
    for row in cells:
        lines.append("[ " + "  ".join(cell.ljust(width) for cell, width in zip(row, widths)) + " ]")
    return "\n".join(lines)


def matrix_to_json(m: ModulePresentation) -> Dict[str, Any]:
    data: Dict[str, Any] = {
        "rank": m.rank,
        "rows": m.matrix.rows,
        "cols": m.matrix.cols,
        "matrix": m.matrix.to_strings(),
    }
    if m.provenance is not None:
        data["provenance"] = {
            "source": m.provenance.source,
            "rule": m.provenance.rule,
            "coordinates": m.provenance.coordinates,
        }
    return data
