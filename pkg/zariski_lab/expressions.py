"""
Text syntax for ideals and polynomials.

Ideal expressions:
    Expr    := Term ('*' Term)*
    Term    := Atom ('^' UINT)?
    Atom    := '(' MonList ')' | 'IC' '(' MonList ')' | 'IC' '(' Expr ')' | 'm'
    MonList := Mon (',' Mon)*
    Mon     := x^a y^b written by juxtaposition or with '*', e.g. x^2y, x^2*y, y

Polynomials: signed sums of terms like 3*x^2*y, 1/2*xy, -x, 7.
"""

from dataclasses import dataclass
from functools import reduce
from typing import List, Tuple, Union

from pyparsing import (
    Keyword,
    Literal,
    Optional,
    ParseBaseException,
    ParseException,
    ParserElement,
    Regex,
    Suppress,
    Word,
    ZeroOrMore,
    Forward,
    nums,
    one_of,
)
from sympy.polys.domains import QQ
from sympy.polys.rings import PolyElement

from .errors import ParseError
from .monomial_ideal import MonomialIdeal, mpower
from .module_lab import FreeVector
from .polynomials import RING, Monomial, format_poly


@dataclass(frozen=True)
class Gen:
    monomials: Tuple[Monomial, ...]


@dataclass(frozen=True)
class IC:
    inner: "IdealExpr"


@dataclass(frozen=True)
class Product:
    left: "IdealExpr"
    right: "IdealExpr"


@dataclass(frozen=True)
class Power:
    base: "IdealExpr"
    exponent: int


@dataclass(frozen=True)
class MaxIdeal:
    pass


IdealExpr = Union[Gen, IC, Product, Power, MaxIdeal]


def _factor_action(toks):
    exponent = toks[1] if len(toks) > 1 else 1
    return Monomial(exponent, 0) if toks[0] == "x" else Monomial(0, exponent)


def _monomial_action(toks):
    return reduce(lambda m, n: m * n, toks, Monomial(0, 0))


def _term_action(toks):
    return Power(toks[0], toks[1]) if len(toks) > 1 else toks[0]


def _product_action(toks):
    return reduce(Product, toks)


def _coefficient_action(s, loc, toks):
    text = toks[0]
    if "/" in text:
        num, den = text.split("/")
        if int(den) == 0:
            raise ParseException(s, loc, "Zero denominator")
        return QQ(int(num), int(den))
    return QQ(int(text))


def _poly_term_action(toks):
    coeff = QQ(1)
    mono = Monomial(0, 0)
    for tok in toks:
        if isinstance(tok, Monomial):
            mono = tok
        else:
            coeff = tok
    return RING.from_dict({(mono.a, mono.b): coeff})


def _poly_action(toks):
    total = RING.zero
    sign = 1
    for tok in toks:
        if isinstance(tok, str):
            sign = -1 if tok == "-" else 1
        else:
            total += tok if sign > 0 else -tok
            sign = 1
    return total


def make_grammar() -> Tuple[ParserElement, ParserElement]:
    """Build the ideal-expression and polynomial grammars"""
    uint = Word(nums).set_parse_action(lambda t: int(t[0]))
    variable = Literal("x") | Literal("y")
    factor = variable + Optional(Suppress("^") - uint)
    factor.set_parse_action(_factor_action)
    monomial = factor + ZeroOrMore(Optional(Suppress("*")) + factor)
    monomial.set_parse_action(_monomial_action)

    mon_list = monomial + ZeroOrMore(Suppress(",") - monomial)
    mon_list.set_parse_action(lambda t: Gen(tuple(t)))

    expr = Forward()
    generators = Suppress("(") + mon_list + Suppress(")")
    closure = Suppress(Keyword("IC")) + Suppress("(") + (mon_list | expr) + Suppress(")")
    closure.set_parse_action(lambda t: IC(t[0]))
    maximal = Keyword("m").set_parse_action(lambda t: MaxIdeal())
    atom = closure | generators | maximal
    term = atom + Optional(Suppress("^") - uint)
    term.set_parse_action(_term_action)
    expr <<= term + ZeroOrMore(Suppress("*") - term)
    expr.set_parse_action(_product_action)

    coefficient = Regex(r"\d+(/\d+)?").set_parse_action(_coefficient_action)
    poly_term = (coefficient + Optional(Optional(Suppress("*")) + monomial)) | monomial
    poly_term.set_parse_action(_poly_term_action)
    sign = one_of("+ -")
    polynomial = Optional(sign) + poly_term + ZeroOrMore(sign - poly_term)
    polynomial.set_parse_action(_poly_action)
    return expr, polynomial


IDEAL_GRAMMAR, POLY_GRAMMAR = make_grammar()


def _raise_parse_error(text: str, error: ParseBaseException, offset: int = 0):
    rest = text[error.loc:].strip()
    token = rest.split()[0] if rest else ""
    raise ParseError("Syntax error", error.col + offset, token[:12]) from None


def parse(text: str) -> IdealExpr:
    """Parse an ideal expression such as (x^2,y)*IC(x^3,y^2)"""
    try:
        return IDEAL_GRAMMAR.parse_string(text, parse_all=True)[0]
    except ParseBaseException as e:
        _raise_parse_error(text, e)


def parse_polynomial(text: str, offset: int = 0) -> PolyElement:
    """Parse a polynomial; offset shifts reported columns"""
    try:
        return POLY_GRAMMAR.parse_string(text, parse_all=True)[0]
    except ParseBaseException as e:
        _raise_parse_error(text, e, offset)


def parse_vector(text: str) -> FreeVector:
    """Parse 'p1;p2;...;pr' into a FreeVector"""
    entries: List[PolyElement] = []
    offset = 0
    for piece in text.split(";"):
        entries.append(parse_polynomial(piece, offset))
        offset += len(piece) + 1
    return FreeVector(tuple(entries))


def format_expr(e: IdealExpr) -> str:
    """Inverse of parse"""
    if isinstance(e, Gen):
        return "(" + ",".join(str(m) for m in e.monomials) + ")"
    if isinstance(e, IC):
        if isinstance(e.inner, Gen):
            return "IC" + format_expr(e.inner)
        return "IC(" + format_expr(e.inner) + ")"
    if isinstance(e, Product):
        return format_expr(e.left) + "*" + format_expr(e.right)
    if isinstance(e, Power):
        return f"{format_expr(e.base)}^{e.exponent}"
    if isinstance(e, MaxIdeal):
        return "m"
    raise TypeError(f"Not an ideal expression: {e!r}")


def evaluate(e: IdealExpr) -> MonomialIdeal:
    """Evaluate to a minimalized monomial ideal"""
    if isinstance(e, Gen):
        return MonomialIdeal.from_generators(e.monomials)
    if isinstance(e, IC):
        return evaluate(e.inner).integral_closure()
    if isinstance(e, Product):
        return evaluate(e.left).product(evaluate(e.right))
    if isinstance(e, Power):
        return evaluate(e.base).power(e.exponent)
    if isinstance(e, MaxIdeal):
        return mpower(1)
    raise TypeError(f"Not an ideal expression: {e!r}")


def parse_ideal(text: str) -> MonomialIdeal:
    return evaluate(parse(text))


def format_vector(v: FreeVector) -> str:
    return ";".join(format_poly(e) for e in v.entries)
