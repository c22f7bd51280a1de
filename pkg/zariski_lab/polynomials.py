"""
Exact bivariate polynomial arithmetic over the rationals.

Polynomials are elements of the sparse sympy ring QQ[x,y] with graded
lexicographic order (x > y). Matrices over that ring are wrapped in
PolyMatrix, whose products and determinants go through sympy's DomainMatrix
(fraction-free elimination over the polynomial domain).
"""

import operator
from dataclasses import dataclass
from math import comb
from typing import Any, Iterator, List, Sequence, Tuple

from sympy.polys.domains import QQ
from sympy.polys.matrices import DomainMatrix
from sympy.polys.orderings import grlex
from sympy.polys.rings import PolyElement, ring

from .errors import OrderOfZero, ShapeError

RING, X, Y = ring("x,y", QQ, grlex)
DOMAIN = RING.to_domain()

# structural alias: a PolyElement of RING is the canonical polynomial form
BivariatePolynomial = PolyElement

_ARITH = {
    "add": operator.add,
    "sub": operator.sub,
    "mul": operator.mul,
}


@dataclass(frozen=True, order=True)
class Monomial:
    """x^a y^b"""
    a: int
    b: int

    def __post_init__(self):
        if self.a < 0 or self.b < 0:
            raise ValueError(f"Negative exponent in monomial ({self.a}, {self.b})")

    @property
    def degree(self) -> int:
        return self.a + self.b

    def divides(self, other: "Monomial") -> bool:
        return self.a <= other.a and self.b <= other.b

    def __mul__(self, other: "Monomial") -> "Monomial":
        return Monomial(self.a + other.a, self.b + other.b)

    def lcm(self, other: "Monomial") -> "Monomial":
        return Monomial(max(self.a, other.a), max(self.b, other.b))

    def swap(self) -> "Monomial":
        return Monomial(self.b, self.a)

    def to_poly(self, coeff: Any = 1) -> PolyElement:
        return RING.from_dict({(self.a, self.b): QQ(coeff)})

    def __str__(self) -> str:
        return format_monomial(self.a, self.b)


def format_monomial(a: int, b: int) -> str:
    """Render x^a y^b by juxtaposition, e.g. x^2y"""
    if a == 0 and b == 0:
        return "1"
    parts = []
    if a:
        parts.append("x" if a == 1 else f"x^{a}")
    if b:
        parts.append("y" if b == 1 else f"y^{b}")
    return "".join(parts)


def to_poly(value: Any) -> PolyElement:
    """Coerce ints, rationals, Monomials and ring elements into RING"""
    if isinstance(value, PolyElement) and value.ring == RING:
        return value
    if isinstance(value, Monomial):
        return value.to_poly()
    return RING(value)


def monomials_of_degree(n: int) -> List[Monomial]:
    """All monomials of total degree n, x-heavy first"""
    return [Monomial(n - j, j) for j in range(n + 1)]


def iter_terms(p: PolyElement) -> Iterator[Tuple[Monomial, Any]]:
    """(Monomial, coefficient) pairs in canonical order"""
    for (a, b), coeff in p.terms():
        yield Monomial(a, b), coeff


def poly_arith(p: PolyElement, q: PolyElement, op: str) -> PolyElement:
    """Exact add/sub/mul of two polynomials"""
    try:
        func = _ARITH[op]
    except KeyError:
        raise ValueError(f"Unknown polynomial operation: {op}")
    return func(to_poly(p), to_poly(q))


def poly_order(p: PolyElement) -> int:
    """m-adic order: the least total degree of a term"""
    if not p:
        raise OrderOfZero("The zero polynomial has no order")
    return min(a + b for a, b in p.keys())


def truncate(p: PolyElement, n: int) -> PolyElement:
    """Drop every term of total degree >= n"""
    return RING.from_dict({m: c for m, c in p.items() if m[0] + m[1] < n})


def format_poly(p: PolyElement) -> str:
    """Canonical text form: grlex order, x > y, exact rational coefficients"""
    if not p:
        return "0"
    pieces = []
    for (a, b), coeff in p.terms():
        negative = coeff < 0
        magnitude = QQ.to_sympy(-coeff if negative else coeff)
        mono = format_monomial(a, b)
        if mono == "1":
            body = str(magnitude)
        elif magnitude == 1:
            body = mono
        else:
            body = f"{magnitude}*{mono}"
        if not pieces:
            pieces.append(f"-{body}" if negative else body)
        else:
            pieces.append(f" - {body}" if negative else f" + {body}")
    return "".join(pieces)


@dataclass(frozen=True)
class PolyMatrix:
    """Dense rows x cols matrix of polynomials"""
    entries: Tuple[Tuple[PolyElement, ...], ...]

    def __post_init__(self):
        if not self.entries or not self.entries[0]:
            raise ShapeError("A PolyMatrix needs at least one row and one column")
        width = len(self.entries[0])
        if any(len(row) != width for row in self.entries):
            raise ShapeError("Ragged rows in PolyMatrix")
        coerced = tuple(tuple(to_poly(e) for e in row) for row in self.entries)
        object.__setattr__(self, "entries", coerced)

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[Any]]) -> "PolyMatrix":
        return cls(tuple(tuple(row) for row in rows))

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence[Any]]) -> "PolyMatrix":
        if not columns:
            raise ShapeError("A PolyMatrix needs at least one column")
        return cls(tuple(zip(*columns)))

    @classmethod
    def identity(cls, n: int) -> "PolyMatrix":
        return cls.from_rows([[1 if i == j else 0 for j in range(n)] for i in range(n)])

    @property
    def rows(self) -> int:
        return len(self.entries)

    @property
    def cols(self) -> int:
        return len(self.entries[0])

    @property
    def shape(self) -> Tuple[int, int]:
        return self.rows, self.cols

    def __getitem__(self, index: Tuple[int, int]) -> PolyElement:
        i, j = index
        return self.entries[i][j]

    def column(self, j: int) -> Tuple[PolyElement, ...]:
        return tuple(row[j] for row in self.entries)

    def columns(self) -> List[Tuple[PolyElement, ...]]:
        return [self.column(j) for j in range(self.cols)]

    def submatrix(self, rows: Sequence[int], cols: Sequence[int]) -> "PolyMatrix":
        return PolyMatrix(tuple(tuple(self.entries[i][j] for j in cols) for i in rows))

    def transpose(self) -> "PolyMatrix":
        return PolyMatrix(tuple(zip(*self.entries)))

    def hstack(self, other: "PolyMatrix") -> "PolyMatrix":
        if self.rows != other.rows:
            raise ShapeError(f"Cannot stack {self.shape} beside {other.shape}")
        return PolyMatrix(tuple(a + b for a, b in zip(self.entries, other.entries)))

    def scale(self, factor: Any) -> "PolyMatrix":
        f = to_poly(factor)
        return PolyMatrix(tuple(tuple(f * e for e in row) for row in self.entries))

    def map(self, func) -> "PolyMatrix":
        return PolyMatrix(tuple(tuple(func(e) for e in row) for row in self.entries))

    def to_domain_matrix(self) -> DomainMatrix:
        return DomainMatrix([list(row) for row in self.entries], self.shape, DOMAIN)

    @classmethod
    def from_domain_matrix(cls, dm: DomainMatrix) -> "PolyMatrix":
        return cls.from_rows(dm.to_list())

    def __matmul__(self, other: "PolyMatrix") -> "PolyMatrix":
        if self.cols != other.rows:
            raise ShapeError(f"Cannot multiply {self.shape} by {other.shape}")
        return PolyMatrix.from_domain_matrix(self.to_domain_matrix() * other.to_domain_matrix())

    def det(self) -> PolyElement:
        return det(self)

    def is_zero(self) -> bool:
        return all(not e for row in self.entries for e in row)

    def to_strings(self) -> List[List[str]]:
        return [[format_poly(e) for e in row] for row in self.entries]


def det(m: PolyMatrix) -> PolyElement:
    """Exact determinant (Bareiss elimination over QQ[x,y])"""
    if m.rows != m.cols:
        raise ShapeError(f"Determinant of non-square {m.rows}x{m.cols} matrix")
    return to_poly(m.to_domain_matrix().det())


def _power(p: PolyElement, n: int) -> PolyElement:
    # sympy refuses 0**0
    return RING.one if n == 0 else p ** n


def sym_power(q: PolyMatrix, k: int) -> PolyMatrix:
    """
    The (k+1)x(k+1) matrix Sym^k(q).

    With X = aU + bV and Y = cU + dV read off the columns of q, column j holds
    the coefficients of U^k, U^(k-1)V, ..., V^k in X^(k-j) Y^j.

    Args:
        q: 2x2 matrix [[a, c], [b, d]]
        k: Non-negative power

    Returns:
        Sym^k(q)
    """
    if q.shape != (2, 2):
        raise ShapeError(f"sym_power needs a 2x2 matrix, got {q.rows}x{q.cols}")
    if k < 0:
        raise ValueError("sym_power needs k >= 0")
    a, c = q[0, 0], q[0, 1]
    b, d = q[1, 0], q[1, 1]
    rows = []
    for i in range(k + 1):
        row = []
        for j in range(k + 1):
            entry = RING.zero
            for s in range(max(0, i - j), min(i, k - j) + 1):
                t = i - s
                entry += (comb(k - j, s) * comb(j, t)) * _power(a, k - j - s) * _power(b, s) * _power(c, j - t) * _power(d, t)
            row.append(entry)
        rows.append(row)
    return PolyMatrix.from_rows(rows)


def substitute(p: PolyElement, q: PolyMatrix) -> PolyElement:
    """Change of variables [x y] = [u v] q, with u, v written as x, y again"""
    if q.shape != (2, 2):
        raise ShapeError(f"substitute needs a 2x2 matrix, got {q.rows}x{q.cols}")
    a, c = q[0, 0], q[0, 1]
    b, d = q[1, 0], q[1, 1]
    return to_poly(p).compose([(X, a * X + b * Y), (Y, c * X + d * Y)])


def relation_matrix(r: int) -> PolyMatrix:
    """r x (r-1) Koszul relations among x^(r-1), ..., y^(r-1): y on the diagonal, -x below"""
    if r < 2:
        raise ShapeError("Relation matrix needs r >= 2")
    rows = [[RING.zero] * (r - 1) for _ in range(r)]
    for j in range(r - 1):
        rows[j][j] = Y
        rows[j + 1][j] = -X
    return PolyMatrix.from_rows(rows)


def is_constant(p: PolyElement) -> bool:
    return not p or (len(p) == 1 and (0, 0) in p)
