"""
Equality and containment of polynomial ideals in the local ring k[x,y]_(x,y).

Everything is reduced to exact linear algebra modulo m^N. A truncated image is
the span of an ideal (or of a submodule of R^r) inside R^r / m^N R^r; it is
computed by saturating the generators under multiplication by x and y and
keeping a reduced row-echelon basis (sympy DomainMatrix over QQ). Containment
of m^N is certified by Nakayama: m^N inside J + m^(N+1) forces m^N inside J.
"""

import os
from dataclasses import dataclass
from typing import Any, Dict, List, Optional, Sequence, Tuple

from sympy.polys.domains import QQ
from sympy.polys.matrices import DomainMatrix
from sympy.polys.rings import PolyElement

from .errors import EmptyIdeal, NotMPrimary
from .monomial_ideal import MonomialIdeal
from .polynomials import RING, format_poly, monomials_of_degree, to_poly

DEFAULT_TRUNCATION_CAP = 64
TRUNCATION_CAP_ENV = "ZLAB_TRUNCATION_CAP"

# (component, x-exponent, y-exponent)
Coordinate = Tuple[int, int, int]
SparseRow = Dict[int, Any]


def resolve_truncation_cap(cap: Optional[int] = None) -> int:
    """Explicit cap, else $ZLAB_TRUNCATION_CAP, else 64"""
    if cap is not None:
        return cap
    value = os.environ.get(TRUNCATION_CAP_ENV)
    if value is None or value == "":
        return DEFAULT_TRUNCATION_CAP
    try:
        parsed = int(value)
    except ValueError:
        raise ValueError(f"{TRUNCATION_CAP_ENV} must be a positive integer, got '{value}'")
    if parsed < 1:
        raise ValueError(f"{TRUNCATION_CAP_ENV} must be a positive integer, got '{value}'")
    return parsed


def coordinates(bound: int, rank: int = 1) -> List[Coordinate]:
    """Basis of R^rank / m^bound R^rank, component-major, then by degree"""
    return [(comp, m.a, m.b) for comp in range(rank) for n in range(bound) for m in monomials_of_degree(n)]


def _echelon(rows: List[SparseRow], width: int) -> Tuple[List[SparseRow], Tuple[int, ...]]:
    rows = [row for row in rows if row]
    if not rows:
        return [], ()
    dm = DomainMatrix({i: dict(row) for i, row in enumerate(rows)}, (len(rows), width), QQ)
    reduced, pivots = dm.rref()
    dense = reduced.to_list()
    basis = [{j: v for j, v in enumerate(dense[i]) if v} for i in range(len(pivots))]
    return basis, tuple(pivots)


@dataclass(frozen=True)
class TruncationSpace:
    """
    Image of a submodule of R^rank in R^rank / m^bound R^rank.

    basis holds the nonzero rows of the reduced row-echelon form, as sparse
    {column: coefficient} maps over the columns listed by coordinates().
    """
    bound: int
    rank: int
    basis: Tuple[Tuple[Tuple[int, Any], ...], ...]
    pivots: Tuple[int, ...]

    @property
    def dimension(self) -> int:
        return len(self.pivots)

    @property
    def ambient_dimension(self) -> int:
        return self.rank * self.bound * (self.bound + 1) // 2

    @property
    def codimension(self) -> int:
        return self.ambient_dimension - self.dimension

    def _index(self) -> Dict[Coordinate, int]:
        return {coord: i for i, coord in enumerate(coordinates(self.bound, self.rank))}

    def encode(self, vector: Sequence[PolyElement]) -> SparseRow:
        return encode(vector, self.bound, self._index())

    def reduce(self, row: SparseRow) -> SparseRow:
        """Remainder of a row after elimination against the echelon basis"""
        remainder = dict(row)
        for pivot, basis_row in zip(self.pivots, self.basis):
            factor = remainder.get(pivot)
            if not factor:
                continue
            for col, value in basis_row:
                updated = remainder.get(col, QQ.zero) - factor * value
                if updated:
                    remainder[col] = updated
                else:
                    remainder.pop(col, None)
        return remainder

    def contains_vector(self, vector: Sequence[PolyElement]) -> bool:
        return not self.reduce(self.encode(vector))

    def contains_poly(self, p: PolyElement) -> bool:
        return self.contains_vector([p])

    def same_span(self, other: "TruncationSpace") -> bool:
        return (self.bound, self.rank, self.pivots, self.basis) == (other.bound, other.rank, other.pivots, other.basis)

    def describe(self) -> str:
        """Echelon basis as text, one vector per line"""
        coords = coordinates(self.bound, self.rank)
        lines = [f"truncation bound {self.bound}, rank {self.rank}, dimension {self.dimension} of {self.ambient_dimension}"]
        for row in self.basis:
            components = [RING.zero] * self.rank
            for col, value in row:
                comp, a, b = coords[col]
                components[comp] += RING.from_dict({(a, b): value})
            text = ", ".join(format_poly(p) for p in components)
            lines.append(f"  [{text}]" if self.rank > 1 else f"  {text}")
        return "\n".join(lines)


def encode(vector: Sequence[PolyElement], bound: int, index: Dict[Coordinate, int]) -> SparseRow:
    row: SparseRow = {}
    for comp, p in enumerate(vector):
        for (a, b), coeff in to_poly(p).items():
            if a + b < bound:
                row[index[(comp, a, b)]] = coeff
    return row


def truncated_span(vectors: Sequence[Sequence[PolyElement]], bound: int, rank: int = 1) -> TruncationSpace:
    """
    Image of the submodule generated by vectors in R^rank / m^bound R^rank.

    The span of the truncated generators is closed under multiplication by
    x and y until the dimension stops growing.
    """
    if bound < 1:
        raise ValueError("Truncation bound must be >= 1")
    coords = coordinates(bound, rank)
    index = {coord: i for i, coord in enumerate(coords)}
    width = len(coords)

    def shift(row: SparseRow, da: int, db: int) -> SparseRow:
        shifted = {}
        for col, value in row.items():
            comp, a, b = coords[col]
            if a + da + b + db < bound:
                shifted[index[(comp, a + da, b + db)]] = value
        return shifted

    basis, pivots = _echelon([encode(v, bound, index) for v in vectors], width)
    while True:
        candidates = basis + [shift(row, 1, 0) for row in basis] + [shift(row, 0, 1) for row in basis]
        grown, grown_pivots = _echelon(candidates, width)
        if len(grown_pivots) == len(pivots):
            break
        basis, pivots = grown, grown_pivots

    frozen = tuple(tuple(sorted(row.items())) for row in basis)
    return TruncationSpace(bound=bound, rank=rank, basis=frozen, pivots=pivots)


@dataclass(frozen=True)
class LocalIdeal:
    """Ideal of the local ring given by polynomial generators"""
    gens: Tuple[PolyElement, ...]

    def __post_init__(self):
        nonzero = tuple(to_poly(g) for g in self.gens if g)
        if not nonzero:
            raise EmptyIdeal("A local ideal needs at least one nonzero generator")
        object.__setattr__(self, "gens", nonzero)

    @classmethod
    def from_polys(cls, polys: Sequence[Any]) -> "LocalIdeal":
        return cls(tuple(to_poly(p) for p in polys))

    @classmethod
    def from_monomial_ideal(cls, i: MonomialIdeal) -> "LocalIdeal":
        return cls(tuple(g.to_poly() for g in i.gens))

    def __str__(self) -> str:
        return "(" + ", ".join(format_poly(g) for g in self.gens) + ")"

    def truncated_image(self, n: int) -> TruncationSpace:
        return truncated_span([[g] for g in self.gens], n)

    def contains_mpower(self, n0: int) -> bool:
        if n0 < 1:
            raise ValueError("contains_mpower needs n0 >= 1")
        space = self.truncated_image(n0 + 1)
        return all(space.contains_poly(m.to_poly()) for m in monomials_of_degree(n0))

    def containment_index(self, cap: Optional[int] = None, start: int = 1) -> int:
        """Least N >= start with m^N inside the ideal, certified by Nakayama"""
        limit = resolve_truncation_cap(cap)
        for n in range(max(start, 1), limit + 1):
            if self.contains_mpower(n):
                return n
        raise NotMPrimary(f"No power of m up to m^{limit} lies in {self}")

    def local_colength(self, cap: Optional[int] = None) -> int:
        n = self.containment_index(cap)
        return self.truncated_image(n).codimension

    def equals_monomial(self, i: MonomialIdeal) -> bool:
        n0 = max(i.mem_index(), 1)
        if not self.contains_mpower(n0):
            return False
        return self.truncated_image(n0).same_span(LocalIdeal.from_monomial_ideal(i).truncated_image(n0))

    def equals(self, other: "LocalIdeal", cap: Optional[int] = None) -> bool:
        """Equality of two m-primary ideals in the local ring"""
        n = max(self.containment_index(cap), other.containment_index(cap))
        return self.truncated_image(n).same_span(other.truncated_image(n))


def truncated_image(j: LocalIdeal, n: int) -> TruncationSpace:
    return j.truncated_image(n)


def contains_mpower(j: LocalIdeal, n0: int) -> bool:
    return j.contains_mpower(n0)


def equals_monomial(j: LocalIdeal, i: MonomialIdeal) -> bool:
    return j.equals_monomial(i)


def local_colength(j: LocalIdeal, cap: Optional[int] = None) -> int:
    return j.local_colength(cap)
