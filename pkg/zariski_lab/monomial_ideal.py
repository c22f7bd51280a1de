"""
m-primary monomial ideals of k[x,y]_(x,y).

An ideal is stored by its staircase corners (minimal generators), sorted by
decreasing x-exponent. Integral closure, multiplicity and Zariski
factorization are read off the Newton polygon, the lower convex hull of the
generator exponents.
"""

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from math import gcd, lcm
from typing import Iterable, List, Sequence, Tuple

from sympy.polys.rings import PolyElement

from .errors import EmptyIdeal, NotIntegrallyClosed, NotMPrimary, VerificationError
from .polynomials import Monomial, iter_terms, monomials_of_degree

Point = Tuple[int, int]


def minimalize(monomials: Iterable[Monomial]) -> Tuple[Monomial, ...]:
    """Divisibility-minimal antichain, sorted by decreasing x-exponent"""
    # after sorting by (a, b) a monomial is redundant iff some earlier kept one has b <= its b
    kept: List[Monomial] = []
    for m in sorted(set(monomials)):
        if not kept or m.b < kept[-1].b:
            kept.append(m)
    return tuple(reversed(kept))


def _cross(o: Point, a: Point, b: Point) -> int:
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def lower_hull(points: Iterable[Point]) -> List[Point]:
    """Lower convex chain of the points, left to right (monotone chain)"""
    lower: List[Point] = []
    for p in sorted(set(points)):
        while len(lower) >= 2 and _cross(lower[-2], lower[-1], p) <= 0:
            lower.pop()
        lower.append(p)
    return lower


@dataclass(frozen=True)
class MonomialIdeal:
    """An m-primary monomial ideal given by its minimal generators"""
    gens: Tuple[Monomial, ...]

    def __post_init__(self):
        if not self.gens:
            raise EmptyIdeal("A monomial ideal needs at least one generator")
        gens = minimalize(self.gens)
        if gens[0].b != 0 or gens[-1].a != 0:
            raise NotMPrimary(f"Ideal {format_generators(gens)} is not m-primary")
        object.__setattr__(self, "gens", gens)

    @classmethod
    def from_generators(cls, monomials: Sequence[Monomial]) -> "MonomialIdeal":
        return cls(tuple(monomials))

    @classmethod
    def unit(cls) -> "MonomialIdeal":
        return cls((Monomial(0, 0),))

    def __str__(self) -> str:
        return format_generators(self.gens)

    def __repr__(self) -> str:
        return f"MonomialIdeal{format_generators(self.gens)}"

    @property
    def is_unit(self) -> bool:
        return self.gens == (Monomial(0, 0),)

    def sort_key(self) -> Tuple:
        """Canonical ordering: order, colength, then exponents"""
        return (self.order(), self.colength(), tuple((g.a, g.b) for g in self.gens))

    # --- membership -----------------------------------------------------

    def contains(self, m: Monomial) -> bool:
        return any(g.divides(m) for g in self.gens)

    def contains_poly(self, p: PolyElement) -> bool:
        """Termwise membership of a polynomial"""
        return all(self.contains(m) for m, _ in iter_terms(p))

    def __contains__(self, m: Monomial) -> bool:
        return self.contains(m)

    def issubset(self, other: "MonomialIdeal") -> bool:
        return all(other.contains(g) for g in self.gens)

    # --- arithmetic -----------------------------------------------------

    def sum(self, other: "MonomialIdeal") -> "MonomialIdeal":
        return MonomialIdeal(self.gens + other.gens)

    def product(self, other: "MonomialIdeal") -> "MonomialIdeal":
        return MonomialIdeal(tuple(g * h for g in self.gens for h in other.gens))

    __add__ = sum
    __mul__ = product

    def power(self, n: int) -> "MonomialIdeal":
        result = MonomialIdeal.unit()
        for _ in range(n):
            result = result.product(self)
        return result

    def intersection(self, other: "MonomialIdeal") -> "MonomialIdeal":
        return MonomialIdeal(tuple(g.lcm(h) for g in self.gens for h in other.gens))

    def colon_monomial(self, m: Monomial) -> "MonomialIdeal":
        """(I : m)"""
        return MonomialIdeal(tuple(Monomial(max(g.a - m.a, 0), max(g.b - m.b, 0)) for g in self.gens))

    def colon_mpow(self, k: int) -> "MonomialIdeal":
        """(I : m^k) = {u : u m^k in I}"""
        if k == 0:
            return self
        return reduce(MonomialIdeal.intersection, (self.colon_monomial(m) for m in monomials_of_degree(k)))

    def swap(self) -> "MonomialIdeal":
        """Exchange the roles of x and y"""
        return MonomialIdeal(tuple(g.swap() for g in self.gens))

    # --- numerical invariants -------------------------------------------

    def num_generators(self) -> int:
        return len(self.gens)

    def order(self) -> int:
        return min(g.degree for g in self.gens)

    def colength(self) -> int:
        """Number of monomials outside the ideal"""
        # gens run by increasing y: for b_i <= y < b_{i+1} the missing x-exponents are those below a_i
        total = 0
        for lower, upper in zip(self.gens, self.gens[1:]):
            total += lower.a * (upper.b - lower.b)
        return total

    def mem_index(self) -> int:
        """Least N with m^N inside the ideal"""
        n = self.order()
        while not all(self.contains(m) for m in monomials_of_degree(n)):
            n += 1
        return n

    def initial_degree_dim(self) -> int:
        """Number of minimal generators in the least degree"""
        n = self.order()
        return sum(1 for g in self.gens if g.degree == n)

    # --- Newton polygon -------------------------------------------------

    def newton_vertices(self) -> List[Point]:
        """Vertices of the Newton polygon from (0, b) down to (a, 0)"""
        return lower_hull((g.a, g.b) for g in self.gens)

    def newton_edges(self) -> List[Tuple[Point, Point]]:
        vertices = self.newton_vertices()
        return list(zip(vertices, vertices[1:]))

    def integral_closure(self) -> "MonomialIdeal":
        if self.is_unit:
            return self
        edges = self.newton_edges()
        height = self.gens[-1].b
        corners = []
        for q in range(height + 1):
            p_min = 0
            for (x1, y1), (x2, y2) in edges:
                dx, dy = x2 - x1, y1 - y2
                num = x1 * dy + dx * (y1 - q)
                p_min = max(p_min, -(-num // dy))
            corners.append(Monomial(p_min, q))
        return MonomialIdeal(tuple(corners))

    def is_integrally_closed(self) -> bool:
        return self.integral_closure() == self

    def multiplicity(self) -> int:
        """e(I): twice the area cut off by the Newton polygon"""
        if self.is_unit:
            return 0
        polygon = [(0, 0)] + list(reversed(self.newton_vertices()))
        twice_area = 0
        for (x1, y1), (x2, y2) in zip(polygon, polygon[1:] + polygon[:1]):
            twice_area += x1 * y2 - x2 * y1
        return abs(twice_area)

    def zariski_factor(self) -> Tuple["SimpleFactor", ...]:
        """
        Factor an integrally closed ideal into simple integrally closed ideals.

        Each Newton polygon edge with direction (c, -d) contributes gcd(c, d)
        copies of IC(x^(c/g), y^(d/g)), steepest edge first. The product of the
        factors is recomputed and compared with the ideal.

        Returns:
            Tuple of SimpleFactor, empty for the unit ideal

        Raises:
            NotIntegrallyClosed: if the ideal is not integrally closed
            VerificationError: if the recomposed product differs
        """
        if not self.is_integrally_closed():
            raise NotIntegrallyClosed(f"{self} is not integrally closed")
        factors: List[SimpleFactor] = []
        for (x1, y1), (x2, y2) in self.newton_edges():
            dx, dy = x2 - x1, y1 - y2
            g = gcd(dx, dy)
            factors.extend([SimpleFactor(dx // g, dy // g)] * g)
        recomposed = product_of_factors(factors)
        if recomposed != self:
            raise VerificationError(f"Factors of {self} multiply to {recomposed}")
        return tuple(factors)


@dataclass(frozen=True, order=True)
class SimpleFactor:
    """IC(x^c, y^d) with gcd(c, d) = 1"""
    c: int
    d: int

    def __post_init__(self):
        if self.c < 1 or self.d < 1 or gcd(self.c, self.d) != 1:
            raise ValueError(f"SimpleFactor needs coprime positive exponents, got ({self.c}, {self.d})")

    def order(self) -> int:
        return min(self.c, self.d)

    def slope_key(self) -> Tuple[Fraction, int]:
        # steeper edges (larger d/c) sort first
        return (-Fraction(self.d, self.c), self.c)

    def ideal(self) -> "MonomialIdeal":
        return MonomialIdeal((Monomial(self.c, 0), Monomial(0, self.d))).integral_closure()

    def __str__(self) -> str:
        if self.c == 1 or self.d == 1:
            return format_generators((Monomial(self.c, 0), Monomial(0, self.d)))
        return "IC" + format_generators((Monomial(self.c, 0), Monomial(0, self.d)))


def product_of_factors(factors: Iterable[SimpleFactor]) -> MonomialIdeal:
    result = MonomialIdeal.unit()
    for factor in factors:
        result = result.product(factor.ideal())
    return result


def factor_counter(factors: Iterable[SimpleFactor]) -> Counter:
    return Counter(factors)


def format_generators(gens: Sequence[Monomial]) -> str:
    return "(" + ",".join(str(g) for g in gens) + ")"


def from_generators(monomials: Sequence[Monomial]) -> MonomialIdeal:
    return MonomialIdeal.from_generators(monomials)


def mpower(k: int) -> MonomialIdeal:
    """m^k, all monomials of degree k"""
    return MonomialIdeal(tuple(monomials_of_degree(k)))


def closure_membership_oracle(v: Monomial, i: MonomialIdeal) -> bool:
    """
    Decide whether x^v is integral over i by testing (x^v)^n in i^n.

    n runs up to the lcm of the vertical drops of the Newton polygon edges,
    which is enough for every point of the closure.
    """
    if i.is_unit:
        return True
    bound = reduce(lcm, (y1 - y2 for (_, y1), (_, y2) in i.newton_edges()), 1)
    power = MonomialIdeal.unit()
    for n in range(1, bound + 1):
        power = power.product(i)
        if power.contains(Monomial(n * v.a, n * v.b)):
            return True
    return False
