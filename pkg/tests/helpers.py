"""Shared generators for the zariski_lab tests."""

import os
import random
import sys
from math import gcd
from typing import List

from hypothesis import strategies as st

project_root = os.path.abspath(os.path.join(os.path.dirname(__file__), ".."))
sys.path.insert(0, project_root)

from zariski_lab.monomial_ideal import MonomialIdeal, SimpleFactor, product_of_factors
from zariski_lab.polynomials import Monomial, PolyMatrix

EXPECTED_VALUES_FILE = os.path.join(os.path.dirname(os.path.abspath(__file__)), "expected_values.json")

# simple factors IC(x^c, y^d) with small exponents
simple_factors = (
    st.tuples(st.integers(1, 4), st.integers(1, 4))
    .filter(lambda t: gcd(*t) == 1)
    .map(lambda t: SimpleFactor(*t))
)

closed_ideals = st.lists(simple_factors, min_size=1, max_size=3).map(product_of_factors)


@st.composite
def primary_ideals(draw, max_exponent: int = 4):
    """m-primary monomial ideals, not necessarily integrally closed"""
    p = draw(st.integers(1, max_exponent))
    q = draw(st.integers(1, max_exponent))
    extra = draw(st.lists(
        st.tuples(st.integers(0, max_exponent), st.integers(0, max_exponent)), max_size=4))
    gens = [Monomial(p, 0), Monomial(0, q)] + [Monomial(a, b) for a, b in extra]
    return MonomialIdeal(tuple(gens))


@st.composite
def unimodular_matrices(draw):
    """Integer 2x2 matrices of determinant +-1 built from elementary moves"""
    rows = [[1, 0], [0, 1]]
    for move, k in draw(st.lists(st.tuples(st.sampled_from(["add01", "add10", "swap"]),
                                           st.integers(-2, 2)), max_size=5)):
        if move == "add01":
            rows[0] = [rows[0][0] + k * rows[1][0], rows[0][1] + k * rows[1][1]]
        elif move == "add10":
            rows[1] = [rows[1][0] + k * rows[0][0], rows[1][1] + k * rows[0][1]]
        else:
            rows = [rows[1], rows[0]]
    return PolyMatrix.from_rows(rows)


def random_closed_ideal(rng: random.Random, min_order: int = 1, max_exponent: int = 3) -> MonomialIdeal:
    """Product of random simple factors with order at least min_order"""
    factors: List[SimpleFactor] = []
    while sum(f.order() for f in factors) < min_order or (len(factors) < 3 and rng.random() < 0.5):
        c, d = rng.randint(1, max_exponent), rng.randint(1, max_exponent)
        if gcd(c, d) == 1:
            factors.append(SimpleFactor(c, d))
    return product_of_factors(factors)


def random_corpus(seed: int, count: int, ranks=(2, 3, 4)):
    """(ideal, rank) pairs with order(ideal) >= rank, deterministic in seed"""
    rng = random.Random(seed)
    corpus = []
    for idx in range(count):
        r = ranks[idx % len(ranks)]
        corpus.append((random_closed_ideal(rng, min_order=r), r))
    return corpus
