#!/usr/bin/env python3
"""
Unit tests for zariski_lab.decide.

Run with:
python -m unittest discover tests
"""

import os
import sys
import unittest
from itertools import product

from hypothesis import given, settings

# Add project root to path for imports
project_root = os.path.abspath(os.path.join(os.path.dirname(__file__), ".."))
sys.path.insert(0, project_root)
sys.path.insert(0, os.path.dirname(os.path.abspath(__file__)))

from zariski_lab.decide import (
    Reason,
    Verdict,
    check_pair,
    decide_rank3,
    enumerate_splits,
    exists_rank_r,
)
from zariski_lab.errors import NotIntegrallyClosed, RankTooSmall
from zariski_lab.expressions import parse_ideal
from zariski_lab.monomial_ideal import mpower
from helpers import closed_ideals

DECISION_KEYS = {"input", "normalized", "order", "colength", "verdict", "reason", "splits", "notes"}


class RankThreeFamiliesTest(unittest.TestCase):

    def test_split_with_length_gap_exists(self):
        for m in range(2, 7):
            with self.subTest(m=m):
                i = parse_ideal(f"(x^{m},y)*IC(x^3,y^2)")
                self.assertEqual(i.colength(), m + 8)
                decision = decide_rank3(i)
                self.assertEqual(decision.verdict, Verdict.EXISTS)
                self.assertEqual(decision.reason, Reason.NO_QUALIFYING_SPLIT)
                self.assertEqual(len(decision.evidence), 1)
                check = decision.evidence[0].check
                self.assertEqual(check.lengths[1] + check.lengths[2] + check.lengths[3], m + 7)
                self.assertEqual(check.gap, 1)
                self.assertFalse(check.cond_a)

    def test_qualifying_split_rules_out(self):
        for m in range(2, 7):
            with self.subTest(m=m):
                decision = decide_rank3(parse_ideal(f"(x^{m},y)*IC(x^2,y^3)"))
                self.assertEqual(decision.verdict, Verdict.NOT_EXISTS)
                self.assertEqual(decision.reason, Reason.QUALIFYING_SPLIT)
                self.assertEqual(decision.witness.j, parse_ideal(f"(x^{m},y)"))
                self.assertEqual(decision.witness.k, parse_ideal("IC(x^2,y^3)"))

    def test_three_linear_factors_with_a_steep_one(self):
        for m, p, q in product(range(1, 4), repeat=3):
            with self.subTest(m=m, p=p, q=q):
                decision = decide_rank3(parse_ideal(f"(x^{m},y)*(x,y^{p})*(x,y^{q})"))
                self.assertEqual(decision.verdict, Verdict.NOT_EXISTS)

    def test_three_flat_factors_exist(self):
        for a, b, c in product(range(2, 5), repeat=3):
            with self.subTest(a=a, b=b, c=c):
                decision = decide_rank3(parse_ideal(f"(x,y^{a})*(x,y^{b})*(x,y^{c})"))
                self.assertEqual(decision.verdict, Verdict.EXISTS)
                self.assertIsNone(decision.witness)

    def test_initial_forms_note(self):
        decision = decide_rank3(parse_ideal("(x,y)*(x,y^2)*(x,y^3)"))
        self.assertEqual(decision.verdict, Verdict.NOT_EXISTS)
        self.assertTrue(any("initial forms" in note for note in decision.notes))


class OrderAndRankTest(unittest.TestCase):

    def test_order_above_rank(self):
        decision = exists_rank_r(mpower(5), 3)
        self.assertEqual(decision.verdict, Verdict.EXISTS)
        self.assertEqual(decision.reason, Reason.ORDER_GREATER_THAN_RANK)
        self.assertEqual(decision.evidence, ())

    def test_order_below_rank(self):
        decision = exists_rank_r(parse_ideal("(x^2,y)"), 3)
        self.assertEqual(decision.verdict, Verdict.NOT_EXISTS)
        self.assertEqual(decision.reason, Reason.ORDER_LESS_THAN_RANK)

    def test_pure_power_rank_three(self):
        decision = decide_rank3(mpower(3))
        self.assertEqual(decision.verdict, Verdict.NOT_EXISTS)
        self.assertEqual((decision.witness.j, decision.witness.k), (mpower(1), mpower(2)))
        self.assertTrue(any("I = m^3" in note for note in decision.notes))

    def test_rank_two(self):
        self.assertEqual(exists_rank_r(mpower(2), 2).verdict, Verdict.NOT_EXISTS)

    def test_rank_four_is_inconclusive(self):
        decision = exists_rank_r(mpower(4), 4)
        self.assertEqual(decision.verdict, Verdict.UNKNOWN)
        self.assertEqual(decision.reason, Reason.RANK_ABOVE_3_INCONCLUSIVE)
        self.assertTrue(any("I = m^4" in note for note in decision.notes))

    def test_preconditions(self):
        with self.assertRaises(RankTooSmall):
            exists_rank_r(mpower(3), 1)
        with self.assertRaises(NotIntegrallyClosed):
            decide_rank3(parse_ideal("(x^3,y^3)*(x^2,y^2)"))


class SplitTest(unittest.TestCase):

    def test_check_pair_lengths(self):
        check = check_pair(parse_ideal("(x^2,y)"), parse_ideal("IC(x^3,y^2)"))
        self.assertEqual(check.lengths, (10, 2, 5, 2))
        self.assertFalse(check.cond_a)
        # m(x^2,y) + IC(x^3,y^2) = (x^3,xy,y^2) misses x^2
        self.assertFalse(check.cond_b)
        self.assertFalse(check.qualifies)

    @settings(max_examples=100, deadline=None)
    @given(closed_ideals, closed_ideals)
    def test_check_pair_is_symmetric(self, j, k):
        forward, backward = check_pair(j, k), check_pair(k, j)
        self.assertEqual(forward.cond_a, backward.cond_a)
        self.assertEqual(forward.cond_b, backward.cond_b)
        self.assertEqual(forward.gap, backward.gap)
        self.assertEqual(forward.lengths, (backward.lengths[0], backward.lengths[2], backward.lengths[1], backward.lengths[3]))
        self.assertGreaterEqual(forward.gap, 0)

    def test_enumerate_splits(self):
        splits = enumerate_splits(parse_ideal("(x,y^2)*(x,y^3)*(x,y^4)"), 1, 2)
        self.assertEqual([str(s.j) for s in splits], ["(x,y^2)", "(x,y^3)", "(x,y^4)"])
        self.assertTrue(all(s.j * s.k == parse_ideal("(x,y^2)*(x,y^3)*(x,y^4)") for s in splits))

    def test_equal_orders_listed_once(self):
        splits = enumerate_splits(parse_ideal("(x,y)^2*(x,y^2)^2"), 2, 2)
        pairs = {(s.j, s.k) for s in splits}
        self.assertEqual(len(pairs), len(splits))
        self.assertFalse(any((s.k, s.j) in pairs and s.j != s.k for s in splits))

    def test_workers_give_same_decision(self):
        i = parse_ideal("(x,y^2)*(x,y^3)*(x,y^4)")
        self.assertEqual(exists_rank_r(i, 3, workers=3), exists_rank_r(i, 3, workers=1))

    def test_json_schema(self):
        data = decide_rank3(parse_ideal("(x^2,y)*IC(x^2,y^3)"), source="(x^2,y)*IC(x^2,y^3)").to_json()
        self.assertTrue(DECISION_KEYS.issubset(data))
        self.assertEqual(data["input"], "(x^2,y)*IC(x^2,y^3)")
        self.assertEqual(data["normalized"], "(x^4,x^2y,xy^3,y^4)")
        self.assertEqual(data["verdict"], "NOT_EXISTS")
        self.assertEqual(data["splits"][0]["J"], "(x^2,y)")
        self.assertTrue(data["splits"][0]["condA"] and data["splits"][0]["condB"])


if __name__ == "__main__":
    unittest.main()
