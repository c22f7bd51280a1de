#!/usr/bin/env python3
"""
Unit tests for zariski_lab.expressions.

Run with:
python -m unittest discover tests
"""

import os
import sys
import unittest

from sympy.polys.domains import QQ

# Add project root to path for imports
project_root = os.path.abspath(os.path.join(os.path.dirname(__file__), ".."))
sys.path.insert(0, project_root)

from zariski_lab.errors import ParseError
from zariski_lab.expressions import (
    IC,
    Gen,
    MaxIdeal,
    Power,
    Product,
    evaluate,
    format_expr,
    format_vector,
    parse,
    parse_ideal,
    parse_polynomial,
    parse_vector,
)
from zariski_lab.monomial_ideal import mpower
from zariski_lab.polynomials import RING, X, Y, Monomial, format_poly

CORPUS_EXPRESSIONS = [
    "(x^2,y)*IC(x^3,y^2)",
    "(x^2,y)*IC(x^2,y^3)",
    "m^3",
    "(x,y^2)*(x,y^3)*(x,y^4)",
    "IC((x^2,y)*(x,y^3))",
    "(x^5,x^3y,x^2y^2,y^3)",
    "(x^2,y)^2*m",
]


class ParseIdealTest(unittest.TestCase):

    def test_product_with_closure(self):
        expr = parse("(x^2,y)*IC(x^3,y^2)")
        self.assertEqual(expr, Product(Gen((Monomial(2, 0), Monomial(0, 1))),
                                       IC(Gen((Monomial(3, 0), Monomial(0, 2))))))

    def test_maximal_ideal_power(self):
        self.assertEqual(parse("m^3"), Power(MaxIdeal(), 3))
        self.assertEqual(evaluate(parse("m^3")), mpower(3))

    def test_juxtaposed_and_starred_monomials(self):
        self.assertEqual(parse("(x^2y, x^2*y)"), Gen((Monomial(2, 1), Monomial(2, 1))))

    def test_whitespace_is_ignored(self):
        self.assertEqual(parse(" ( x^2 , y ) * IC( x^3 , y^2 ) "), parse("(x^2,y)*IC(x^3,y^2)"))

    def test_unclosed_list(self):
        with self.assertRaises(ParseError) as ctx:
            parse("(x^2,")
        self.assertEqual(ctx.exception.column, 6)

    def test_missing_exponent(self):
        with self.assertRaises(ParseError) as ctx:
            parse("m^")
        self.assertEqual(ctx.exception.column, 3)

    def test_garbage(self):
        for text in ("", "(z)", "(x,y)(x,y)", "IC x"):
            with self.subTest(text=text), self.assertRaises(ParseError):
                parse(text)

    def test_round_trip(self):
        for text in CORPUS_EXPRESSIONS:
            with self.subTest(text=text):
                expr = parse(text)
                self.assertEqual(parse(format_expr(expr)), expr)

    def test_normalization(self):
        self.assertEqual(str(parse_ideal("(x^2,y)*IC(x^3,y^2)")), "(x^5,x^3y,x^2y^2,y^3)")
        self.assertEqual(str(parse_ideal("(x^2,y)*IC(x^2,y^3)")), "(x^4,x^2y,xy^3,y^4)")
        self.assertEqual(parse_ideal("IC((x^2,y)*(x,y^3))"), parse_ideal("(x^2,y)*(x,y^3)"))


class ParsePolynomialTest(unittest.TestCase):

    def test_terms(self):
        self.assertEqual(parse_polynomial("3*x^2*y - 1/2*xy + 7"), 3 * X**2 * Y - QQ(1, 2) * X * Y + 7)
        self.assertEqual(parse_polynomial("x^2y"), X**2 * Y)
        self.assertEqual(parse_polynomial("-x"), -X)
        self.assertEqual(parse_polynomial("0"), RING.zero)

    def test_round_trip(self):
        for p in (X**3 + Y**4, 3 * X**2 * Y - QQ(1, 2) * X * Y, -X + 7, Y**3 - X**4):
            with self.subTest(p=format_poly(p)):
                self.assertEqual(parse_polynomial(format_poly(p)), p)

    def test_errors(self):
        for text in ("x^", "1/0", "x +", "2**x"):
            with self.subTest(text=text), self.assertRaises(ParseError):
                parse_polynomial(text)

    def test_vector(self):
        v = parse_vector("x^3; 0; y")
        self.assertEqual(v.entries, (X**3, RING.zero, Y))
        self.assertEqual(format_vector(v), "x^3;0;y")

    def test_vector_error_column(self):
        with self.assertRaises(ParseError) as ctx:
            parse_vector("x;y^")
        self.assertEqual(ctx.exception.column, 5)


if __name__ == "__main__":
    unittest.main()
