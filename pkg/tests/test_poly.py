import unittest

import sympy

from tangle_shadow.exceptions import BothZeroError, NotDivisibleError
from tangle_shadow.poly import (
    ONE,
    X,
    ZERO,
    Polynomial,
    coeff_row,
    content,
    div_by_x_exact,
    divide_exact,
    evaluate,
    from_row,
    from_string,
    gcd,
    power,
    primitive_part,
)


class TestPolynomial(unittest.TestCase):

    def test_canonical_form_drops_trailing_zeros(self):
        self.assertEqual(Polynomial([1, 2, 0, 0]).coeffs, (1, 2))
        self.assertEqual(Polynomial([0, 0]), ZERO)
        self.assertIsNone(ZERO.degree)
        self.assertEqual(Polynomial([3, 0, 1]).degree, 2)

    def test_arithmetic(self):
        p = from_string("x^2+4x+3")
        q = from_string("x+1")
        self.assertEqual(p + q, from_string("x^2+5x+4"))
        self.assertEqual(p - p, ZERO)
        self.assertEqual(p * q, from_string("x^3+5x^2+7x+3"))
        self.assertEqual(2 * q, from_string("2x+2"))
        self.assertEqual(1 - X, Polynomial([1, -1]))

    def test_power(self):
        self.assertEqual(power(X + 1, 4), Polynomial([1, 4, 6, 4, 1]))
        self.assertEqual(power(ZERO, 0), ONE)
        self.assertEqual(power(ZERO, 3), ZERO)
        with self.assertRaises(ValueError):
            power(X, -1)

    def test_evaluate(self):
        p = from_string("x^3+4x^2+3x")
        self.assertEqual(evaluate(p, 1), 8)
        self.assertEqual(p(2), 8 + 16 + 6)
        self.assertEqual(evaluate(ZERO, 5), 0)

    def test_div_by_x_exact(self):
        self.assertEqual(div_by_x_exact(from_string("x^3+2x")), from_string("x^2+2"))
        with self.assertRaises(NotDivisibleError):
            div_by_x_exact(from_string("x+1"))

    def test_divide_exact(self):
        self.assertEqual(divide_exact(from_string("x^2-1"), from_string("x-1")), from_string("x+1"))
        self.assertEqual(divide_exact(from_string("2x^2+2x"), from_string("2x")), from_string("x+1"))
        with self.assertRaises(NotDivisibleError):
            divide_exact(from_string("x^2+1"), from_string("x+1"))
        with self.assertRaises(NotDivisibleError):
            divide_exact(from_string("x+1"), from_string("2x+2"))
        with self.assertRaises(ZeroDivisionError):
            divide_exact(X, ZERO)

    def test_content_and_primitive_part(self):
        p = from_string("-4x^2+6x-2")
        self.assertEqual(content(p), 2)
        self.assertEqual(primitive_part(p), from_string("2x^2-3x+1"))
        self.assertEqual(content(ZERO), 0)

    def test_gcd(self):
        cases = [
            ("x^2-1", "x^2+2x+1", "x+1"),
            ("2x+2", "4x+4", "2x+2"),
            ("x^3+x", "x^2", "x"),
            ("x^2+3x+2", "x^2+4x+3", "x+1"),
            ("-x", "0", "x"),
            ("6", "4", "2"),
            ("x^2+1", "x+1", "1"),
        ]
        for p, q, expected in cases:
            with self.subTest(p=p, q=q):
                self.assertEqual(gcd(from_string(p), from_string(q)), from_string(expected))

    def test_gcd_of_zeros(self):
        with self.assertRaises(BothZeroError):
            gcd(ZERO, ZERO)

    def test_gcd_agrees_with_sympy(self):
        x = sympy.Symbol("x")
        pairs = [
            ("x^4+3x^3+3x^2+x", "x^3+2x^2+x"),
            ("2x^3+4x^2+2x", "x^3+4x^2+3x"),
            ("x^5+4x^4+6x^3+4x^2+x", "2x^2+2x"),
            ("3x^4+5x^3+x^2+x", "9x^2+3x"),
        ]
        for p, q in pairs:
            with self.subTest(p=p, q=q):
                ours = gcd(from_string(p), from_string(q))
                theirs = sympy.Poly(sympy.gcd(
                    sympy.Poly(list(reversed(from_string(p).coeffs)), x),
                    sympy.Poly(list(reversed(from_string(q).coeffs)), x),
                ), x)
                self.assertEqual(list(reversed(ours.coeffs)), [int(c) for c in theirs.all_coeffs()])

    def test_coeff_row(self):
        self.assertEqual(coeff_row(from_string("x^2+2x"), 4), [0, 2, 1, 0, 0])
        self.assertEqual(coeff_row(ZERO, 1), [0, 0])
        self.assertEqual(from_row([0, 1, 4, 6, 4, 1]), X * power(X + 1, 4))


class TestFromString(unittest.TestCase):

    def test_forms(self):
        cases = {
            "x^2+4x+3": [3, 4, 1],
            "2x^3 - x": [0, -1, 0, 2],
            "0": [],
            "7": [7],
            "-x": [0, -1],
            "x+3x+2": [2, 4],
            "2*x^2+x^0": [1, 0, 2],
        }
        for text, coeffs in cases.items():
            with self.subTest(text=text):
                self.assertEqual(from_string(text), Polynomial(coeffs))

    def test_rejects_garbage(self):
        for text in ["", "y+1", "x^", "x²+1", "x++1", "3x-"]:
            with self.subTest(text=text):
                with self.assertRaises(ValueError):
                    from_string(text)


if __name__ == '__main__':
    unittest.main()
