import unittest

from tangle_shadow.closures import close, closure_from_formula, repeat_base, repeat_closure, repeat_pair
from tangle_shadow.models import ZERO_PAIR, BracketPair, ClosureKind
from tangle_shadow.poly import X, coeff_row, from_string
from tangle_shadow.tangle import KNOT_BRACKETS, evaluate, hsum

N, D, R = ClosureKind.NUMERATOR, ClosureKind.DENOMINATOR, ClosureKind.R_CLOSURE


class TestClose(unittest.TestCase):

    def test_closures_of_twists(self):
        cases = [
            ("[1]", N, "K1"),
            ("[1]", D, "K1"),
            ("[2]", D, "K2"),
            ("[2]", N, "K3"),
            ("[3]", D, "K4"),
            ("[3]", N, "K5"),
            ("[2]#K1", N, "K6"),
        ]
        for text, kind, knot in cases:
            with self.subTest(text=text, kind=kind):
                self.assertEqual(close(evaluate(text), kind), KNOT_BRACKETS[knot])

    def test_r_closure_is_numerator_plus_denominator(self):
        for text in ["[1]", "[1]*[2]", "1/[3]#K1", "[inf]", "[0]"]:
            with self.subTest(text=text):
                p = evaluate(text)
                self.assertEqual(close(p, R), close(p, N) + close(p, D))

    def test_r_closure_is_numerator_of_sum_with_twist(self):
        p = evaluate("[1]*[2]")
        self.assertEqual(close(p, R), close(hsum(p, evaluate("[1]")), N))

    def test_kind_from_tag(self):
        self.assertIs(ClosureKind.from_tag("n"), N)
        self.assertIs(ClosureKind.from_tag("DENOMINATOR"), D)
        with self.assertRaises(ValueError):
            ClosureKind.from_tag("Q")


class TestRepeat(unittest.TestCase):

    def test_repeat_pair_of_twist(self):
        one = evaluate("[1]")
        for n in range(5):
            with self.subTest(n=n):
                self.assertEqual(repeat_pair(one, n), evaluate(f"[{n}]"))

    def test_repeat_pair_rejects_negative(self):
        with self.assertRaises(ValueError):
            repeat_pair(evaluate("[1]"), -1)
        with self.assertRaises(ValueError):
            repeat_closure(evaluate("[1]"), -1, N)

    def test_pascal_rows(self):
        self.assertEqual(coeff_row(repeat_closure(evaluate("[1]"), 4, D), 5), [0, 1, 4, 6, 4, 1])

    def test_empty_sum_closes_like_zero_tangle(self):
        for text in ["[1]*[2]", "[1]+[inf]", "[inf]"]:
            p = evaluate(text)
            for kind in ClosureKind:
                with self.subTest(text=text, kind=kind):
                    self.assertEqual(repeat_closure(p, 0, kind), close(ZERO_PAIR, kind))

    def test_closed_form_matches_closure_of_repeat(self):
        for text in ["[1]", "1/[2]", "[1]*[2]#K1", "[1]+[inf]"]:
            p = evaluate(text)
            for n in range(6):
                for kind in ClosureKind:
                    with self.subTest(text=text, n=n, kind=kind):
                        self.assertEqual(repeat_closure(p, n, kind), close(repeat_pair(p, n), kind))

    def test_repeat_base(self):
        self.assertEqual(repeat_base(BracketPair(from_string("2x+3"), from_string("x+2"))), from_string("x^2+4x+3"))

    def test_formula_with_other_r_factor(self):
        s, t = from_string("x+1"), from_string("1")
        self.assertEqual(closure_from_formula(s, t, 0, R, r_factor=X + 2), from_string("x^2+x+1"))
        self.assertEqual(closure_from_formula(s, t, 0, R), from_string("x^2+x"))


if __name__ == '__main__':
    unittest.main()
