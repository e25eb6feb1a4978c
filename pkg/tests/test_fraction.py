import unittest

from tangle_shadow.exceptions import InvalidPairError
from tangle_shadow.fraction import (
    FRACTION_ZERO,
    classify,
    decompose_knot,
    fraction,
    fraction_add,
    fraction_inverse,
    fraction_repeat,
    reduce_fraction,
    skeleton,
)
from tangle_shadow.models import (
    INFINITE,
    BracketPair,
    Classification,
    ClassificationStatus,
    FiniteFraction,
)
from tangle_shadow.poly import ONE, X, ZERO, from_string
from tangle_shadow.tangle import KNOT_BRACKETS, connect_sum, evaluate


def frac(num: str, den: str) -> FiniteFraction:
    return FiniteFraction(from_string(num), from_string(den))


class TestFraction(unittest.TestCase):

    def test_values(self):
        self.assertEqual(fraction(evaluate("[2]")), frac("x+2", "1"))
        self.assertEqual(fraction(evaluate("1/[2]")), frac("1", "x+2"))
        self.assertEqual(fraction(evaluate("[1]#K1")), frac("1", "1"))
        self.assertEqual(fraction(evaluate("[0]")), FRACTION_ZERO)
        self.assertIs(fraction(evaluate("[inf]")), INFINITE)

    def test_zero_pair(self):
        with self.assertRaises(InvalidPairError):
            fraction(BracketPair(ZERO, ZERO))
        with self.assertRaises(InvalidPairError):
            reduce_fraction(ZERO, ZERO)

    def test_reduction_normalizes_sign(self):
        self.assertEqual(reduce_fraction(from_string("2x+2"), from_string("-4x-4")), frac("-1", "2"))

    def test_sum_rule(self):
        f = fraction_add(fraction(evaluate("[1]")), fraction(evaluate("[1]")))
        self.assertEqual(f, fraction(evaluate("[2]")))
        g = fraction_add(fraction(evaluate("[1]*[2]")), fraction(evaluate("1/[2]")))
        self.assertEqual(g, fraction(evaluate("[1]*[2]+1/[2]")))
        self.assertIs(fraction_add(fraction(evaluate("[1]")), INFINITE), INFINITE)

    def test_inverse_rule(self):
        self.assertEqual(fraction_inverse(fraction(evaluate("[1]*[2]"))), fraction(evaluate("1/([1]*[2])")))
        self.assertEqual(fraction_inverse(INFINITE), FRACTION_ZERO)
        self.assertIs(fraction_inverse(FRACTION_ZERO), INFINITE)

    def test_repeat_rule(self):
        one = fraction(evaluate("[1]"))
        self.assertEqual(fraction_repeat(one, 3), frac("x^2+3x+3", "1"))
        self.assertEqual(fraction_repeat(one, 0), FRACTION_ZERO)
        p = evaluate("1/[2]#K1")
        for n in range(1, 5):
            with self.subTest(n=n):
                self.assertEqual(fraction_repeat(fraction(p), n), fraction(evaluate(f"rep(1/[2]#K1, {n})")))


class TestSkeleton(unittest.TestCase):

    def test_prime_pair(self):
        report = skeleton(evaluate("[1]*[2]"))
        self.assertTrue(report.is_prime)
        self.assertEqual(report.knot_factor, X)
        self.assertEqual(report.skeleton, evaluate("[1]*[2]"))

    def test_locally_knotted(self):
        cases = {
            "[1]#K1": ("[1]", "K1"),
            "[2]#K3": ("[2]", "K3"),
            "1/[2]#K1#K1": ("1/[2]", "K2"),
            "[1]#K6": ("[1]", "K6"),
        }
        for text, (core, knot) in cases.items():
            with self.subTest(text=text):
                report = skeleton(evaluate(text))
                self.assertFalse(report.is_prime)
                self.assertEqual(report.skeleton, evaluate(core))
                self.assertEqual(report.knot_factor, KNOT_BRACKETS[knot])

    def test_infinity_tangle_with_knot(self):
        report = skeleton(evaluate("[inf]#K1"))
        self.assertEqual(report.skeleton, evaluate("[inf]"))
        self.assertEqual(report.knot_factor, KNOT_BRACKETS["K1"])

    def test_zero_pair(self):
        with self.assertRaises(InvalidPairError):
            skeleton(BracketPair(ZERO, ZERO))


class TestDecomposeKnot(unittest.TestCase):

    def test_single_classes(self):
        for knot_id, bracket in KNOT_BRACKETS.items():
            with self.subTest(knot=knot_id):
                self.assertEqual(decompose_knot(bracket), (knot_id,))

    def test_composites(self):
        k = KNOT_BRACKETS
        self.assertEqual(decompose_knot(connect_sum(k["K5"], k["K1"])), ("K1", "K5"))
        self.assertEqual(decompose_knot(connect_sum(k["K5"], k["K3"])), ("K3", "K5"))
        self.assertEqual(decompose_knot(connect_sum(k["K4"], k["K1"])), ("K1", "K4"))

    def test_unknot_and_failures(self):
        self.assertEqual(decompose_knot(X), ())
        self.assertIsNone(decompose_knot(from_string("x^2+3x")))
        self.assertIsNone(decompose_knot(ONE))


class TestClassify(unittest.TestCase):

    def test_descriptions(self):
        cases = {
            "[1]*[2]": "A7",
            "[2]*[1]": "A7",
            "[1]#K1": "A18 = skeleton A1 # K1",
            "[2]#K1#K1": "A26 = skeleton A2 # K2",
            "[1]#K3#K1": "A33 = skeleton A1 # K6",
            "1/[3]#K1#K1": "skeleton A5 # K2",
            "[3]#K5": "skeleton A4 # K5",
            "[0]": "A34",
            "[5]": "Unrecognized",
        }
        for text, expected in cases.items():
            with self.subTest(text=text):
                self.assertEqual(classify(evaluate(text)).describe(), expected)

    def test_statuses(self):
        self.assertIs(classify(evaluate("[1]*[2]")).status, ClassificationStatus.EXACT)
        result = classify(evaluate("[3]#K5"))
        self.assertIs(result.status, ClassificationStatus.DECOMPOSITION)
        self.assertEqual(result.knot_factor, KNOT_BRACKETS["K5"])
        self.assertIs(classify(evaluate("[5]")).status, ClassificationStatus.UNRECOGNIZED)

    def test_undecomposed_knot_factor(self):
        result = Classification(
            status=ClassificationStatus.DECOMPOSITION,
            pair=BracketPair(ONE, ONE),
            skeleton_id="A1",
            knot_factor=from_string("x^2+3x"),
        )
        self.assertEqual(result.describe(), "skeleton A1 # knot factor x^2+3x")


if __name__ == '__main__':
    unittest.main()
