"""
Polynomial fractions F(A) = b(A)/a(A), skeletons of locally knotted tangles,
and classification of bracket pairs against the catalog.
"""

import logging
from typing import Iterable, Optional, Tuple

from .exceptions import InvalidPairError, NotDivisibleError
from .models import (
    INFINITE,
    BracketPair,
    CatalogEntry,
    Classification,
    ClassificationStatus,
    FiniteFraction,
    InfiniteFraction,
    SkeletonReport,
    TangleFraction,
)
from .poly import ONE, ZERO, X, Polynomial, div_by_x_exact, divide_exact, gcd, mul, power
from .tangle import KNOT_BRACKETS, knot_crossings

logger = logging.getLogger(__name__)

FRACTION_ZERO = FiniteFraction(ZERO, ONE)


def reduce_fraction(num: Polynomial, den: Polynomial) -> TangleFraction:
    """num/den in lowest terms with a positive leading denominator coefficient."""
    if den.is_zero():
        if num.is_zero():
            raise InvalidPairError("0/0 is not a fraction")
        return INFINITE
    if num.is_zero():
        return FRACTION_ZERO
    g = gcd(num, den)
    num, den = divide_exact(num, g), divide_exact(den, g)
    if den.leading_coefficient < 0:
        num, den = -num, -den
    return FiniteFraction(num, den)


def fraction(p: BracketPair) -> TangleFraction:
    """
    F(A) = b/a, reduced; Infinity when a = 0.

    Raises:
        InvalidPairError: If both components are zero
    """
    if p.is_zero():
        raise InvalidPairError("Bracket pair has both components zero")
    return reduce_fraction(p.b, p.a)


def fraction_add(f: TangleFraction, g: TangleFraction) -> TangleFraction:
    """F(A + B) = F(A) + F(B) + x F(A) F(B)."""
    if isinstance(f, InfiniteFraction) or isinstance(g, InfiniteFraction):
        return INFINITE
    num = mul(f.num, g.den) + mul(g.num, f.den) + mul(X, mul(f.num, g.num))
    return reduce_fraction(num, mul(f.den, g.den))


def fraction_inverse(f: TangleFraction) -> TangleFraction:
    """F(1/A) = 1/F(A), with 1/0 = Infinity and 1/Infinity = 0."""
    if isinstance(f, InfiniteFraction):
        return FRACTION_ZERO
    if f.num.is_zero():
        return INFINITE
    return reduce_fraction(f.den, f.num)


def fraction_repeat(f: TangleFraction, n: int) -> TangleFraction:
    """F(A_n) = ((1 + x F(A))^n - 1) / x."""
    if n < 0:
        raise ValueError(f"Repetition count must be non-negative, got {n}")
    if n == 0:
        return FRACTION_ZERO
    if isinstance(f, InfiniteFraction):
        return INFINITE
    den_n = power(f.den, n)
    num = div_by_x_exact(power(f.den + mul(X, f.num), n) - den_n)
    return reduce_fraction(num, den_n)


def skeleton(p: BracketPair) -> SkeletonReport:
    """
    Factor the common divisor out of a pair.

    The knot factor is x times the gcd, the bracket of the knot shadow that
    can be disconnected from the tangle.

    Raises:
        InvalidPairError: If both components are zero
    """
    if p.is_zero():
        raise InvalidPairError("Bracket pair has both components zero")
    g = gcd(p.a, p.b)
    core = BracketPair(divide_exact(p.a, g), divide_exact(p.b, g))
    return SkeletonReport(skeleton=core, knot_factor=mul(X, g), is_prime=g == ONE)


def decompose_knot(p: Polynomial) -> Optional[Tuple[str, ...]]:
    """
    Write a knot bracket as a connected sum of the classes K1..K6.

    Returns the shortest decomposition (ids sorted), () for the unknot, or
    None when no decomposition exists.
    """
    if p == X:
        return ()
    if p.is_zero() or p(1) < 2:
        return None
    for knot_id, bracket in KNOT_BRACKETS.items():
        if p == bracket:
            return (knot_id,)

    best = None
    for knot_id, bracket in KNOT_BRACKETS.items():
        try:
            rest = divide_exact(mul(X, p), bracket)
        except NotDivisibleError:
            continue
        if rest.is_zero() or knot_crossings(rest) >= knot_crossings(p):
            continue
        tail = decompose_knot(rest)
        if tail is None:
            continue
        candidate = tuple(sorted((knot_id,) + tail))
        if best is None or len(candidate) < len(best):
            best = candidate
    return best


def classify(p: BracketPair, entries: Optional[Iterable[CatalogEntry]] = None) -> Classification:
    """
    Match a pair against the catalog.

    An exact pair match gives the entry id. Otherwise the skeleton is matched
    against the prime entries and the knot factor is decomposed into K1..K6.
    Bracket equality names an equivalence class, not an isotopy type.
    """
    if entries is None:
        from .catalog import load_catalog
        entries = load_catalog()
    entries = list(entries)

    for entry in entries:
        if entry.pair == p:
            knot_ids = (entry.knot_id,) if entry.knot_id else ()
            logger.debug("Pair matches catalog entry %s", entry.id)
            return Classification(
                status=ClassificationStatus.EXACT,
                pair=p,
                entry_id=entry.id,
                skeleton_id=entry.skeleton_id or entry.id,
                knot_ids=knot_ids,
                knot_factor=KNOT_BRACKETS[entry.knot_id] if entry.knot_id else X,
            )

    if p.is_zero():
        return Classification(status=ClassificationStatus.UNRECOGNIZED, pair=p)

    report = skeleton(p)
    for entry in entries:
        if entry.knot_id is None and entry.pair == report.skeleton:
            knot_ids = decompose_knot(report.knot_factor)
            logger.debug("Skeleton of pair matches %s, knot factor decomposes as %s", entry.id, knot_ids)
            return Classification(
                status=ClassificationStatus.DECOMPOSITION,
                pair=p,
                skeleton_id=entry.id,
                knot_ids=knot_ids or (),
                knot_factor=report.knot_factor,
            )

    return Classification(status=ClassificationStatus.UNRECOGNIZED, pair=p, knot_factor=report.knot_factor)
