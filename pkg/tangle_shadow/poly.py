"""
Dense univariate polynomials in x with arbitrary-precision integer coefficients.

Every bracket, closure and table entry in this package is one of these. The
representation is canonical (no trailing zero coefficients), so equality is
plain tuple equality and the zero polynomial is the empty tuple.
"""

import math
import re
from functools import reduce
from itertools import zip_longest
from typing import Iterable, List, Optional, Sequence, Tuple, Union

from .exceptions import BothZeroError, NotDivisibleError


class Polynomial:
    """Immutable polynomial; ``coeffs[k]`` is the coefficient of x^k."""

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        values = [int(c) for c in coeffs]
        while values and values[-1] == 0:
            values.pop()
        self._coeffs: Tuple[int, ...] = tuple(values)

    @classmethod
    def constant(cls, value: int) -> "Polynomial":
        return cls((value,))

    @classmethod
    def monomial(cls, degree: int, coefficient: int = 1) -> "Polynomial":
        if degree < 0:
            raise ValueError(f"Negative degree: {degree}")
        return cls([0] * degree + [coefficient])

    @property
    def coeffs(self) -> Tuple[int, ...]:
        return self._coeffs

    @property
    def degree(self) -> Optional[int]:
        """Degree, or ``None`` for the zero polynomial."""
        if not self._coeffs:
            return None
        return len(self._coeffs) - 1

    @property
    def leading_coefficient(self) -> int:
        return self._coeffs[-1] if self._coeffs else 0

    def is_zero(self) -> bool:
        return not self._coeffs

    def coefficient(self, k: int) -> int:
        return self._coeffs[k] if 0 <= k < len(self._coeffs) else 0

    def __bool__(self) -> bool:
        return bool(self._coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = Polynomial.constant(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self) -> int:
        return hash(self._coeffs)

    def __repr__(self) -> str:
        return f"Polynomial({list(self._coeffs)!r})"

    def __call__(self, value: int) -> int:
        return evaluate(self, value)

    def __neg__(self) -> "Polynomial":
        return Polynomial(-c for c in self._coeffs)

    def __add__(self, other: Union["Polynomial", int]) -> "Polynomial":
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return add(self, other)

    __radd__ = __add__

    def __sub__(self, other: Union["Polynomial", int]) -> "Polynomial":
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return add(self, -other)

    def __rsub__(self, other: Union["Polynomial", int]) -> "Polynomial":
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return add(other, -self)

    def __mul__(self, other: Union["Polynomial", int]) -> "Polynomial":
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return mul(self, other)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "Polynomial":
        return power(self, n)


def _coerce(value) -> Optional[Polynomial]:
    if isinstance(value, Polynomial):
        return value
    if isinstance(value, int):
        return Polynomial.constant(value)
    return None


ZERO = Polynomial()
ONE = Polynomial((1,))
X = Polynomial((0, 1))


def add(p: Polynomial, q: Polynomial) -> Polynomial:
    return Polynomial(a + b for a, b in zip_longest(p.coeffs, q.coeffs, fillvalue=0))


def sub(p: Polynomial, q: Polynomial) -> Polynomial:
    return Polynomial(a - b for a, b in zip_longest(p.coeffs, q.coeffs, fillvalue=0))


def mul(p: Polynomial, q: Polynomial) -> Polynomial:
    if p.is_zero() or q.is_zero():
        return ZERO
    out = [0] * (len(p.coeffs) + len(q.coeffs) - 1)
    for i, a in enumerate(p.coeffs):
        if a == 0:
            continue
        for j, b in enumerate(q.coeffs):
            out[i + j] += a * b
    return Polynomial(out)


def power(p: Polynomial, n: int) -> Polynomial:
    """p^n by repeated squaring; p^0 is 1 even for p = 0."""
    if n < 0:
        raise ValueError(f"Negative exponent: {n}")
    result, base = ONE, p
    while n:
        if n & 1:
            result = mul(result, base)
        n >>= 1
        if n:
            base = mul(base, base)
    return result


def evaluate(p: Polynomial, value: int) -> int:
    total = 0
    for c in reversed(p.coeffs):
        total = total * value + c
    return total


def div_by_x_exact(p: Polynomial) -> Polynomial:
    """Shift p down one degree; the constant term must vanish."""
    if p.coefficient(0) != 0:
        raise NotDivisibleError(
            f"Polynomial {list(p.coeffs)} has constant term {p.coefficient(0)}, not divisible by x",
            {"coeffs": list(p.coeffs)},
        )
    return Polynomial(p.coeffs[1:])


def divide_exact(p: Polynomial, q: Polynomial) -> Polynomial:
    """Quotient p / q over the integers, raising when q does not divide p."""
    if q.is_zero():
        raise ZeroDivisionError("Polynomial division by zero")
    remainder = list(p.coeffs)
    dq, lq = q.degree, q.leading_coefficient
    quotient = [0] * max(len(remainder) - dq, 0)
    for shift in range(len(remainder) - 1 - dq, -1, -1):
        lead = remainder[shift + dq]
        if lead == 0:
            continue
        if lead % lq:
            raise NotDivisibleError(
                f"{list(q.coeffs)} does not divide {list(p.coeffs)} over the integers",
                {"dividend": list(p.coeffs), "divisor": list(q.coeffs)},
            )
        factor = lead // lq
        quotient[shift] = factor
        for j, c in enumerate(q.coeffs):
            remainder[shift + j] -= factor * c
    if any(remainder):
        raise NotDivisibleError(
            f"{list(q.coeffs)} does not divide {list(p.coeffs)}",
            {"dividend": list(p.coeffs), "divisor": list(q.coeffs)},
        )
    return Polynomial(quotient)


def content(p: Polynomial) -> int:
    """Non-negative gcd of the coefficients (0 for the zero polynomial)."""
    return reduce(math.gcd, p.coeffs, 0)


def normalize(p: Polynomial) -> Polynomial:
    """p with a positive leading coefficient."""
    return -p if p.leading_coefficient < 0 else p


def primitive_part(p: Polynomial) -> Polynomial:
    if p.is_zero():
        return p
    c = content(p)
    return normalize(Polynomial(k // c for k in p.coeffs))


def _pseudo_remainder(f: Polynomial, g: Polynomial) -> Polynomial:
    r = f
    dg, lg = g.degree, g.leading_coefficient
    while not r.is_zero() and r.degree >= dg:
        r = sub(mul(r, Polynomial.constant(lg)), mul(Polynomial.monomial(r.degree - dg, r.leading_coefficient), g))
    return r


def gcd(p: Polynomial, q: Polynomial) -> Polynomial:
    """
    Greatest common divisor over Z[x].

    Computed as gcd of contents times the primitive gcd (primitive PRS), with
    a positive leading coefficient. gcd(p, 0) is p normalized.

    Raises:
        BothZeroError: If both arguments are zero
    """
    if p.is_zero() and q.is_zero():
        raise BothZeroError("gcd(0, 0) is undefined")
    if q.is_zero():
        return normalize(p)
    if p.is_zero():
        return normalize(q)

    scale = math.gcd(content(p), content(q))
    f, g = primitive_part(p), primitive_part(q)
    if f.degree < g.degree:
        f, g = g, f
    while not g.is_zero():
        f, g = g, primitive_part(_pseudo_remainder(f, g))
    return mul(f, Polynomial.constant(scale))


def coeff_row(p: Polynomial, k_max: int) -> List[int]:
    """Coefficients of x^0..x^k_max, zero-padded."""
    if k_max < 0:
        raise ValueError(f"k_max must be non-negative, got {k_max}")
    return [p.coefficient(k) for k in range(k_max + 1)]


def from_row(row: Sequence[int]) -> Polynomial:
    return Polynomial(row)


_TERM = re.compile(r"([+-])?(\d+)?\*?(x(?:\^(\d+))?)?")


def from_string(text: str) -> Polynomial:
    """
    Parse polynomial text such as ``x^2+4x+3``, ``2x^3-x`` or ``0``.

    Terms may repeat and appear in any order; whitespace is ignored.

    Raises:
        ValueError: If the text is not a polynomial in x
    """
    source = re.sub(r"\s+", "", text)
    if not source:
        raise ValueError("Empty polynomial text")

    coeffs: dict = {}
    pos = 0
    while pos < len(source):
        match = _TERM.match(source, pos)
        sign, digits, var, exponent = match.groups()
        if (digits is None and var is None) or (pos > 0 and sign is None):
            raise ValueError(f"Invalid polynomial term at position {pos} in {text!r}")
        value = int(digits) if digits is not None else 1
        if sign == "-":
            value = -value
        degree = 0 if var is None else (int(exponent) if exponent is not None else 1)
        coeffs[degree] = coeffs.get(degree, 0) + value
        pos = match.end()

    top = max(coeffs)
    return Polynomial(coeffs.get(k, 0) for k in range(top + 1))
