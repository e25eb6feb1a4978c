"""
Numerator, denominator and R closures of bracket pairs, and the closed forms
for closures of n-fold horizontal sums.
"""

from .models import ZERO_PAIR, BracketPair, ClosureKind
from .poly import X, Polynomial, div_by_x_exact, from_string, mul, power

X_SQUARED = from_string("x^2")
X_SQUARED_MINUS_ONE = from_string("x^2-1")
X_PLUS_ONE = from_string("x+1")


def close(p: BracketPair, kind: ClosureKind) -> Polynomial:
    """
    Bracket of a closure.

    N = x^2 a + x b, D = x a + x^2 b, R = (x^2 + x)(a + b) = N + D.
    """
    if kind is ClosureKind.NUMERATOR:
        return mul(X_SQUARED, p.a) + mul(X, p.b)
    if kind is ClosureKind.DENOMINATOR:
        return mul(X, p.a) + mul(X_SQUARED, p.b)
    if kind is ClosureKind.R_CLOSURE:
        return mul(X_SQUARED + X, p.a + p.b)
    raise ValueError(f"Unknown closure kind: {kind!r}")


def repeat_base(p: BracketPair) -> Polynomial:
    """a + x b, the polynomial whose powers govern A_n."""
    return p.a + mul(X, p.b)


def repeat_pair(p: BracketPair, n: int) -> BracketPair:
    """
    Bracket pair of A_n = A + ... + A (n times), A_0 = [0].

    a(A_n) = a^n, b(A_n) = ((a + x b)^n - a^n) / x.
    """
    if n < 0:
        raise ValueError(f"Repetition count must be non-negative, got {n}")
    if n == 0:
        return ZERO_PAIR
    a_n = power(p.a, n)
    return BracketPair(a_n, div_by_x_exact(power(repeat_base(p), n) - a_n))


def repeat_closure(p: BracketPair, n: int, kind: ClosureKind) -> Polynomial:
    """
    Closure of A_n in closed form, with 0^0 = 1.

    D = x S^n, N = S^n + (x^2 - 1) a^n, R = (x + 1) S^n + (x^2 - 1) a^n
    where S = a + x b.
    """
    if n < 0:
        raise ValueError(f"Repetition count must be non-negative, got {n}")
    return closure_from_formula(repeat_base(p), p.a, n, kind)


def closure_from_formula(s: Polynomial, t: Polynomial, n: int, kind: ClosureKind,
                         r_factor: Polynomial = X_PLUS_ONE) -> Polynomial:
    """Evaluate a printed closed form D = x S^n, N = S^n + (x^2-1) T^n, R = r S^n + (x^2-1) T^n."""
    s_n = power(s, n)
    if kind is ClosureKind.DENOMINATOR:
        return mul(X, s_n)
    correction = mul(X_SQUARED_MINUS_ONE, power(t, n))
    if kind is ClosureKind.NUMERATOR:
        return s_n + correction
    if kind is ClosureKind.R_CLOSURE:
        return mul(r_factor, s_n) + correction
    raise ValueError(f"Unknown closure kind: {kind!r}")
