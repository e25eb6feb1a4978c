"""
Tangle expressions: parsing and evaluation to bracket pairs.

Grammar (whitespace insignificant)::

    expr   := term ('+' term)*
    term   := factor ('*' factor)*
    factor := unary ('#' knotid)*
    unary  := '1/' unary | base
    base   := '[' nat ']' | '[inf]' | '[0]' | '(' expr ')' | 'rep(' expr ',' nat ')'
    knotid := 'K1'..'K6'

``+`` and ``*`` are left-associative; ``1/`` binds tighter than ``#``,
which binds tighter than ``*``, which binds tighter than ``+``.
"""

import logging
import re
from functools import reduce
from typing import Iterable, List, NamedTuple, Optional, Tuple

from .exceptions import InvalidTwistError, TangleSyntaxError, UnknownKnotError
from .models import (
    TWIST_PAIR,
    ZERO_PAIR,
    INFINITY_PAIR,
    BracketPair,
    ConnectKnot,
    HSum,
    Infinity,
    Inverse,
    InvTwist,
    Rep,
    TangleExpr,
    Twist,
    VSum,
    Zero,
)
from .poly import ZERO, X, Polynomial, div_by_x_exact, from_string, mul

logger = logging.getLogger(__name__)

KNOT_BRACKETS = {
    "K1": from_string("x^2+x"),
    "K2": from_string("x^3+2x^2+x"),
    "K3": from_string("2x^2+2x"),
    "K4": from_string("x^4+3x^3+3x^2+x"),
    "K5": from_string("x^3+4x^2+3x"),
    "K6": from_string("2x^3+4x^2+2x"),
}


def knot_bracket(knot_id: str) -> Polynomial:
    try:
        return KNOT_BRACKETS[knot_id]
    except KeyError:
        raise UnknownKnotError(f"Unknown knot class: {knot_id!r}", {"knot": knot_id})


# ---------------------------------------------------------------------------
# Parsing
# ---------------------------------------------------------------------------

_TOKEN = re.compile(
    r"""
      (?P<ws>\s+)
    | (?P<inv>1\s*/)
    | (?P<twist>\[\s*(?P<arg>-?\s*\d+|inf|∞)\s*\])
    | (?P<rep>rep\s*\()
    | (?P<knot>K\d+)
    | (?P<nat>\d+)
    | (?P<op>[-+*#(),\]\[/])
    """,
    re.VERBOSE,
)


class _Token(NamedTuple):
    kind: str
    value: str
    pos: int


def _tokenize(text: str) -> List[_Token]:
    tokens = []
    pos = 0
    while pos < len(text):
        match = _TOKEN.match(text, pos)
        if match is None:
            raise TangleSyntaxError(f"Unexpected character {text[pos]!r}", pos, text)
        kind = match.lastgroup
        if kind != "ws":
            value = match.group("arg") if kind == "twist" else match.group(kind)
            tokens.append(_Token(kind, value, pos))
        pos = match.end()
    tokens.append(_Token("end", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.tokens = _tokenize(text)
        self.index = 0

    @property
    def current(self) -> _Token:
        return self.tokens[self.index]

    def advance(self) -> _Token:
        token = self.tokens[self.index]
        self.index += 1
        return token

    def error(self, message: str, token: Optional[_Token] = None) -> TangleSyntaxError:
        token = token or self.current
        return TangleSyntaxError(message, token.pos, self.text)

    def expect_op(self, op: str) -> _Token:
        token = self.current
        if token.kind != "op" or token.value != op:
            found = repr(token.value) if token.kind != "end" else "end of input"
            raise self.error(f"Expected {op!r}, found {found}")
        return self.advance()

    def at_op(self, op: str) -> bool:
        return self.current.kind == "op" and self.current.value == op

    def parse(self) -> TangleExpr:
        if self.current.kind == "end":
            raise self.error("Empty expression")
        node = self.expr()
        if self.current.kind != "end":
            raise self.error(f"Unexpected {self.current.value!r}")
        return node

    def expr(self) -> TangleExpr:
        node = self.term()
        while self.at_op("+"):
            self.advance()
            node = HSum(node, self.term())
        return node

    def term(self) -> TangleExpr:
        node = self.factor()
        while self.at_op("*"):
            self.advance()
            node = VSum(node, self.factor())
        return node

    def factor(self) -> TangleExpr:
        node = self.unary()
        while self.at_op("#"):
            self.advance()
            token = self.current
            if token.kind != "knot":
                raise self.error("Expected a knot id K1..K6 after '#'")
            if token.value not in KNOT_BRACKETS:
                raise self.error(f"Unknown knot id {token.value}")
            self.advance()
            node = ConnectKnot(node, KNOT_BRACKETS[token.value], token.value)
        return node

    def unary(self) -> TangleExpr:
        if self.current.kind == "inv":
            self.advance()
            child = self.unary()
            if isinstance(child, Twist):
                return InvTwist(child.n)
            return Inverse(child)
        return self.base()

    def base(self) -> TangleExpr:
        token = self.current
        if token.kind == "twist":
            self.advance()
            arg = re.sub(r"\s+", "", token.value)
            if arg in ("inf", "∞"):
                return Infinity()
            n = int(arg)
            if n < 0:
                raise InvalidTwistError(
                    f"Twist count must be non-negative, got [{n}] at position {token.pos}",
                    {"position": token.pos, "n": n},
                )
            return Zero() if n == 0 else Twist(n)
        if token.kind == "rep":
            self.advance()
            child = self.expr()
            self.expect_op(",")
            count = self.current
            if count.kind != "nat":
                raise self.error("Expected a repetition count")
            self.advance()
            self.expect_op(")")
            return Rep(child, int(count.value))
        if self.at_op("("):
            self.advance()
            node = self.expr()
            self.expect_op(")")
            return node
        if token.kind == "end":
            raise self.error("Unexpected end of input")
        raise self.error(f"Unexpected {token.value!r}")


def parse(text: str) -> TangleExpr:
    """
    Parse a tangle expression.

    Args:
        text: Expression such as ``"[1]+1/[2]"`` or ``"rep([1]#K1, 3)"``

    Returns:
        The expression tree

    Raises:
        TangleSyntaxError: If the text is not in the grammar
        InvalidTwistError: For a negative twist count
    """
    node = _Parser(text).parse()
    logger.debug("Parsed %r as %r", text, node)
    return node


def render(e: TangleExpr) -> str:
    """Expression text that parses back to a tree with the same bracket pair."""
    return _render(e, 0)


def _render(e: TangleExpr, level: int) -> str:
    # levels: 0 expr, 1 term, 2 factor, 3 unary/base
    if isinstance(e, Zero):
        return "[0]"
    if isinstance(e, Infinity):
        return "[inf]"
    if isinstance(e, Twist):
        return f"[{e.n}]"
    if isinstance(e, InvTwist):
        return f"1/[{e.n}]"
    if isinstance(e, Rep):
        return f"rep({_render(e.child, 0)}, {e.n})"
    if isinstance(e, HSum):
        text = f"{_render(e.left, 0)}+{_render(e.right, 1)}"
        return f"({text})" if level > 0 else text
    if isinstance(e, VSum):
        text = f"{_render(e.left, 1)}*{_render(e.right, 2)}"
        return f"({text})" if level > 1 else text
    if isinstance(e, Inverse):
        return f"1/{_render(e.child, 3)}"
    if isinstance(e, ConnectKnot):
        name = e.name or f"<{','.join(str(c) for c in e.knot.coeffs)}>"
        text = f"{_render(e.child, 2)}#{name}"
        return f"({text})" if level > 2 else text
    raise TypeError(f"Not a tangle expression: {e!r}")


# ---------------------------------------------------------------------------
# Composition rules
# ---------------------------------------------------------------------------

def hsum(p: BracketPair, q: BracketPair) -> BracketPair:
    """Horizontal sum: (aA aB, aA bB + bA aB + x bA bB)."""
    return BracketPair(
        mul(p.a, q.a),
        mul(p.a, q.b) + mul(p.b, q.a) + mul(X, mul(p.b, q.b)),
    )


def inverse(p: BracketPair) -> BracketPair:
    return BracketPair(p.b, p.a)


def vsum(p: BracketPair, q: BracketPair) -> BracketPair:
    """Vertical sum, the horizontal sum conjugated by rotation."""
    return inverse(hsum(inverse(p), inverse(q)))


def connect_knot(p: BracketPair, knot: Polynomial) -> BracketPair:
    """Tie a local knot into a strand: both components scale by knot/x."""
    factor = div_by_x_exact(knot)
    return BracketPair(mul(p.a, factor), mul(p.b, factor))


def connect_sum(k1: Polynomial, k2: Polynomial) -> Polynomial:
    """Bracket of the connected sum of two knot shadows, x^-1 <K1><K2>."""
    return div_by_x_exact(mul(k1, k2))


def connect_sum_all(knots: Iterable[Polynomial]) -> Polynomial:
    """x^(1-m) times the product of m knot brackets; the unknot x when m = 0."""
    return reduce(connect_sum, knots, X)


def twist_pair(n: int) -> BracketPair:
    result = ZERO_PAIR
    for _ in range(n):
        result = hsum(result, TWIST_PAIR)
    return result


def bracket_pair(e: TangleExpr) -> BracketPair:
    """
    Evaluate an expression to its bracket pair.

    Rep nodes use the closed form for n-fold sums; Twist(n) is the n-fold
    horizontal sum of [1].
    """
    from .closures import repeat_pair

    if isinstance(e, Zero):
        return ZERO_PAIR
    if isinstance(e, Infinity):
        return INFINITY_PAIR
    if isinstance(e, Twist):
        return twist_pair(e.n)
    if isinstance(e, InvTwist):
        return inverse(twist_pair(e.n))
    if isinstance(e, HSum):
        return hsum(bracket_pair(e.left), bracket_pair(e.right))
    if isinstance(e, VSum):
        return vsum(bracket_pair(e.left), bracket_pair(e.right))
    if isinstance(e, Inverse):
        return inverse(bracket_pair(e.child))
    if isinstance(e, ConnectKnot):
        return connect_knot(bracket_pair(e.child), e.knot)
    if isinstance(e, Rep):
        return repeat_pair(bracket_pair(e.child), e.n)
    raise TypeError(f"Not a tangle expression: {e!r}")


def evaluate(text: str) -> BracketPair:
    return bracket_pair(parse(text))


def knot_crossings(knot: Polynomial) -> int:
    """Crossing count of a knot shadow from its bracket, log2 <K>(1)."""
    return knot(1).bit_length() - 1


def crossing_count(e: TangleExpr) -> int:
    if isinstance(e, (Zero, Infinity)):
        return 0
    if isinstance(e, (Twist, InvTwist)):
        return e.n
    if isinstance(e, (HSum, VSum)):
        return crossing_count(e.left) + crossing_count(e.right)
    if isinstance(e, Inverse):
        return crossing_count(e.child)
    if isinstance(e, ConnectKnot):
        return crossing_count(e.child) + knot_crossings(e.knot)
    if isinstance(e, Rep):
        return e.n * crossing_count(e.child)
    raise TypeError(f"Not a tangle expression: {e!r}")


# ---------------------------------------------------------------------------
# Matrix form: bp(A + B) = M(A) bp(B)
# ---------------------------------------------------------------------------

Matrix = Tuple[Tuple[Polynomial, Polynomial], Tuple[Polynomial, Polynomial]]


def transfer_matrix(p: BracketPair) -> Matrix:
    """M(A) = [[a, 0], [b, a + x b]]."""
    return ((p.a, ZERO), (p.b, p.a + mul(X, p.b)))


def matrix_mul(m: Matrix, n: Matrix) -> Matrix:
    return tuple(
        tuple(mul(m[i][0], n[0][j]) + mul(m[i][1], n[1][j]) for j in range(2))
        for i in range(2)
    )


def matrix_power(m: Matrix, n: int) -> Matrix:
    if n < 0:
        raise ValueError(f"Negative exponent: {n}")
    one = Polynomial((1,))
    result: Matrix = ((one, ZERO), (ZERO, one))
    for _ in range(n):
        result = matrix_mul(result, m)
    return result


def apply_matrix(m: Matrix, p: BracketPair) -> BracketPair:
    return BracketPair(
        mul(m[0][0], p.a) + mul(m[0][1], p.b),
        mul(m[1][0], p.a) + mul(m[1][1], p.b),
    )


def repeat_by_matrix(p: BracketPair, n: int) -> BracketPair:
    """A_n as M(A)^n applied to bp([0])."""
    return apply_matrix(matrix_power(transfer_matrix(p), n), ZERO_PAIR)
