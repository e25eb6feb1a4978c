"""
Brute-force state sums over planar shadow diagrams.

Diagrams are built compositionally from tangle expressions. Every edge of a
diagram carries an integer label that occurs exactly twice, either in a
crossing slot or on a boundary endpoint. Crossing slots are listed in cyclic
order; the A smoothing joins slots 0-1 and 2-3, the B smoothing joins 1-2 and
3-0. Each state's circles are counted with union-find over edge labels.
"""

import logging
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

from .exceptions import (
    BudgetExceededError,
    DiagramFormatError,
    HasEndpointsError,
    HasNoEndpointsError,
    NonplanarStateError,
    UnknownKnotError,
)
from .models import (
    BracketPair,
    ClosureKind,
    ConnectKnot,
    HSum,
    Infinity,
    Inverse,
    InvTwist,
    OracleComparison,
    Rep,
    TangleExpr,
    Twist,
    VSum,
    Zero,
)
from .poly import Polynomial
from .tangle import KNOT_BRACKETS, bracket_pair, crossing_count, parse, render

logger = logging.getLogger(__name__)

DEFAULT_STATE_BUDGET = 2 ** 20
PARALLEL_THRESHOLD = 2 ** 12
ENDPOINTS = ("NW", "NE", "SE", "SW")

# Each knot class as a closure of a small tangle expression.
KNOT_DIAGRAMS = {
    "K1": (ClosureKind.NUMERATOR, "[1]"),
    "K2": (ClosureKind.DENOMINATOR, "[2]"),
    "K3": (ClosureKind.NUMERATOR, "[2]"),
    "K4": (ClosureKind.DENOMINATOR, "[3]"),
    "K5": (ClosureKind.NUMERATOR, "[3]"),
    "K6": (ClosureKind.NUMERATOR, "[2]#K1"),
}


@dataclass(frozen=True)
class ShadowDiagram:
    """
    A planar 4-valent diagram without over/under information.

    ``endpoints`` is empty for a knot (or link) shadow and maps NW, NE, SE, SW
    to edge labels for a tangle. ``loops`` counts crossingless circles.
    """
    crossings: Tuple[Tuple[int, int, int, int], ...] = ()
    endpoints: Dict[str, int] = field(default_factory=dict)
    loops: int = 0

    @property
    def crossing_count(self) -> int:
        return len(self.crossings)

    @property
    def is_tangle(self) -> bool:
        return bool(self.endpoints)

    def labels(self) -> List[int]:
        seen = {label for crossing in self.crossings for label in crossing}
        seen.update(self.endpoints.values())
        return sorted(seen)


class _Wiring:
    """Mutable scratch copy of a diagram used while composing."""

    def __init__(self, crossings=(), endpoints=None, loops=0):
        self.crossings = [list(c) for c in crossings]
        self.endpoints = dict(endpoints or {})
        self.loops = loops

    @classmethod
    def union(cls, left: ShadowDiagram, right: ShadowDiagram,
              left_prefix: str = "L", right_prefix: str = "R") -> "_Wiring":
        offset = max(left.labels(), default=0)
        wiring = cls(left.crossings, {left_prefix + k: v for k, v in left.endpoints.items()}, left.loops + right.loops)
        wiring.crossings.extend([label + offset for label in c] for c in right.crossings)
        wiring.endpoints.update({right_prefix + k: v + offset for k, v in right.endpoints.items()})
        return wiring

    def max_label(self) -> int:
        labels = [label for c in self.crossings for label in c] + list(self.endpoints.values())
        return max(labels, default=0)

    def rename(self, old: int, new: int) -> None:
        for crossing in self.crossings:
            for i, label in enumerate(crossing):
                if label == old:
                    crossing[i] = new
        for name, label in self.endpoints.items():
            if label == old:
                self.endpoints[name] = new

    def join(self, first: str, second: str) -> None:
        """Connect two boundary endpoints; they stop being endpoints."""
        p = self.endpoints.pop(first)
        q = self.endpoints.pop(second)
        if p == q:
            self.loops += 1
        else:
            self.rename(q, p)

    def freeze(self, names: Optional[Dict[str, str]] = None) -> ShadowDiagram:
        endpoints = self.endpoints
        if names is not None:
            endpoints = {names[k]: v for k, v in endpoints.items()}
        return ShadowDiagram(tuple(tuple(c) for c in self.crossings), endpoints, self.loops)


# ---------------------------------------------------------------------------
# Elementary diagrams and composition
# ---------------------------------------------------------------------------

ZERO_DIAGRAM = ShadowDiagram((), {"NW": 1, "NE": 1, "SW": 2, "SE": 2})
INFINITY_DIAGRAM = ShadowDiagram((), {"NW": 1, "SW": 1, "NE": 2, "SE": 2})
CROSSING_DIAGRAM = ShadowDiagram(((1, 2, 3, 4),), {"NW": 1, "NE": 2, "SE": 3, "SW": 4})


def _require_tangle(d: ShadowDiagram) -> None:
    if not d.is_tangle:
        raise HasNoEndpointsError("Operation needs a tangle diagram with four endpoints")


def hsum_diagram(left: ShadowDiagram, right: ShadowDiagram) -> ShadowDiagram:
    """Place ``right`` to the right of ``left``."""
    _require_tangle(left)
    _require_tangle(right)
    w = _Wiring.union(left, right)
    w.join("LNE", "RNW")
    w.join("LSE", "RSW")
    return w.freeze({"LNW": "NW", "LSW": "SW", "RNE": "NE", "RSE": "SE"})


def vsum_diagram(top: ShadowDiagram, bottom: ShadowDiagram) -> ShadowDiagram:
    """Stack ``top`` above ``bottom``."""
    _require_tangle(top)
    _require_tangle(bottom)
    w = _Wiring.union(top, bottom)
    w.join("LSW", "RNW")
    w.join("LSE", "RNE")
    return w.freeze({"LNW": "NW", "LNE": "NE", "RSW": "SW", "RSE": "SE"})


def rotate_diagram(d: ShadowDiagram) -> ShadowDiagram:
    """Quarter turn; endpoint labels move NW->SW->SE->NE->NW."""
    _require_tangle(d)
    e = d.endpoints
    return ShadowDiagram(d.crossings, {"SW": e["NW"], "SE": e["SW"], "NE": e["SE"], "NW": e["NE"]}, d.loops)


def close_diagram(d: ShadowDiagram, kind: ClosureKind) -> ShadowDiagram:
    """Numerator, denominator or R closure of a tangle diagram."""
    _require_tangle(d)
    if kind is ClosureKind.R_CLOSURE:
        d = hsum_diagram(d, CROSSING_DIAGRAM)
        kind = ClosureKind.NUMERATOR
    w = _Wiring(d.crossings, d.endpoints, d.loops)
    if kind is ClosureKind.NUMERATOR:
        w.join("NW", "NE")
        w.join("SW", "SE")
    else:
        w.join("NW", "SW")
        w.join("NE", "SE")
    return w.freeze()


def splice_knot(d: ShadowDiagram, knot: ShadowDiagram) -> ShadowDiagram:
    """
    Tie a knot shadow into the strand at the SW endpoint.

    The knot is cut open at its lowest-labelled edge; the position of the
    local knot does not affect the bracket.
    """
    _require_tangle(d)
    if knot.is_tangle:
        raise HasEndpointsError("Only a knot diagram can be spliced into a strand")
    if not knot.crossings:
        return d

    w = _Wiring.union(d, knot, "", "K")
    fresh = w.max_label() + 1
    cut = min(label for c in knot.crossings for label in c) + max(d.labels(), default=0)
    for crossing in w.crossings[d.crossing_count:]:
        if cut in crossing:
            crossing[crossing.index(cut)] = fresh
            break
    strand = w.endpoints["SW"]
    w.endpoints["SW"] = cut
    w.rename(strand, fresh)
    return w.freeze()


def knot_diagram(knot_id: str) -> ShadowDiagram:
    """Stored knot shadow for one of K1..K6."""
    try:
        kind, expression = KNOT_DIAGRAMS[knot_id]
    except KeyError:
        raise UnknownKnotError(f"No diagram stored for knot {knot_id!r}", {"knot": knot_id})
    return close_diagram(build_diagram(parse(expression)), kind)


def _knot_ids_for(knot: Polynomial, name: Optional[str]) -> Tuple[str, ...]:
    if name in KNOT_DIAGRAMS:
        return (name,)
    for knot_id, bracket in KNOT_BRACKETS.items():
        if bracket == knot:
            return (knot_id,)
    from .fraction import decompose_knot

    ids = decompose_knot(knot)
    if ids is None:
        raise UnknownKnotError("Knot bracket is not a connected sum of K1..K6", {"knot": list(knot.coeffs)})
    return ids


def _repeat(d: ShadowDiagram, n: int) -> ShadowDiagram:
    if n == 0:
        return ZERO_DIAGRAM
    result = d
    for _ in range(n - 1):
        result = hsum_diagram(result, d)
    return result


def _build(e: TangleExpr) -> ShadowDiagram:
    if isinstance(e, Zero):
        return ZERO_DIAGRAM
    if isinstance(e, Infinity):
        return INFINITY_DIAGRAM
    if isinstance(e, Twist):
        return _repeat(CROSSING_DIAGRAM, e.n)
    if isinstance(e, InvTwist):
        return rotate_diagram(_repeat(CROSSING_DIAGRAM, e.n))
    if isinstance(e, HSum):
        return hsum_diagram(_build(e.left), _build(e.right))
    if isinstance(e, VSum):
        return vsum_diagram(_build(e.left), _build(e.right))
    if isinstance(e, Inverse):
        return rotate_diagram(_build(e.child))
    if isinstance(e, ConnectKnot):
        result = _build(e.child)
        for knot_id in _knot_ids_for(e.knot, e.name):
            result = splice_knot(result, knot_diagram(knot_id))
        return result
    if isinstance(e, Rep):
        return _repeat(_build(e.child), e.n)
    raise TypeError(f"Not a tangle expression: {e!r}")


def check_budget(crossings: int, budget: int = DEFAULT_STATE_BUDGET) -> None:
    if 2 ** crossings > budget:
        raise BudgetExceededError(crossings, budget)


def build_diagram(e: TangleExpr, budget: int = DEFAULT_STATE_BUDGET) -> ShadowDiagram:
    """
    Shadow diagram of an expression.

    Raises:
        BudgetExceededError: If the diagram would have more than ``budget`` states
    """
    c = crossing_count(e)
    check_budget(c, budget)
    diagram = _build(e)
    logger.debug("Built diagram with %d crossings for %r", diagram.crossing_count, e)
    return diagram


# ---------------------------------------------------------------------------
# State sums
# ---------------------------------------------------------------------------

def _compile(d: ShadowDiagram):
    index = {label: i for i, label in enumerate(d.labels())}
    crossings = tuple(tuple(index[label] for label in c) for c in d.crossings)
    endpoints = tuple(index[d.endpoints[name]] for name in ENDPOINTS) if d.endpoints else ()
    return crossings, len(index), endpoints


def _find(parent: List[int], i: int) -> int:
    while parent[i] != i:
        parent[i] = parent[parent[i]]
        i = parent[i]
    return i


def _union(parent: List[int], i: int, j: int) -> None:
    ri, rj = _find(parent, i), _find(parent, j)
    if ri != rj:
        parent[ri] = rj


def _count_states(compiled, start: int, stop: int) -> Counter:
    """Counter of (pattern, circles) over states start..stop-1."""
    crossings, size, endpoints = compiled
    counts: Counter = Counter()
    for state in range(start, stop):
        parent = list(range(size))
        for i, (s0, s1, s2, s3) in enumerate(crossings):
            if state >> i & 1:
                _union(parent, s1, s2)
                _union(parent, s3, s0)
            else:
                _union(parent, s0, s1)
                _union(parent, s2, s3)
        roots = {_find(parent, i) for i in range(size)}
        if not endpoints:
            counts[("knot", len(roots))] += 1
            continue
        nw, ne, se, sw = (_find(parent, i) for i in endpoints)
        circles = len(roots - {nw, ne, se, sw})
        if nw == ne:
            counts[("a", circles)] += 1
        elif nw == sw:
            counts[("b", circles)] += 1
        else:
            counts[("nonplanar", state)] += 1
    return counts


def _enumerate(d: ShadowDiagram, workers: int) -> Counter:
    compiled = _compile(d)
    total = 2 ** d.crossing_count
    if workers <= 1 or total < PARALLEL_THRESHOLD:
        return _count_states(compiled, 0, total)

    chunk = -(-total // (workers * 4))
    bounds = [(start, min(start + chunk, total)) for start in range(0, total, chunk)]
    counts: Counter = Counter()
    with ProcessPoolExecutor(max_workers=workers) as pool:
        futures = [pool.submit(_count_states, compiled, start, stop) for start, stop in bounds]
        for future in futures:
            counts.update(future.result())
    return counts


def _polynomial(counts: Counter, pattern: str, shift: int) -> Polynomial:
    degrees = {k + shift: v for (p, k), v in counts.items() if p == pattern}
    if not degrees:
        return Polynomial()
    return Polynomial(degrees.get(k, 0) for k in range(max(degrees) + 1))


def state_sum_knot(d: ShadowDiagram, workers: int = 1) -> Polynomial:
    """
    Sum of x^circles over all smoothing states of a knot shadow.

    Raises:
        HasEndpointsError: If the diagram is a tangle
    """
    if d.is_tangle:
        raise HasEndpointsError("state_sum_knot needs a diagram without endpoints")
    counts = _enumerate(d, workers)
    logger.debug("Enumerated %d states of a %d-crossing knot shadow", sum(counts.values()), d.crossing_count)
    return _polynomial(counts, "knot", d.loops)


def state_sum_tangle(d: ShadowDiagram, workers: int = 1) -> BracketPair:
    """
    Bracket pair of a tangle shadow from all smoothing states.

    States joining NW-NE contribute to a, states joining NW-SW to b.

    Raises:
        HasNoEndpointsError: If the diagram has no endpoints
        NonplanarStateError: If some state joins NW to SE
    """
    if not d.is_tangle:
        raise HasNoEndpointsError("state_sum_tangle needs a diagram with four endpoints")
    counts = _enumerate(d, workers)
    bad = sorted(k for (p, k) in counts if p == "nonplanar")
    if bad:
        raise NonplanarStateError(
            f"{len(bad)} smoothing states join NW to SE; the diagram is not planar",
            {"states": bad[:10]},
        )
    logger.debug("Enumerated %d states of a %d-crossing tangle shadow", sum(counts.values()), d.crossing_count)
    return BracketPair(_polynomial(counts, "a", d.loops), _polynomial(counts, "b", d.loops))


def oracle_check(text: str, budget: int = DEFAULT_STATE_BUDGET, workers: int = 1) -> OracleComparison:
    """Compare the algebraic bracket pair of an expression with its state sum."""
    e = parse(text)
    diagram = build_diagram(e, budget)
    comparison = OracleComparison(
        expression=render(e),
        crossings=diagram.crossing_count,
        algebra=bracket_pair(e),
        oracle=state_sum_tangle(diagram, workers),
    )
    logger.info("Oracle check %r: %s", text, "match" if comparison.match else "MISMATCH")
    return comparison


# ---------------------------------------------------------------------------
# Diagram files
# ---------------------------------------------------------------------------

def write_diagram(d: ShadowDiagram) -> str:
    lines = ["tangle" if d.is_tangle else "knot"]
    lines.extend("X " + " ".join(str(label) for label in c) for c in d.crossings)
    lines.extend(f"E {name} {d.endpoints[name]}" for name in ENDPOINTS if name in d.endpoints)
    if d.loops:
        lines.append(f"O {d.loops}")
    return "\n".join(lines) + "\n"


def read_diagram(text: str) -> ShadowDiagram:
    """
    Parse the line-oriented diagram format.

    Only matching consistency is checked: every label must occur exactly
    twice across crossing slots and endpoint lines.

    Raises:
        DiagramFormatError: If the text is malformed
    """
    lines = [line.split("#", 1)[0].strip() for line in text.splitlines()]
    lines = [line for line in lines if line]
    if not lines or lines[0] not in ("tangle", "knot"):
        raise DiagramFormatError("Diagram must start with a 'tangle' or 'knot' header")
    header = lines[0]

    crossings: List[Tuple[int, int, int, int]] = []
    endpoints: Dict[str, int] = {}
    loops = 0
    for number, line in enumerate(lines[1:], start=2):
        fields = line.split()
        try:
            if fields[0] == "X" and len(fields) == 5:
                crossings.append(tuple(int(v) for v in fields[1:]))
            elif fields[0] == "E" and len(fields) == 3 and fields[1] in ENDPOINTS:
                if fields[1] in endpoints:
                    raise DiagramFormatError(f"Line {number}: endpoint {fields[1]} given twice")
                endpoints[fields[1]] = int(fields[2])
            elif fields[0] == "O" and len(fields) == 2:
                loops += int(fields[1])
            else:
                raise DiagramFormatError(f"Line {number}: cannot parse {line!r}")
        except ValueError:
            raise DiagramFormatError(f"Line {number}: labels must be integers in {line!r}")

    if header == "tangle" and set(endpoints) != set(ENDPOINTS):
        raise DiagramFormatError("A tangle needs exactly the endpoints NW, NE, SE, SW")
    if header == "knot" and endpoints:
        raise DiagramFormatError("A knot diagram has no endpoints")

    occurrences = Counter(label for c in crossings for label in c)
    occurrences.update(endpoints.values())
    odd = sorted(label for label, count in occurrences.items() if count != 2)
    if odd:
        raise DiagramFormatError(f"Labels must occur exactly twice; offending labels: {odd}", {"labels": odd})
    return ShadowDiagram(tuple(crossings), endpoints, loops)
