"""
Data models for the tangle shadow toolkit
"""

from dataclasses import dataclass, field
from enum import Enum
from typing import Dict, List, Optional, Tuple

from .poly import ONE, ZERO, Polynomial
from .utils import format_polynomial


@dataclass(frozen=True)
class BracketPair:
    """Coefficients (a, b) of a tangle bracket a<[0]> + b<[inf]>"""
    a: Polynomial
    b: Polynomial

    def is_zero(self) -> bool:
        return self.a.is_zero() and self.b.is_zero()

    @property
    def state_count(self) -> int:
        """a(1) + b(1), the number of smoothing states."""
        return self.a(1) + self.b(1)


ZERO_PAIR = BracketPair(ONE, ZERO)
INFINITY_PAIR = BracketPair(ZERO, ONE)
TWIST_PAIR = BracketPair(ONE, ONE)


class ClosureKind(Enum):
    """Ways of closing a 2-tangle into a knot shadow"""
    NUMERATOR = "N"
    DENOMINATOR = "D"
    R_CLOSURE = "R"

    @classmethod
    def from_tag(cls, tag: str) -> "ClosureKind":
        value = tag.strip().upper()
        for kind in cls:
            if kind.value == value or kind.name == value:
                return kind
        raise ValueError(f"Unknown closure kind: {tag!r} (expected N, D or R)")


class TangleExpr:
    """Base class of tangle expression nodes"""
    __slots__ = ()


@dataclass(frozen=True)
class Zero(TangleExpr):
    pass


@dataclass(frozen=True)
class Infinity(TangleExpr):
    pass


@dataclass(frozen=True)
class Twist(TangleExpr):
    n: int


@dataclass(frozen=True)
class InvTwist(TangleExpr):
    n: int


@dataclass(frozen=True)
class HSum(TangleExpr):
    left: TangleExpr
    right: TangleExpr


@dataclass(frozen=True)
class VSum(TangleExpr):
    left: TangleExpr
    right: TangleExpr


@dataclass(frozen=True)
class Inverse(TangleExpr):
    child: TangleExpr


@dataclass(frozen=True)
class ConnectKnot(TangleExpr):
    """Local knot with bracket ``knot`` tied into ``child``; ``name`` is K1..K6 when known."""
    child: TangleExpr
    knot: Polynomial
    name: Optional[str] = None


@dataclass(frozen=True)
class Rep(TangleExpr):
    """n-fold horizontal sum of ``child``"""
    child: TangleExpr
    n: int


@dataclass(frozen=True)
class KnotClass:
    """Knot shadow class with its bracket"""
    id: str
    bracket: Polynomial
    composition: Tuple[str, ...] = ()

    @property
    def crossings(self) -> int:
        return (self.bracket(1)).bit_length() - 1


class TangleFraction:
    """Base class of polynomial fraction values"""
    __slots__ = ()


@dataclass(frozen=True)
class FiniteFraction(TangleFraction):
    """Reduced num/den with den nonzero and positive leading coefficient"""
    num: Polynomial
    den: Polynomial


@dataclass(frozen=True)
class InfiniteFraction(TangleFraction):
    pass


INFINITE = InfiniteFraction()


@dataclass(frozen=True)
class SkeletonReport:
    """Coprime skeleton of a pair and the bracket of the knot factored out"""
    skeleton: BracketPair
    knot_factor: Polynomial
    is_prime: bool


class ClassificationStatus(Enum):
    EXACT = "exact"
    DECOMPOSITION = "decomposition"
    UNRECOGNIZED = "unrecognized"


@dataclass(frozen=True)
class Classification:
    """Result of matching a bracket pair against the catalog"""
    status: ClassificationStatus
    pair: BracketPair
    entry_id: Optional[str] = None
    skeleton_id: Optional[str] = None
    knot_ids: Tuple[str, ...] = ()
    knot_factor: Optional[Polynomial] = None

    def describe(self) -> str:
        knots = "".join(f" # {k}" for k in self.knot_ids)
        if self.status is ClassificationStatus.EXACT:
            if self.skeleton_id and self.skeleton_id != self.entry_id:
                return f"{self.entry_id} = skeleton {self.skeleton_id}{knots}"
            return self.entry_id
        if self.status is ClassificationStatus.DECOMPOSITION:
            if knots:
                return f"skeleton {self.skeleton_id}{knots}"
            return f"skeleton {self.skeleton_id} # knot factor {format_polynomial(self.knot_factor)}"
        return "Unrecognized"


@dataclass(frozen=True)
class Erratum:
    """A printed value that disagrees with recomputation"""
    label: str
    field: str
    printed: Polynomial
    corrected: Polynomial
    printed_text: str = ""


@dataclass(frozen=True)
class ClosureFormula:
    """
    Printed closed forms of an entry's closures:
    D = x S^n, N = S^n + (x^2-1) T^n, R = r_factor S^n + (x^2-1) T^n
    """
    s: Polynomial
    t: Polynomial
    r_factor: Polynomial


@dataclass(frozen=True)
class CatalogEntry:
    """One tangle class of the catalog, as printed"""
    id: str
    printed_pair: BracketPair
    members: Tuple[str, ...]
    formula: ClosureFormula
    tables: Dict[ClosureKind, int] = field(default_factory=dict)
    skeleton_id: Optional[str] = None
    knot_id: Optional[str] = None
    errata: Tuple[Erratum, ...] = ()

    @property
    def pair(self) -> BracketPair:
        """The printed pair with errata applied"""
        fixes = {e.field: e.corrected for e in self.errata}
        return BracketPair(fixes.get("a", self.printed_pair.a), fixes.get("b", self.printed_pair.b))

    @property
    def is_locally_knotted(self) -> bool:
        return self.knot_id is not None


@dataclass(frozen=True)
class TableSpec:
    """A printed coefficient table and the closures it lists"""
    table_no: int
    entry: str
    kind: ClosureKind
    rows: Tuple[Tuple[int, ...], ...]
    truncated: Tuple[bool, ...]
    suffixes: Tuple[Tuple[int, ...], ...] = ()
    refs: Tuple[Tuple[ClosureKind, str], ...] = ()
    oeis: Optional[str] = None


class CheckStatus(Enum):
    PASS = "PASS"
    WARN = "WARN"
    FAIL = "FAIL"
    SKIP = "SKIP"


@dataclass
class CheckResult:
    """Outcome of one verification check"""
    name: str
    status: CheckStatus
    detail: str = ""


@dataclass
class VerificationReport:
    """Collected outcome of a catalog verification run"""
    checks: List[CheckResult] = field(default_factory=list)

    def add(self, name: str, status: CheckStatus, detail: str = "") -> CheckResult:
        result = CheckResult(name, status, detail)
        self.checks.append(result)
        return result

    def by_status(self, status: CheckStatus) -> List[CheckResult]:
        return [c for c in self.checks if c.status is status]

    @property
    def ok(self) -> bool:
        return not self.by_status(CheckStatus.FAIL)

    def summary(self) -> Dict[str, int]:
        return {status.value: len(self.by_status(status)) for status in CheckStatus}


@dataclass(frozen=True)
class OracleComparison:
    """Bracket pair of an expression computed algebraically and by state sum"""
    expression: str
    crossings: int
    algebra: BracketPair
    oracle: BracketPair

    @property
    def match(self) -> bool:
        return self.algebra == self.oracle
