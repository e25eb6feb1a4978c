"""
Configured entry point to the tangle shadow toolkit
"""

import logging
import os
from pathlib import Path
from typing import List, Optional, Tuple, Union

import pandas as pd

from . import catalog
from .closures import close, repeat_closure
from .exceptions import ConfigurationError
from .fraction import classify
from .models import (
    BracketPair,
    CheckResult,
    Classification,
    ClosureKind,
    OracleComparison,
    TableSpec,
    VerificationReport,
)
from .oeis import DEFAULT_BFILE_DIR, OEIS_LAYOUTS, crosscheck
from .oracle import DEFAULT_STATE_BUDGET, oracle_check
from .poly import Polynomial
from .tangle import bracket_pair, parse
from .utils import export_table, format_pair, format_polynomial, parse_budget, table_frame

logger = logging.getLogger(__name__)

STATE_BUDGET_ENV = "TANGLE_SHADOW_STATE_BUDGET"
BFILE_DIR_ENV = "TANGLE_SHADOW_BFILE_DIR"
WORKERS_ENV = "TANGLE_SHADOW_WORKERS"


class TangleWorkbench:
    """
    Tangle Shadow Workbench

    Evaluates tangle expressions, closes them, regenerates the catalog tables
    and runs the verification harness with one set of settings.
    """

    def __init__(self, state_budget: Union[int, str] = None, bfile_dir: Union[str, Path] = None,
                 workers: int = None, ascending: bool = False):
        """
        Initialize the workbench

        Args:
            state_budget (int or str, optional): Largest number of smoothing states the
                oracle may enumerate, as an integer or ``2^k``
                (defaults to $TANGLE_SHADOW_STATE_BUDGET, then 2^20)
            bfile_dir (str or Path, optional): Directory holding OEIS b-files
                (defaults to $TANGLE_SHADOW_BFILE_DIR, then the packaged snapshots)
            workers (int, optional): Processes used for state enumeration
                (defaults to $TANGLE_SHADOW_WORKERS, then 1)
            ascending (bool): Print polynomials lowest degree first
        """
        if state_budget is None:
            state_budget = os.getenv(STATE_BUDGET_ENV) or DEFAULT_STATE_BUDGET
        self.state_budget = parse_budget(state_budget)

        self.bfile_dir = Path(bfile_dir or os.getenv(BFILE_DIR_ENV) or DEFAULT_BFILE_DIR)

        if workers is None:
            workers = os.getenv(WORKERS_ENV) or 1
        try:
            self.workers = int(workers)
        except (TypeError, ValueError):
            raise ConfigurationError(f"Worker count must be an integer, got {workers!r}",
                                     {"workers": workers})
        if self.workers < 1:
            raise ConfigurationError(f"Worker count must be at least 1, got {self.workers}",
                                     {"workers": self.workers})

        self.ascending = ascending
        logger.debug("Workbench: budget %d, b-files in %s, %d worker(s)",
                     self.state_budget, self.bfile_dir, self.workers)

    def format(self, p: Polynomial) -> str:
        return format_polynomial(p, self.ascending)

    def format_pair(self, p: BracketPair) -> str:
        return format_pair(p.a, p.b, self.ascending)

    def evaluate(self, expression: str) -> BracketPair:
        """
        Bracket pair of a tangle expression

        Args:
            expression (str): Expression such as ``[1]*[2]`` or ``1/[2]#K1``

        Returns:
            BracketPair: The pair (a, b)
        """
        return bracket_pair(parse(expression))

    def close(self, expression: str, kind: Union[ClosureKind, str], rep: Optional[int] = None) -> Polynomial:
        """
        Closure bracket of an expression, or of its n-fold horizontal sum

        Args:
            expression (str): Tangle expression
            kind (ClosureKind or str): N, D or R
            rep (int, optional): Close A_rep instead of A

        Returns:
            Polynomial: The knot shadow bracket
        """
        kind = _kind(kind)
        pair = self.evaluate(expression)
        if rep is None:
            return close(pair, kind)
        return repeat_closure(pair, rep, kind)

    def table(self, entry_id: str = None, kind: Union[ClosureKind, str] = None, table_no: int = None,
              n_range: Tuple[int, int] = (0, 5), k_max: int = None) -> pd.DataFrame:
        """
        Coefficient table of an entry's closure of A_n

        Either ``table_no`` or both ``entry_id`` and ``kind`` must be given.
        Entries without a printed table of that kind are still generated.

        Returns:
            pd.DataFrame: Rows indexed by n, columns k0, k1, ...
        """
        n_min, n_max = n_range
        if table_no is not None:
            spec = catalog.table_spec(table_no)
            rows = catalog.table(spec, n_max=n_max, k_max=k_max, n_min=n_min)
        elif entry_id is not None and kind is not None:
            rows = catalog.entry_table(entry_id, _kind(kind), n_max=n_max, k_max=k_max, n_min=n_min)
        else:
            raise ValueError("Give a table number, or an entry id together with a closure kind")
        logger.debug("Generated %d rows for %s", len(rows), table_no or f"{entry_id}/{kind}")
        return table_frame(rows, n_min)

    def table_spec(self, table_no: int) -> TableSpec:
        return catalog.table_spec(table_no)

    def classify(self, expression: str) -> Classification:
        """Catalog class of an expression's bracket pair"""
        return classify(self.evaluate(expression))

    def verify(self, oracle: bool = True) -> VerificationReport:
        """Run the full catalog verification"""
        return catalog.verify_catalog(oracle=oracle, bfile_dir=self.bfile_dir, budget=self.state_budget)

    def oracle_check(self, expression: str) -> OracleComparison:
        """
        Compare the algebraic pair with the state sum

        Raises:
            BudgetExceededError: If the expression has more states than the budget
        """
        return oracle_check(expression, budget=self.state_budget, workers=self.workers)

    def oeis_check(self, table_no: int = None) -> List[CheckResult]:
        """Cross-check tables against the stored OEIS b-files"""
        numbers = [table_no] if table_no is not None else sorted(OEIS_LAYOUTS)
        results = []
        for number in numbers:
            rows = catalog.table(catalog.table_spec(number))
            results.append(crosscheck(number, rows, self.bfile_dir))
        return results

    def export(self, frame: pd.DataFrame, fmt: str = "csv", table_key: Union[int, str] = "table",
               output: Union[str, Path] = None) -> Optional[str]:
        """Serialize a table as csv, md, json or xlsx"""
        return export_table(frame, fmt, table_key, output)


def _kind(kind: Union[ClosureKind, str]) -> ClosureKind:
    return kind if isinstance(kind, ClosureKind) else ClosureKind.from_tag(kind)
