"""
Command-line front end: ``tangle-shadow <command> ...``
"""

import argparse
import logging
import sys
from typing import List, Optional

from . import __version__
from .exceptions import BudgetExceededError, TangleShadowException
from .models import CheckStatus
from .utils import TABLE_FORMATS, parse_range
from .workbench import TangleWorkbench

logger = logging.getLogger(__name__)

FORMAT = "%(asctime)-15s | %(levelname)-8s | %(message)s"

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_MISMATCH = 2
EXIT_BUDGET = 3


class _ArgumentParser(argparse.ArgumentParser):
    """Usage errors exit 1; 2 is reserved for verification mismatches."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _kind(value: str) -> str:
    return value.strip().upper()


def build_parser() -> argparse.ArgumentParser:
    parser = _ArgumentParser(
        prog="tangle-shadow",
        description="Bracket polynomials of 2-tangle shadows and their closures.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument("-v", "--verbose", action="count", default=0,
                        help="-v for progress, -vv for debug output")
    order = parser.add_mutually_exclusive_group()
    order.add_argument("--asc", dest="ascending", action="store_true",
                       help="print polynomials lowest degree first")
    order.add_argument("--desc", dest="ascending", action="store_false",
                       help="print polynomials highest degree first (default)")
    parser.set_defaults(ascending=False)
    parser.add_argument("--workers", type=int, default=None,
                        help="processes for state enumeration (default $TANGLE_SHADOW_WORKERS or 1)")
    parser.add_argument("--bfile-dir", default=None,
                        help="directory of OEIS b-files (default $TANGLE_SHADOW_BFILE_DIR)")

    commands = parser.add_subparsers(dest="command", metavar="command")
    commands.required = True

    p = commands.add_parser("eval", help="print the bracket pair of an expression")
    p.add_argument("expression")

    p = commands.add_parser("close", help="print a closure polynomial")
    p.add_argument("expression")
    p.add_argument("--kind", type=_kind, choices=["N", "D", "R"], required=True)
    p.add_argument("--rep", type=int, default=None, help="close the n-fold horizontal sum")

    p = commands.add_parser("table", help="generate a coefficient table")
    p.add_argument("--entry", help="catalog entry, e.g. A7")
    p.add_argument("--kind", type=_kind, choices=["N", "D", "R"])
    p.add_argument("--table", type=int, dest="table_no", help="printed table number 1..81")
    p.add_argument("--n", dest="n_range", default="0..5", help="row range, e.g. 0..5")
    p.add_argument("--k-max", type=int, default=None, help="pad or cut rows to k = 0..K")
    p.add_argument("--format", dest="fmt", choices=TABLE_FORMATS, default="csv")
    p.add_argument("--output", default=None, help="write to a file instead of stdout")

    p = commands.add_parser("classify", help="match an expression against the catalog")
    p.add_argument("expression")

    p = commands.add_parser("verify", help="run the full catalog verification")
    p.add_argument("--no-oracle", dest="oracle", action="store_false",
                   help="skip the state-sum checks")
    p.add_argument("--budget", default=None, help="state budget, e.g. 2^20")
    p.add_argument("--all", dest="show_all", action="store_true", help="list passing checks too")

    p = commands.add_parser("oracle-check", help="compare algebra with the brute-force state sum")
    p.add_argument("expression")
    p.add_argument("--budget", default=None, help="state budget, e.g. 2^20")

    p = commands.add_parser("oeis-check", help="compare tables with stored OEIS b-files")
    p.add_argument("--table", type=int, dest="table_no", default=None)

    return parser


def _workbench(args) -> TangleWorkbench:
    return TangleWorkbench(
        state_budget=getattr(args, "budget", None),
        bfile_dir=args.bfile_dir,
        workers=args.workers,
        ascending=args.ascending,
    )


def _run_eval(bench: TangleWorkbench, args) -> int:
    print(bench.format_pair(bench.evaluate(args.expression)))
    return EXIT_OK


def _run_close(bench: TangleWorkbench, args) -> int:
    print(bench.format(bench.close(args.expression, args.kind, args.rep)))
    return EXIT_OK


def _run_table(bench: TangleWorkbench, args) -> int:
    if args.table_no is None and (args.entry is None or args.kind is None):
        raise ValueError("table needs --table N, or --entry together with --kind")
    frame = bench.table(
        entry_id=args.entry,
        kind=args.kind,
        table_no=args.table_no,
        n_range=parse_range(args.n_range),
        k_max=args.k_max,
    )
    key = args.table_no if args.table_no is not None else f"{args.entry.upper()}-{args.kind}"
    text = bench.export(frame, args.fmt, key, args.output)
    if args.output is None:
        sys.stdout.write(text)
    else:
        logger.info("Wrote %s table to %s", args.fmt, args.output)
    return EXIT_OK


def _run_classify(bench: TangleWorkbench, args) -> int:
    print(bench.classify(args.expression).describe())
    return EXIT_OK


def _run_verify(bench: TangleWorkbench, args) -> int:
    report = bench.verify(oracle=args.oracle)
    for check in report.checks:
        if args.show_all or check.status is not CheckStatus.PASS:
            line = f"{check.status.value:<5} {check.name}"
            print(f"{line}: {check.detail}" if check.detail else line)
    print(", ".join(f"{status} {count}" for status, count in report.summary().items()))
    return EXIT_OK if report.ok else EXIT_MISMATCH


def _run_oracle_check(bench: TangleWorkbench, args) -> int:
    result = bench.oracle_check(args.expression)
    print(f"tangle:    {result.expression}")
    print(f"crossings: {result.crossings}")
    print(f"algebra:   {bench.format_pair(result.algebra)}")
    print(f"state sum: {bench.format_pair(result.oracle)}")
    print("match" if result.match else "MISMATCH")
    return EXIT_OK if result.match else EXIT_MISMATCH


def _run_oeis_check(bench: TangleWorkbench, args) -> int:
    results = bench.oeis_check(args.table_no)
    for check in results:
        line = f"{check.status.value:<5} {check.name}"
        print(f"{line}: {check.detail}" if check.detail else line)
    failed = any(check.status is CheckStatus.FAIL for check in results)
    return EXIT_MISMATCH if failed else EXIT_OK


COMMANDS = {
    "eval": _run_eval,
    "close": _run_close,
    "table": _run_table,
    "classify": _run_classify,
    "verify": _run_verify,
    "oracle-check": _run_oracle_check,
    "oeis-check": _run_oeis_check,
}


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)

    level = {0: logging.WARNING, 1: logging.INFO}.get(args.verbose, logging.DEBUG)
    logging.basicConfig(format=FORMAT, level=level)

    try:
        bench = _workbench(args)
        return COMMANDS[args.command](bench, args)
    except BudgetExceededError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_BUDGET
    except (TangleShadowException, ValueError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
