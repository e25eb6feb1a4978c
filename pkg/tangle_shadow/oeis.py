"""
Cross-checks of generated tables against OEIS b-files stored on disk.
"""

import logging
from pathlib import Path
from typing import Dict, List, Optional, Sequence, Union

import pandas as pd

from .exceptions import TableNotFoundError
from .models import CheckResult, CheckStatus

logger = logging.getLogger(__name__)

DEFAULT_BFILE_DIR = Path(__file__).resolve().parent / "data" / "oeis"

# table number -> (sequence id, drop the x^0 column before flattening)
OEIS_LAYOUTS = {
    1: ("A007318", True),
    4: ("A034870", True),
    7: ("A038208", True),
    79: ("A129185", False),
}


def bfile_path(oeis_id: str, bfile_dir: Union[str, Path, None] = None) -> Path:
    directory = Path(bfile_dir) if bfile_dir is not None else DEFAULT_BFILE_DIR
    return directory / f"b{oeis_id[1:]}.txt"


def read_bfile(path: Union[str, Path]) -> Dict[int, int]:
    """
    Read a b-file of ``index value`` lines; ``#`` starts a comment.

    Values are read as text and converted to Python ints so that large terms
    keep full precision.
    """
    frame = pd.read_csv(
        path,
        sep=r"\s+",
        comment="#",
        header=None,
        names=["index", "value"],
        dtype=str,
        engine="python",
    )
    frame = frame.dropna()
    return {int(i): int(v) for i, v in zip(frame["index"], frame["value"])}


def flatten_rows(rows: Sequence[Sequence[int]], drop_leading: bool) -> List[int]:
    terms: List[int] = []
    for row in rows:
        terms.extend(row[1:] if drop_leading else row)
    return terms


def crosscheck(table_no: int, rows: Sequence[Sequence[int]],
               bfile_dir: Union[str, Path, None] = None) -> CheckResult:
    """
    Compare generated table rows with the b-file of the table's sequence.

    A missing b-file is reported as SKIP. Only the overlap of the generated
    terms and the stored terms is compared.
    """
    if table_no not in OEIS_LAYOUTS:
        raise TableNotFoundError(f"Table {table_no} has no OEIS layout", {"table": table_no})
    oeis_id, drop_leading = OEIS_LAYOUTS[table_no]
    name = f"oeis T{table_no} {oeis_id}"
    path = bfile_path(oeis_id, bfile_dir)
    if not path.is_file():
        logger.warning("No b-file for %s at %s, skipping", oeis_id, path)
        return CheckResult(name, CheckStatus.SKIP, f"missing {path}")

    stored = read_bfile(path)
    values = [stored[i] for i in sorted(stored)]
    expected = flatten_rows(rows, drop_leading)
    overlap = min(len(values), len(expected))
    if overlap == 0:
        return CheckResult(name, CheckStatus.SKIP, f"{path} holds no terms")

    for position in range(overlap):
        if values[position] != expected[position]:
            return CheckResult(
                name,
                CheckStatus.FAIL,
                f"term {position}: table gives {expected[position]}, b-file gives {values[position]}",
            )
    logger.debug("%s agrees on %d terms", oeis_id, overlap)
    return CheckResult(name, CheckStatus.PASS, f"{overlap} terms agree")


def crosscheck_all(tables: Dict[int, Sequence[Sequence[int]]],
                   bfile_dir: Optional[Union[str, Path]] = None) -> List[CheckResult]:
    return [crosscheck(t, rows, bfile_dir) for t, rows in sorted(tables.items()) if t in OEIS_LAYOUTS]
