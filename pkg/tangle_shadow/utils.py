"""
Utility functions for the tangle shadow toolkit
"""

import json
import re
from pathlib import Path
from typing import Dict, List, Optional, Sequence, Tuple, Union

import pandas as pd

from .exceptions import ConfigurationError
from .poly import Polynomial

TABLE_FORMATS = ("csv", "md", "json", "xlsx")


def format_polynomial(p: Polynomial, ascending: bool = False) -> str:
    """
    Render a polynomial with caret exponents, e.g. ``x^2+4x+3``.

    Zero terms are omitted and unit coefficients are implicit; the zero
    polynomial renders as ``0``.
    """
    if p.is_zero():
        return "0"
    degrees = [k for k, c in enumerate(p.coeffs) if c != 0]
    if not ascending:
        degrees.reverse()

    parts = []
    for k in degrees:
        c = p.coeffs[k]
        magnitude = abs(c)
        if k == 0:
            body = str(magnitude)
        else:
            power = "x" if k == 1 else f"x^{k}"
            body = power if magnitude == 1 else f"{magnitude}{power}"
        if not parts:
            parts.append(f"-{body}" if c < 0 else body)
        else:
            parts.append(f"-{body}" if c < 0 else f"+{body}")
    return "".join(parts)


def format_pair(a: Polynomial, b: Polynomial, ascending: bool = False) -> str:
    return f"a = {format_polynomial(a, ascending)}, b = {format_polynomial(b, ascending)}"


def parse_range(text: str) -> Tuple[int, int]:
    """Parse ``"0..5"`` or ``"3"`` into an inclusive (low, high) range."""
    match = re.fullmatch(r"\s*(\d+)\s*(?:\.\.\s*(\d+)\s*)?", text)
    if not match:
        raise ValueError(f"Invalid range {text!r}; expected N or LOW..HIGH")
    low = int(match.group(1))
    high = int(match.group(2)) if match.group(2) is not None else low
    if high < low:
        raise ValueError(f"Invalid range {text!r}; high end is below low end")
    return low, high


def parse_budget(value: Union[str, int]) -> int:
    """Parse a state budget given as an integer or as ``2^k``."""
    if isinstance(value, int):
        budget = value
    else:
        text = value.strip().replace(" ", "")
        match = re.fullmatch(r"(\d+)(?:\^(\d+))?", text)
        if not match:
            raise ConfigurationError(f"Invalid state budget {value!r}; use an integer or 2^k")
        base = int(match.group(1))
        budget = base ** int(match.group(2)) if match.group(2) is not None else base
    if budget < 1:
        raise ConfigurationError(f"State budget must be positive, got {budget}")
    return budget


def table_frame(rows: Sequence[Sequence[int]], n_min: int = 0) -> pd.DataFrame:
    """
    Table rows as a DataFrame indexed by n with columns k0, k1, ...

    Cells beyond a row's degree are empty; values stay Python ints.
    """
    width = max((len(row) for row in rows), default=0)
    data = [list(row) + [None] * (width - len(row)) for row in rows]
    frame = pd.DataFrame(data, columns=[f"k{k}" for k in range(width)], dtype=object)
    frame.index = pd.RangeIndex(n_min, n_min + len(rows), name="n")
    return frame


def table_to_csv(frame: pd.DataFrame) -> str:
    return frame.to_csv(lineterminator="\n")


def table_to_markdown(frame: pd.DataFrame) -> str:
    header = ["n"] + list(frame.columns)
    lines = [
        "| " + " | ".join(header) + " |",
        "|" + "|".join("---:" for _ in header) + "|",
    ]
    for n, row in frame.iterrows():
        cells = [str(n)] + ["" if v is None or pd.isna(v) else str(v) for v in row]
        lines.append("| " + " | ".join(cells) + " |")
    return "\n".join(lines) + "\n"


def rows_from_frame(frame: pd.DataFrame) -> List[List[int]]:
    """Rows of a table frame with the empty cells dropped."""
    return [[int(v) for v in row if v is not None and not pd.isna(v)] for _, row in frame.iterrows()]


def table_to_json(tables: Dict[int, pd.DataFrame]) -> str:
    """``{"<table>": {"<n>": [cells...]}}`` with row keys as strings."""
    payload = {}
    for table_no, frame in tables.items():
        payload[str(table_no)] = dict(zip((str(n) for n in frame.index), rows_from_frame(frame)))
    return json.dumps(payload, indent=2) + "\n"


def export_table(frame: pd.DataFrame, fmt: str, table_key: Union[int, str] = "table",
                 output: Optional[Union[str, Path]] = None) -> Optional[str]:
    """
    Serialize a table.

    Text formats are returned (and written to ``output`` when given); xlsx
    is written through openpyxl and needs an output path.
    """
    fmt = fmt.lower()
    if fmt not in TABLE_FORMATS:
        raise ValueError(f"Unknown table format {fmt!r}; choose from {', '.join(TABLE_FORMATS)}")
    if fmt == "xlsx":
        if output is None:
            raise ValueError("xlsx export needs an output path")
        frame.to_excel(output, sheet_name=f"table {table_key}", engine="openpyxl")
        return None

    if fmt == "csv":
        text = table_to_csv(frame)
    elif fmt == "md":
        text = table_to_markdown(frame)
    else:
        text = table_to_json({table_key: frame})
    if output is not None:
        Path(output).write_text(text, encoding="utf-8")
    return text
