"""CSV, JSON and plain-text rendering of command results.

Every command produces a list of records (column name → value). CSV and text
print floats with a fixed number of decimals, rounded half away from zero;
JSON prints the shortest representation that round-trips.
"""

from __future__ import annotations

import csv
import json
import math
from collections.abc import Mapping, Sequence
from typing import Any, Optional, TextIO, Union

from ..ratio.reference import round_half_away

FORMATS = ("csv", "json", "text")

Value = Union[int, float, str, bool, None]
Record = Mapping[str, Value]


def format_value(value: Value, digits: int, style: str = "fixed") -> str:
    """Render one value for CSV or text output.

    Args:
        value: Cell value
        digits: Decimals (``fixed``), significant digits (``significant``) or
            mantissa decimals (``scientific``) for floats
        style: How floats are printed
    """
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        if style == "significant":
            return f"{value:.{digits}g}"
        if style == "scientific":
            return f"{value:.{digits}e}"
        if not math.isfinite(value):
            return str(value)
        return str(round_half_away(value, digits))
    return str(value)


def _cells(record: Record, digits: int, styles: Mapping[str, str]) -> list[str]:
    return [
        format_value(value, digits, styles.get(name, "fixed"))
        for name, value in record.items()
    ]


def write_records(
    records: Sequence[Record],
    fmt: str,
    stream: TextIO,
    digits: int = 6,
    styles: Optional[Mapping[str, str]] = None,
    single: bool = False,
) -> None:
    """Write records to ``stream`` in the requested format.

    Args:
        records: Rows sharing the same columns
        fmt: ``csv``, ``json`` or ``text``
        stream: Destination
        digits: Float precision for CSV and text
        styles: Per-column float style, ``fixed`` by default
        single: Emit JSON as one object rather than an array
    """
    styles = styles or {}
    if fmt == "json":
        payload: Any = dict(records[0]) if single else [dict(r) for r in records]
        stream.write(json.dumps(payload, ensure_ascii=False) + "\n")
        return

    header = list(records[0].keys()) if records else []
    rows = [_cells(record, digits, styles) for record in records]
    if fmt == "csv":
        writer = csv.writer(stream, lineterminator="\n")
        writer.writerow(header)
        writer.writerows(rows)
        return

    if single and records:
        width = max(len(name) for name in header)
        for name, cell in zip(header, rows[0]):
            stream.write(f"{name.ljust(width)}  {cell}\n")
        return

    widths = [
        max([len(name)] + [len(row[i]) for row in rows])
        for i, name in enumerate(header)
    ]
    stream.write("  ".join(n.rjust(w) for n, w in zip(header, widths)) + "\n")
    for row in rows:
        stream.write("  ".join(c.rjust(w) for c, w in zip(row, widths)) + "\n")
