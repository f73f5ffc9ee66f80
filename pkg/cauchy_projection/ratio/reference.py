"""The published k(d) table bundled with the package, and the comparison rules."""

from __future__ import annotations

import csv
from collections.abc import Iterable
from dataclasses import dataclass
from decimal import ROUND_HALF_UP, Decimal, localcontext
from importlib import resources
from typing import Optional


@dataclass(frozen=True)
class ReferenceMismatch:
    """A computed k(d) that disagrees with the printed value."""

    d: int
    printed: str
    computed: float
    rounded: str


def round_half_away(value: float, places: int) -> Decimal:
    """Round ``value`` to ``places`` decimals, ties away from zero.

    The exact binary value of the float is rounded, so no double rounding
    happens on the way through a string. The working precision grows with
    the magnitude of ``value`` so large floats keep every integer digit.
    """
    exact = Decimal(value)
    quantum = Decimal(1).scaleb(-places)
    with localcontext() as ctx:
        ctx.prec = max(ctx.prec, exact.adjusted() + places + 2)
        return exact.quantize(quantum, rounding=ROUND_HALF_UP)


def load_reference_table() -> dict[int, str]:
    """Return the printed k(d) values keyed by dimension.

    Values are kept as the printed strings, since the number of decimals
    printed (three, or four for d = 5) is part of the comparison rule.
    """
    with (
        resources.files(__package__)
        .joinpath("reference_table.csv")
        .open("r", encoding="utf-8") as f
    ):
        return {int(row["d"]): row["printed"] for row in csv.DictReader(f)}


def printed_places(printed: str) -> int:
    """Return the number of decimals in a printed value such as ``0.1875``."""
    _, _, fraction = printed.partition(".")
    return len(fraction)


def compare_with_reference(
    rows: Iterable[tuple[int, float]],
    reference: Optional[dict[int, str]] = None,
) -> list[ReferenceMismatch]:
    """Compare computed ``(d, k)`` rows against the printed table.

    A row agrees when, rounded half away from zero to the printed number of
    decimals, it is within one unit in the last printed digit. Dimensions the
    table does not cover are ignored.

    Args:
        rows: Computed ``(d, k(d))`` pairs
        reference: Printed values; defaults to the bundled table

    Returns:
        Every row that disagrees, in input order
    """
    reference = load_reference_table() if reference is None else reference
    mismatches = []
    for d, computed in rows:
        printed = reference.get(d)
        if printed is None:
            continue
        places = printed_places(printed)
        rounded = round_half_away(computed, places)
        unit = Decimal(1).scaleb(-places)
        if abs(rounded - Decimal(printed)) > unit:
            mismatches.append(
                ReferenceMismatch(
                    d=d, printed=printed, computed=computed, rounded=str(rounded)
                )
            )
    return mismatches
