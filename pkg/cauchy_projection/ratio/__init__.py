"""k(d) by closed form, recursion, exact products and large-d series."""

from .reference import (
    ReferenceMismatch,
    compare_with_reference,
    load_reference_table,
    round_half_away,
)
from .routes import (
    ExactRatio,
    RatioReport,
    k_closed,
    k_product,
    k_recursive,
    k_series,
    mean_abs_cosine,
    ratio_report,
    table,
)

__all__ = [
    "ExactRatio",
    "RatioReport",
    "ReferenceMismatch",
    "compare_with_reference",
    "k_closed",
    "k_product",
    "k_recursive",
    "k_series",
    "load_reference_table",
    "mean_abs_cosine",
    "ratio_report",
    "round_half_away",
    "table",
]
