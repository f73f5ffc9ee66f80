"""Four independent routes to k(d), the ratio of mean shadow to surface area.

* closed form: k(d) = 1 / (√π (d−1) M_d)
* recursion:   k(d+1) = 1 / (2π d k(d)), anchored at k(2) = 1/π
* products:    exact rational times π^0 (odd d) or π^-1 (even d)
* series:      large-d expansion in x = 1/d, five known coefficients
"""

import itertools
import logging
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from ..config import MAX_TABLE_DIMENSION, MIN_DIMENSION, SERIES_MAX_TERMS
from ..errors import DomainError, RangeError
from ..special.gammafn import gamma_ratio_M, require_dimension

logger = logging.getLogger(__name__)

# (coefficient, power of x) for k(d)·√(2π)
SERIES_COEFFICIENTS: tuple[tuple[Fraction, Fraction], ...] = (
    (Fraction(1), Fraction(1, 2)),
    (Fraction(1, 4), Fraction(3, 2)),
    (Fraction(1, 32), Fraction(5, 2)),
    (Fraction(-5, 128), Fraction(7, 2)),
    (Fraction(-21, 2048), Fraction(9, 2)),
)

# The series is only reported from this dimension on, where five terms are
# accurate to 1e-4.
SERIES_MIN_DIMENSION = 5


@dataclass(frozen=True)
class ExactRatio:
    """An exact value ``q · π**pi_exp`` with rational q and pi_exp in {-1, 0}."""

    q: Fraction
    pi_exp: int

    def __post_init__(self) -> None:
        if not isinstance(self.q, Fraction):
            object.__setattr__(self, "q", Fraction(self.q))
        if self.q <= 0:
            raise DomainError(f"q must be positive, got {self.q}")
        if self.pi_exp not in (-1, 0):
            raise DomainError(f"pi_exp must be -1 or 0, got {self.pi_exp}")

    def to_real(self) -> float:
        """Return the value as a float."""
        value = float(self.q)
        return value / math.pi if self.pi_exp == -1 else value

    def __str__(self) -> str:
        if self.pi_exp == 0:
            return str(self.q)
        if self.q.denominator == 1:
            return f"{self.q.numerator}/π"
        return f"{self.q.numerator}/({self.q.denominator}π)"


@dataclass(frozen=True)
class RatioReport:
    """k(d) by every route, with the worst disagreement among the exact ones."""

    d: int
    closed: float
    recursive: float
    product: ExactRatio
    series: Optional[float]
    max_pairwise_rel_err: float


def k_closed(d: int) -> float:
    """Return k(d) from the gamma-function closed form.

    Valid far beyond the table range because M_d is evaluated in log space.

    Raises:
        DomainError: If d < 2
    """
    require_dimension(d, MIN_DIMENSION)
    return 1.0 / (math.sqrt(math.pi) * (d - 1) * gamma_ratio_M(d))


def k_recursive(d: int) -> float:
    """Return k(d) by stepping k(n+1) = 1/(2π n k(n)) up from k(2) = 1/π.

    Raises:
        DomainError: If d < 2
    """
    require_dimension(d, MIN_DIMENSION)
    k = 1.0 / math.pi
    for n in range(MIN_DIMENSION, d):
        k = 1.0 / (2.0 * math.pi * n * k)
    return k


def k_product(d: int) -> ExactRatio:
    """Return k(d) exactly from the odd/even product formulas.

    Odd d:  (1/2) · Π_{n=0}^{(d−3)/2} (2n+1)/(2n+2)
    Even d: (1/π) · Π_{n=0}^{(d−4)/2} (2n+2)/(2n+3)

    An empty index range contributes 1, which yields k(2) = 1/π.

    Raises:
        DomainError: If d < 2
    """
    require_dimension(d, MIN_DIMENSION)
    q = Fraction(1)
    if d % 2 == 1:
        for n in range((d - 3) // 2 + 1):
            q *= Fraction(2 * n + 1, 2 * n + 2)
        return ExactRatio(q=q / 2, pi_exp=0)

    for n in range((d - 4) // 2 + 1):
        q *= Fraction(2 * n + 2, 2 * n + 3)
    return ExactRatio(q=q, pi_exp=-1)


def k_series(d: int, n_terms: int = SERIES_MAX_TERMS) -> float:
    """Return the partial sum of the large-d series of k(d) with ``n_terms`` terms.

    Args:
        d: Dimension, at least 2
        n_terms: Number of series terms, 1 to 5

    Raises:
        DomainError: If d < 2 or n_terms is outside [1, 5]
    """
    require_dimension(d, MIN_DIMENSION)
    if isinstance(n_terms, bool) or not isinstance(n_terms, int):
        raise DomainError(f"n_terms must be an integer, got {n_terms!r}")
    if not 1 <= n_terms <= SERIES_MAX_TERMS:
        raise DomainError(
            f"n_terms must be between 1 and {SERIES_MAX_TERMS}, got {n_terms}"
        )

    x = 1.0 / d
    total = math.fsum(
        float(coefficient) * x ** float(power)
        for coefficient, power in SERIES_COEFFICIENTS[:n_terms]
    )
    return total / math.sqrt(2.0 * math.pi)


def mean_abs_cosine(d: int) -> float:
    """Return the direction average of |n·u| for a fixed unit normal n in R^d.

    A surface element is seen from half of all directions, and from those its
    mean foreshortening is V_{d−1}/S_{H,d}; the full-sphere average of the
    absolute cosine is therefore 2·k(d) (1/2 in three dimensions).
    """
    return 2.0 * k_closed(d)


def relative_error(a: float, b: float) -> float:
    """Return |a − b| / max(|a|, |b|), or 0 when both are zero."""
    scale = max(abs(a), abs(b))
    return 0.0 if scale == 0.0 else abs(a - b) / scale


def ratio_report(d: int) -> RatioReport:
    """Evaluate every route at ``d`` and cross-check the exact ones.

    The series is reported only for d >= 5.

    Raises:
        DomainError: If d < 2
    """
    closed = k_closed(d)
    recursive = k_recursive(d)
    product = k_product(d)
    series = k_series(d) if d >= SERIES_MIN_DIMENSION else None

    exact_routes = (closed, recursive, product.to_real())
    worst = max(
        relative_error(a, b) for a, b in itertools.combinations(exact_routes, 2)
    )
    logger.debug(
        "k(%d): closed=%r recursive=%r worst=%.3g", d, closed, recursive, worst
    )

    return RatioReport(
        d=d,
        closed=closed,
        recursive=recursive,
        product=product,
        series=series,
        max_pairwise_rel_err=worst,
    )


def check_table_range(d_min: int, d_max: int) -> None:
    """Validate a dimension range for tables and plot data.

    Raises:
        RangeError: Unless 2 <= d_min <= d_max <= 64
    """
    for name, value in (("d_min", d_min), ("d_max", d_max)):
        if isinstance(value, bool) or not isinstance(value, int):
            raise RangeError(f"{name} must be an integer, got {value!r}")
    if d_min < MIN_DIMENSION:
        raise RangeError(f"d_min must be >= {MIN_DIMENSION}, got {d_min}")
    if d_max > MAX_TABLE_DIMENSION:
        raise RangeError(f"d_max must be <= {MAX_TABLE_DIMENSION}, got {d_max}")
    if d_min > d_max:
        raise RangeError(f"d_min ({d_min}) must not exceed d_max ({d_max})")


def table(d_min: int, d_max: int) -> list[tuple[int, float]]:
    """Return ``(d, k(d))`` rows for every d in [d_min, d_max].

    Raises:
        RangeError: Unless 2 <= d_min <= d_max <= 64
    """
    check_table_range(d_min, d_max)
    return [(d, k_closed(d)) for d in range(d_min, d_max + 1)]
