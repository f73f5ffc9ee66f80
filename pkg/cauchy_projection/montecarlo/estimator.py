"""Monte Carlo estimate of the direction-averaged shadow and the k(d) check."""

from __future__ import annotations

import logging
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from functools import reduce
from typing import NamedTuple, Optional

import numpy as np

from ..config import (
    ACCEPTANCE_SIGMAS,
    DEFAULT_SEED,
    DEFAULT_WORKERS,
    EXACT_PASS_TOLERANCE,
)
from ..errors import DomainError
from ..geometry.measures import shadow_area, shadow_areas, surface_area
from ..geometry.shapes import Ball, Direction, Shape
from ..ratio.routes import k_product
from .sampler import DirectionStream, Seed

logger = logging.getLogger(__name__)

FRAMES = ("observer", "body")


@dataclass(frozen=True)
class ShadowEstimate:
    """Sample mean and standard error of the shadow over random directions."""

    mean: float
    stderr: float
    n_samples: int
    dim: int
    seed: Seed

    def __post_init__(self) -> None:
        if self.n_samples < 2:
            raise DomainError(f"n_samples must be >= 2, got {self.n_samples}")
        if self.stderr < 0.0:
            raise DomainError(f"stderr must be >= 0, got {self.stderr}")


@dataclass(frozen=True)
class VerificationRecord:
    """Outcome of checking ⟨shadow⟩ / surface area against k(d)."""

    estimate: ShadowEstimate
    surface_area: float
    ratio: float
    predicted: float
    z_score: Optional[float]
    passed: bool

    @property
    def observed_ratio(self) -> float:
        """The estimated ⟨shadow⟩ / surface area."""
        return self.estimate.mean / self.surface_area


class _Moments(NamedTuple):
    count: int
    mean: float
    m2: float


def _moments(values: np.ndarray) -> _Moments:
    mean = float(np.mean(values))
    return _Moments(len(values), mean, float(np.sum((values - mean) ** 2)))


def _merge(a: _Moments, b: _Moments) -> _Moments:
    """Combine the moments of two disjoint samples (Chan et al. pairwise update)."""
    count = a.count + b.count
    delta = b.mean - a.mean
    mean = a.mean + delta * b.count / count
    m2 = a.m2 + b.m2 + delta * delta * a.count * b.count / count
    return _Moments(count, mean, m2)


def _check_samples(n: int) -> None:
    if isinstance(n, bool) or not isinstance(n, int):
        raise DomainError(f"n must be an integer, got {n!r}")
    if n < 2:
        raise DomainError(f"n must be >= 2, got {n}")


def mean_projected_area(
    s: Shape,
    n: int,
    seed: int = DEFAULT_SEED,
    workers: int = DEFAULT_WORKERS,
    frame: str = "observer",
) -> ShadowEstimate:
    """Estimate the mean shadow of ``s`` over ``n`` uniform random directions.

    The samples are split into fixed blocks whose moments are merged in block
    order, so the result is bit-identical for every ``workers`` value.

    In the ``"observer"`` frame the body is fixed and the line of sight is
    random. In the ``"body"`` frame the line of sight is the last coordinate
    axis and the body is turned by a Haar-random rotation Q for each sample;
    the shadow of Q·s along e_d is the shadow of s along Qᵀe_d.

    Args:
        s: Shape to cast shadows of
        n: Number of directions, at least 2
        seed: 64-bit unsigned seed
        workers: Number of threads evaluating blocks
        frame: ``"observer"`` or ``"body"``

    Returns:
        The estimate; balls have a constant shadow and report stderr 0

    Raises:
        DomainError: If n, seed, workers or frame is invalid
        DegenerateGeometryError: If a projected hull is degenerate
    """
    _check_samples(n)
    seed = Seed(seed)
    if isinstance(workers, bool) or not isinstance(workers, int) or workers < 1:
        raise DomainError(f"workers must be a positive integer, got {workers!r}")
    if frame not in FRAMES:
        raise DomainError(f"frame must be one of {FRAMES}, got {frame!r}")

    if isinstance(s, Ball):
        value = shadow_area(s, Direction.axis(s.dim))
        return ShadowEstimate(value, 0.0, n, s.dim, seed)

    stream = DirectionStream(s.dim, seed)
    n_blocks = -(-n // stream.block_size)

    def block_moments(index: int) -> _Moments:
        count = min(stream.block_size, n - index * stream.block_size)
        if frame == "observer":
            directions = stream.block(index)[:count]
        else:
            directions = stream.rotations(index, count)[:, -1, :]
        return _moments(shadow_areas(s, directions))

    logger.debug(
        "estimating shadow in R^%d: n=%d, %d blocks, %d workers, frame=%s",
        s.dim,
        n,
        n_blocks,
        workers,
        frame,
    )
    if workers == 1 or n_blocks == 1:
        partials = [block_moments(index) for index in range(n_blocks)]
    else:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            partials = list(pool.map(block_moments, range(n_blocks)))

    total = reduce(_merge, partials)
    stderr = math.sqrt(total.m2 / (n - 1)) / math.sqrt(n)
    return ShadowEstimate(total.mean, stderr, n, s.dim, seed)


def verify_ratio(
    s: Shape,
    n: int,
    seed: int = DEFAULT_SEED,
    workers: int = DEFAULT_WORKERS,
    frame: str = "observer",
) -> VerificationRecord:
    """Check that the mean shadow of ``s`` is k(d) times its surface area.

    A run passes when |z| <= 4. A zero-variance estimate (a ball) passes when
    the mean is within 1e-9·A_S of the prediction, and has no z-score.
    """
    estimate = mean_projected_area(s, n, seed, workers=workers, frame=frame)
    area = surface_area(s)
    ratio = k_product(s.dim).to_real()
    predicted = ratio * area
    gap = estimate.mean - predicted

    z_score: Optional[float]
    if estimate.stderr == 0.0:
        z_score = None
        passed = abs(gap) <= EXACT_PASS_TOLERANCE * area
    else:
        z_score = gap / estimate.stderr
        passed = abs(z_score) <= ACCEPTANCE_SIGMAS

    logger.debug("verification in R^%d: z=%s passed=%s", s.dim, z_score, passed)
    return VerificationRecord(
        estimate=estimate,
        surface_area=area,
        ratio=ratio,
        predicted=predicted,
        z_score=z_score,
        passed=passed,
    )
