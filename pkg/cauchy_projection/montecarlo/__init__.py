"""Uniform random directions and Monte Carlo shadow averages."""

from .estimator import (
    ShadowEstimate,
    VerificationRecord,
    mean_projected_area,
    verify_ratio,
)
from .sampler import (
    DirectionStream,
    Seed,
    random_rotation,
    sample_direction,
)

__all__ = [
    "DirectionStream",
    "Seed",
    "ShadowEstimate",
    "VerificationRecord",
    "mean_projected_area",
    "random_rotation",
    "sample_direction",
    "verify_ratio",
]
