"""Unit-ball volumes and unit-sphere surface measures in R^d.

Vocabulary is fixed throughout the package: the *ball* is the solid
{|x| <= 1} in R^d and ``ball_volume(d)`` is its d-volume; the *sphere* is its
boundary and ``sphere_surface(d)`` is its (d−1)-measure. So
``ball_volume(2) == π`` and ``sphere_surface(3) == 4π``.
"""

import math
from dataclasses import dataclass

from .gammafn import ln_gamma, require_dimension

_LN_PI = math.log(math.pi)


@dataclass(frozen=True)
class SphereMeasure:
    """Surface and volume of the unit ball in one dimension."""

    dimension: int
    surface: float
    ball_volume: float


def sphere_surface(d: int) -> float:
    """Return the boundary measure 2π^{d/2}/Γ(d/2) of the unit ball in R^d.

    Args:
        d: Ambient dimension, at least 1

    Raises:
        DomainError: If d < 1
    """
    require_dimension(d, 1)
    return 2.0 * math.exp(0.5 * d * _LN_PI - ln_gamma(d / 2))


def ball_volume(d: int) -> float:
    """Return the volume π^{d/2}/Γ(d/2 + 1) of the unit ball in R^d.

    Args:
        d: Ambient dimension, at least 1

    Raises:
        DomainError: If d < 1
    """
    require_dimension(d, 1)
    return math.exp(0.5 * d * _LN_PI - ln_gamma(d / 2 + 1))


def sphere_measure(d: int) -> SphereMeasure:
    """Bundle the surface and volume of the unit ball in R^d."""
    return SphereMeasure(
        dimension=d, surface=sphere_surface(d), ball_volume=ball_volume(d)
    )
