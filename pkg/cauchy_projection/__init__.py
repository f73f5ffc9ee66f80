"""
cauchy-projection

The mean projected area of a convex body in d dimensions is k(d) times its
surface area. This package computes k(d) four independent ways, checks the
relation by Monte Carlo shadow-casting of polytopes, and applies it to the
equilibrium temperature of interstellar dust grains.
"""

__version__ = "1.0.0"
__license__ = "BSD 3-Clause"

from .geometry import shadow_area, surface_area
from .grain import equilibrium_temperature
from .montecarlo import mean_projected_area, verify_ratio
from .ratio import k_closed

__all__ = [
    "equilibrium_temperature",
    "k_closed",
    "mean_projected_area",
    "shadow_area",
    "surface_area",
    "verify_ratio",
]
