"""Special functions: log-gamma, gamma ratios and hypersphere measures."""

from .gammafn import PositiveReal, gamma_ratio_M, ln_gamma
from .hypersphere import SphereMeasure, ball_volume, sphere_measure, sphere_surface

__all__ = [
    "PositiveReal",
    "SphereMeasure",
    "ball_volume",
    "gamma_ratio_M",
    "ln_gamma",
    "sphere_measure",
    "sphere_surface",
]
