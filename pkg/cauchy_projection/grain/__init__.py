"""Dust-grain radiative equilibrium driven by the mean-shadow ratio."""

from .temperature import (
    ONE_AU,
    SUN_RADIUS,
    SUN_TEMPERATURE,
    GrainParams,
    balance_residual,
    equilibrium_temperature,
    solve_balance_temperature,
)

__all__ = [
    "ONE_AU",
    "SUN_RADIUS",
    "SUN_TEMPERATURE",
    "GrainParams",
    "balance_residual",
    "equilibrium_temperature",
    "solve_balance_temperature",
]
