"""Radiative equilibrium temperature of a convex dust grain near a star.

A grain absorbs starlight over its mean shadow and radiates over its whole
surface, so the energy balance

    A_S σ T_g⁴ = ⟨A_proj⟩ σ T_*⁴ (R_*/d)² (1 − a)

depends on the grain's shape only through ⟨A_proj⟩/A_S, which is k(3) = 1/4
for every convex grain in three dimensions. The grain is a gray body.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.constants import Stefan_Boltzmann, astronomical_unit
from scipy.optimize import root_scalar

from ..errors import DomainError
from ..ratio.routes import k_closed

SUN_TEMPERATURE = 5778.0
SUN_RADIUS = 6.957e8
ONE_AU = astronomical_unit
CONVEX_RATIO_3D = 0.25


def _require_positive(name: str, value: float) -> None:
    if not (math.isfinite(value) and value > 0.0):
        raise DomainError(f"{name} must be finite and > 0, got {value!r}")


@dataclass(frozen=True)
class GrainParams:
    """Star, orbit and grain properties entering the energy balance (SI units)."""

    star_temperature: float
    star_radius: float
    distance: float
    albedo: float = 0.0
    ratio: float = CONVEX_RATIO_3D

    def __post_init__(self) -> None:
        _require_positive("star_temperature", self.star_temperature)
        _require_positive("star_radius", self.star_radius)
        _require_positive("distance", self.distance)
        if not self.distance > self.star_radius:
            raise DomainError(
                f"distance must exceed star_radius "
                f"({self.distance!r} <= {self.star_radius!r})"
            )
        if not 0.0 <= self.albedo <= 1.0:
            raise DomainError(f"albedo must be in [0, 1], got {self.albedo!r}")
        if not 0.0 < self.ratio < 1.0:
            raise DomainError(f"ratio must be in (0, 1), got {self.ratio!r}")

    @classmethod
    def sun_like(
        cls,
        distance: float = ONE_AU,
        albedo: float = 0.0,
        ratio: float = CONVEX_RATIO_3D,
    ) -> GrainParams:
        """Return parameters for a grain orbiting a Sun-like star."""
        return cls(SUN_TEMPERATURE, SUN_RADIUS, distance, albedo, ratio)

    @classmethod
    def for_dimension(
        cls,
        d: int,
        star_temperature: float,
        star_radius: float,
        distance: float,
        albedo: float = 0.0,
    ) -> GrainParams:
        """Return parameters whose shadow ratio is k(d) of a d-dimensional grain."""
        return cls(star_temperature, star_radius, distance, albedo, k_closed(d))

    @property
    def absorbed_fraction(self) -> float:
        """Absorbed over emitted power per unit σ T_*⁴: ratio·(R_*/d)²·(1 − a)."""
        dilution = (self.star_radius / self.distance) ** 2
        return self.ratio * dilution * (1.0 - self.albedo)


def equilibrium_temperature(p: GrainParams) -> float:
    """Return the equilibrium grain temperature in kelvin.

    T_g = T_* · [ratio · (R_*/d)² · (1 − a)]^(1/4); the Stefan–Boltzmann
    constant cancels from the balance.
    """
    return p.star_temperature * p.absorbed_fraction**0.25


def balance_residual(
    p: GrainParams, t_grain: float, sigma: float = Stefan_Boltzmann
) -> float:
    """Return absorbed minus emitted power per unit grain surface area (W/m²).

    Positive when the grain at ``t_grain`` is still heating up.
    """
    absorbed = p.absorbed_fraction * sigma * p.star_temperature**4
    return absorbed - sigma * t_grain**4


def solve_balance_temperature(
    p: GrainParams, sigma: float = Stefan_Boltzmann
) -> float:
    """Solve the energy balance for T_g numerically (Brent's method).

    Args:
        p: Grain parameters
        sigma: Value used for the Stefan–Boltzmann constant

    Returns:
        Temperature in kelvin at which absorbed and emitted power match

    Raises:
        DomainError: If ``sigma`` is not finite and positive
    """
    _require_positive("sigma", sigma)
    if p.albedo == 1.0:
        return 0.0

    # At T_g = 0 the grain only absorbs; at T_g = T_* it emits more than it
    # can absorb because ratio < 1 and R_* < d.
    result = root_scalar(
        lambda t: balance_residual(p, t, sigma),
        bracket=[0.0, p.star_temperature],
        method="brentq",
        xtol=1e-300,
        rtol=4 * np.finfo(float).eps,
    )
    return float(result.root)
