"""Directions, vertex-list polytopes and the analytic ball and cube."""

from __future__ import annotations

import itertools
import logging
import math
from collections.abc import Mapping
from dataclasses import dataclass
from functools import cached_property
from types import MappingProxyType
from typing import Optional, Union

import numpy as np
from numpy.typing import ArrayLike

from ..config import (
    MAX_ANALYTIC_DIMENSION,
    MAX_POLYTOPE_DIMENSION,
    MIN_DIMENSION,
)
from ..errors import DegenerateGeometryError, DomainError
from .hull import (
    RawFacet,
    enumerate_facets,
    extreme_indices,
    facet_volume,
    require_full_rank,
    tolerance_for,
)

logger = logging.getLogger(__name__)

UNIT_NORM_TOLERANCE = 1e-12


def _frozen(array: np.ndarray) -> np.ndarray:
    array.setflags(write=False)
    return array


class Direction:
    """A unit vector in R^d: the line of sight of one shadow."""

    __slots__ = ("components",)

    def __init__(self, components: ArrayLike) -> None:
        """Initialize the direction.

        Args:
            components: d reals with Euclidean norm 1 (within 1e-12)

        Raises:
            DomainError: If the vector is not finite or not of unit length
        """
        vector = np.array(components, dtype=float).reshape(-1)
        if vector.size < 1 or not np.all(np.isfinite(vector)):
            raise DomainError("direction components must be finite reals")
        norm = float(np.linalg.norm(vector))
        if abs(norm - 1.0) > UNIT_NORM_TOLERANCE:
            raise DomainError(f"direction must have unit norm, got norm {norm!r}")
        self.components = _frozen(vector)

    @classmethod
    def normalized(cls, vector: ArrayLike) -> Direction:
        """Scale a non-zero vector to unit length."""
        vector = np.asarray(vector, dtype=float).reshape(-1)
        norm = float(np.linalg.norm(vector))
        if norm == 0.0 or not math.isfinite(norm):
            raise DomainError("cannot normalize a zero or non-finite vector")
        return cls(vector / norm)

    @classmethod
    def axis(cls, dim: int, index: int = 0) -> Direction:
        """Return the coordinate axis e_index in R^dim."""
        vector = np.zeros(dim)
        vector[index] = 1.0
        return cls(vector)

    @property
    def dim(self) -> int:
        return int(self.components.size)

    def __neg__(self) -> Direction:
        return Direction(-self.components)

    def __repr__(self) -> str:
        return f"Direction({self.components.tolist()!r})"


@dataclass(frozen=True, eq=False)
class Facet:
    """An outward-oriented facet: vertices with unit_normal·v = offset."""

    vertex_indices: tuple[int, ...]
    unit_normal: Direction
    offset: float


class Polytope:
    """A full-dimensional convex polytope in R^d given by its vertices.

    Points that are not extreme are dropped on construction; the count is kept
    in ``dropped_vertices`` and, next to the label, in :attr:`metadata`. The
    object is immutable once built.
    """

    def __init__(
        self,
        vertices: ArrayLike,
        label: str = "",
        *,
        assume_extreme: bool = False,
    ) -> None:
        """Initialize the polytope.

        Args:
            vertices: ``(n, d)`` array-like of finite coordinates, 2 <= d <= 4
            label: Free-text name
            assume_extreme: Skip the extreme-point filter (for images of an
                already validated polytope under an invertible linear map)

        Raises:
            DomainError: If coordinates are not finite or d is unsupported
            DegenerateGeometryError: If there are fewer than d+1 points or they
                do not span R^d
        """
        points = np.array(vertices, dtype=float)
        if points.ndim != 2:
            raise DomainError("vertices must be a 2-d array of shape (n, d)")
        if not np.all(np.isfinite(points)):
            raise DomainError("vertex coordinates must be finite")
        n, dim = points.shape
        if not MIN_DIMENSION <= dim <= MAX_POLYTOPE_DIMENSION:
            raise DomainError(
                f"polytope dimension must be between {MIN_DIMENSION} and "
                f"{MAX_POLYTOPE_DIMENSION}, got {dim}"
            )
        if n < dim + 1:
            raise DegenerateGeometryError(
                f"a polytope in R^{dim} needs at least {dim + 1} vertices, got {n}"
            )
        require_full_rank(points, "vertex set")

        dropped = 0
        if not assume_extreme:
            keep = extreme_indices(points)
            dropped = n - len(keep)
            points = points[keep]
            if dropped:
                logger.debug("dropped %d non-extreme vertices from %r", dropped, label)

        self.vertices = _frozen(points)
        self.label = label
        self.dropped_vertices = dropped

    @property
    def dim(self) -> int:
        return int(self.vertices.shape[1])

    @property
    def n_vertices(self) -> int:
        return int(self.vertices.shape[0])

    @property
    def metadata(self) -> Mapping[str, object]:
        """Read-only label metadata: the label and the dropped vertex count."""
        return MappingProxyType(
            {"label": self.label, "dropped_vertices": self.dropped_vertices}
        )

    @property
    def tolerance(self) -> float:
        """Absolute coplanarity tolerance: 1e-9 × the largest vertex norm."""
        return tolerance_for(self.vertices)

    @cached_property
    def _raw_facets(self) -> tuple[RawFacet, ...]:
        raw = tuple(enumerate_facets(self.vertices, self.tolerance))
        logger.debug("%r has %d facets", self, len(raw))
        return raw

    @cached_property
    def facets(self) -> tuple[Facet, ...]:
        """Outward-oriented facets of the hull, coplanar pieces merged."""
        return tuple(
            Facet(
                vertex_indices=raw.indices,
                unit_normal=Direction.normalized(raw.normal),
                offset=raw.offset,
            )
            for raw in self._raw_facets
        )

    @cached_property
    def facet_volumes(self) -> np.ndarray:
        """(d−1)-volume of each facet, aligned with :attr:`facets`."""
        volumes = [
            facet_volume(self.vertices, raw, self.tolerance)
            for raw in self._raw_facets
        ]
        return _frozen(np.array(volumes))

    def transformed(self, matrix: ArrayLike, label: Optional[str] = None) -> Polytope:
        """Return the image of the polytope under an invertible linear map."""
        matrix = np.asarray(matrix, dtype=float)
        if matrix.shape != (self.dim, self.dim):
            raise DomainError(
                f"expected a {self.dim}x{self.dim} matrix, got {matrix.shape}"
            )
        return Polytope(
            self.vertices @ matrix.T,
            self.label if label is None else label,
            assume_extreme=True,
        )

    def scaled(self, factor: float) -> Polytope:
        """Return the polytope scaled about the origin by ``factor`` > 0."""
        if not factor > 0.0:
            raise DomainError(f"scale factor must be > 0, got {factor!r}")
        return self.transformed(factor * np.eye(self.dim))

    def __repr__(self) -> str:
        return (
            f"Polytope(dim={self.dim}, n_vertices={self.n_vertices}, "
            f"label={self.label!r})"
        )


def _check_analytic_dim(dim: int) -> None:
    if isinstance(dim, bool) or not isinstance(dim, int):
        raise DomainError(f"dimension must be an integer, got {dim!r}")
    if not MIN_DIMENSION <= dim <= MAX_ANALYTIC_DIMENSION:
        raise DomainError(
            f"dimension must be between {MIN_DIMENSION} and "
            f"{MAX_ANALYTIC_DIMENSION}, got {dim}"
        )


@dataclass(frozen=True)
class Ball:
    """The ball of the given radius in R^dim."""

    dim: int
    radius: float = 1.0

    def __post_init__(self) -> None:
        _check_analytic_dim(self.dim)
        if not (math.isfinite(self.radius) and self.radius > 0.0):
            raise DomainError(f"radius must be finite and > 0, got {self.radius!r}")


@dataclass(frozen=True)
class Cube:
    """The axis-aligned cube [0, side]^dim."""

    dim: int
    side: float = 1.0

    def __post_init__(self) -> None:
        _check_analytic_dim(self.dim)
        if not (math.isfinite(self.side) and self.side > 0.0):
            raise DomainError(f"side must be finite and > 0, got {self.side!r}")

    def to_polytope(self) -> Polytope:
        """Return the same cube as a vertex list (dim <= 4)."""
        if self.dim > MAX_POLYTOPE_DIMENSION:
            raise DegenerateGeometryError(
                f"vertex-list cubes are limited to dimension "
                f"{MAX_POLYTOPE_DIMENSION}, got {self.dim}"
            )
        corners = np.array(list(itertools.product((0.0, self.side), repeat=self.dim)))
        return Polytope(corners, f"cube{self.dim}", assume_extreme=True)


Shape = Union[Polytope, Ball, Cube]
