"""Surface areas and shadow areas of shapes.

``shadow_area`` is the reference path: project the vertices onto the
hyperplane perpendicular to the line of sight and measure the projected hull
with the brute-force routines in :mod:`.hull`. ``shadow_areas`` is the batched
kernel used by the Monte Carlo estimator; it hands the projected hulls to
Qhull and must agree with the reference path.
"""

from __future__ import annotations

import math
from typing import Union

import numpy as np
from numpy.typing import ArrayLike
from scipy.linalg import null_space
from scipy.spatial import ConvexHull, QhullError

from ..errors import DegenerateGeometryError, DimensionMismatchError, DomainError
from ..special.hypersphere import ball_volume, sphere_surface
from .hull import convex_volume, require_full_rank
from .shapes import Ball, Cube, Direction, Facet, Polytope, Shape


def facets(p: Polytope) -> list[Facet]:
    """Return the outward-oriented facets of a polytope.

    Coplanar vertex groups form one facet and every vertex lies on at least
    one facet.
    """
    return list(p.facets)


def surface_area(s: Shape) -> float:
    """Return the (d−1)-measure of the boundary of a shape.

    Args:
        s: A polytope, ball or cube

    Returns:
        Total surface area

    Raises:
        DomainError: If ``s`` is not a shape
    """
    if isinstance(s, Ball):
        return sphere_surface(s.dim) * s.radius ** (s.dim - 1)
    if isinstance(s, Cube):
        return 2 * s.dim * s.side ** (s.dim - 1)
    if isinstance(s, Polytope):
        return float(math.fsum(s.facet_volumes))
    raise DomainError(f"not a shape: {s!r}")


def _as_direction(u: Union[Direction, ArrayLike], dim: int) -> np.ndarray:
    vector = u.components if isinstance(u, Direction) else Direction(u).components
    if vector.size != dim:
        raise DimensionMismatchError(
            f"direction has dimension {vector.size}, shape has dimension {dim}"
        )
    return vector


def orthonormal_complement(u: Union[Direction, ArrayLike]) -> np.ndarray:
    """Return a ``(d, d−1)`` orthonormal basis of the hyperplane u⊥."""
    vector = u.components if isinstance(u, Direction) else np.asarray(u, float)
    return null_space(vector[None, :])


def shadow_area(s: Shape, u: Union[Direction, ArrayLike]) -> float:
    """Return the (d−1)-volume of the orthogonal projection of ``s`` onto u⊥.

    Args:
        s: A polytope, ball or cube
        u: Line of sight, a unit vector of the same dimension

    Raises:
        DimensionMismatchError: If ``u`` and ``s`` differ in dimension
        DegenerateGeometryError: If the projected points lose rank
    """
    vector = _as_direction(u, s.dim)
    if isinstance(s, Ball):
        return ball_volume(s.dim - 1) * s.radius ** (s.dim - 1)
    if isinstance(s, Cube):
        return s.side ** (s.dim - 1) * float(np.abs(vector).sum())
    if isinstance(s, Polytope):
        projected = s.vertices @ orthonormal_complement(vector)
        require_full_rank(projected, "projected vertex set")
        return convex_volume(projected, s.tolerance)
    raise DomainError(f"not a shape: {s!r}")


def shadow_area_from_facets(p: Polytope, u: Union[Direction, ArrayLike]) -> float:
    """Return the shadow of a polytope as ½ Σ_F vol(F)·|n_F·u|.

    Every shadow point is covered once by the lit half of the boundary and
    once by the dark half, which gives an independent check on
    :func:`shadow_area`.
    """
    vector = _as_direction(u, p.dim)
    normals = np.array([facet.unit_normal.components for facet in p.facets])
    return 0.5 * float(np.dot(p.facet_volumes, np.abs(normals @ vector)))


def complement_bases(directions: np.ndarray) -> np.ndarray:
    """Return ``(m, d, d−1)`` orthonormal bases of u⊥ for ``m`` unit vectors.

    Uses one Householder reflection per direction, mapping e_d onto ±u; the
    remaining reflected axes span the complement.
    """
    dim = directions.shape[1]
    sign = np.where(directions[:, -1] >= 0.0, 1.0, -1.0)
    v = directions.copy()
    v[:, -1] += sign
    scale = 2.0 / np.einsum("ij,ij->i", v, v)
    identity = np.eye(dim)[None, :, : dim - 1]
    outer = v[:, :, None] * v[:, None, : dim - 1]
    return identity - scale[:, None, None] * outer


def shadow_areas(s: Shape, directions: ArrayLike) -> np.ndarray:
    """Return the shadow of ``s`` for each row of a ``(m, d)`` direction array.

    Analytic shapes are evaluated in closed form; polytopes project their
    vertices and take the Qhull volume of each projected hull (the width, for
    polygons).

    Raises:
        DimensionMismatchError: If the directions do not match the shape
    """
    directions = np.atleast_2d(np.asarray(directions, dtype=float))
    if directions.shape[1] != s.dim:
        raise DimensionMismatchError(
            f"directions have dimension {directions.shape[1]}, "
            f"shape has dimension {s.dim}"
        )
    m = directions.shape[0]

    if isinstance(s, Ball):
        return np.full(m, ball_volume(s.dim - 1) * s.radius ** (s.dim - 1))
    if isinstance(s, Cube):
        return s.side ** (s.dim - 1) * np.abs(directions).sum(axis=1)
    if not isinstance(s, Polytope):
        raise DomainError(f"not a shape: {s!r}")

    projected = np.einsum("nd,mdk->mnk", s.vertices, complement_bases(directions))
    if s.dim == 2:
        return np.ptp(projected[:, :, 0], axis=1)
    try:
        return np.array([ConvexHull(points).volume for points in projected])
    except QhullError as e:
        raise DegenerateGeometryError(f"projected hull failed: {e}") from e


def mean_width_check_2d(p: Union[Polytope, ArrayLike]) -> float:
    """Return the mean width of a convex polygon, perimeter / π.

    Args:
        p: A polygon, or its vertices as an ``(n, 2)`` array

    Raises:
        DomainError: If the polytope is not two-dimensional
        DegenerateGeometryError: If the vertices do not span the plane
    """
    polygon = p if isinstance(p, Polytope) else Polytope(p, "polygon")
    if polygon.dim != 2:
        raise DomainError(f"mean width needs a polygon, got dimension {polygon.dim}")
    return surface_area(polygon) / math.pi
