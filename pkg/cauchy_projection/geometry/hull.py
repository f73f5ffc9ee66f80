"""Brute-force convex hulls and recursive volumes for small point sets.

Everything here works on plain ``(n, k)`` coordinate arrays so the same code
serves polytopes in R^d, their facets embedded in R^(d−1), and shadows
projected onto a hyperplane. Facets are found by testing every k-subset of
points for a supporting hyperplane; volumes come from the cone decomposition
V = (1/k) Σ_F h_F · vol(F) around the point centroid, bottoming out in the
shoelace formula for polygons.
"""

from __future__ import annotations

import itertools
import logging
from dataclasses import dataclass
from typing import Optional

import numpy as np

from ..config import GEOMETRY_TOLERANCE
from ..errors import DegenerateGeometryError

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class RawFacet:
    """A facet of a point set: indices on the hyperplane n·x = offset."""

    indices: tuple[int, ...]
    normal: np.ndarray
    offset: float


def tolerance_for(points: np.ndarray) -> float:
    """Return the absolute coplanarity tolerance for a point set."""
    scale = float(np.max(np.linalg.norm(points, axis=1))) if len(points) else 0.0
    return GEOMETRY_TOLERANCE * max(scale, np.finfo(float).tiny)


def affine_rank(points: np.ndarray) -> int:
    """Return the affine rank, counting singular values above 1e-9 of the largest."""
    if len(points) < 2:
        return 0
    centered = points - points.mean(axis=0)
    singular = np.linalg.svd(centered, compute_uv=False)
    if singular[0] == 0.0:
        return 0
    return int(np.count_nonzero(singular > GEOMETRY_TOLERANCE * singular[0]))


def require_full_rank(points: np.ndarray, what: str = "point set") -> None:
    """Raise unless the points span their whole ambient space."""
    dim = points.shape[1]
    rank = affine_rank(points)
    if rank < dim:
        raise DegenerateGeometryError(
            f"{what} has affine rank {rank}, expected {dim}"
        )


def embed_in_hyperplane(points: np.ndarray) -> np.ndarray:
    """Express points lying on a common hyperplane in k−1 orthonormal coordinates."""
    centered = points - points.mean(axis=0)
    _, _, vt = np.linalg.svd(centered)
    return centered @ vt[: points.shape[1] - 1].T


def enumerate_facets(points: np.ndarray, tol: Optional[float] = None) -> list[RawFacet]:
    """Return every facet of the convex hull of a full-dimensional point set.

    Every k-subset of points that is affinely independent and whose hyperplane
    has all other points on one side (within ``tol``) is a candidate. Candidates
    sharing the same set of on-plane points are one facet, so coplanar
    simplices merge and no facet is split or duplicated. Each facet normal is
    refitted to all of its points and oriented away from the centroid.

    Args:
        points: ``(n, k)`` array with affine rank k
        tol: Absolute coplanarity tolerance; defaults to 1e-9 × max point norm

    Returns:
        Facets in order of first discovery

    Raises:
        DegenerateGeometryError: If the points do not span R^k
    """
    points = np.asarray(points, dtype=float)
    n, k = points.shape
    require_full_rank(points)
    tol = tolerance_for(points) if tol is None else tol
    centroid = points.mean(axis=0)

    if k == 1:
        coords = points[:, 0]
        low, high = coords.min(), coords.max()
        return [
            RawFacet(
                tuple(np.flatnonzero(coords <= low + tol).tolist()),
                np.array([-1.0]),
                float(-low),
            ),
            RawFacet(
                tuple(np.flatnonzero(coords >= high - tol).tolist()),
                np.array([1.0]),
                float(high),
            ),
        ]

    combos = np.array(list(itertools.combinations(range(n), k)))
    base = points[combos[:, 0]]
    edges = points[combos[:, 1:]] - base[:, None, :]
    _, singular, vt = np.linalg.svd(edges)
    normals = vt[:, -1, :]
    independent = singular[:, -1] > tol

    offsets = np.einsum("ij,ij->i", normals, base)
    distances = normals @ points.T - offsets[:, None]
    below = np.all(distances <= tol, axis=1)
    above = np.all(distances >= -tol, axis=1)
    supporting = independent & (below | above)

    groups: dict[tuple[int, ...], None] = {}
    for row in np.flatnonzero(supporting):
        on_plane = tuple(np.flatnonzero(np.abs(distances[row]) <= tol).tolist())
        groups.setdefault(on_plane, None)

    facets = []
    for indices in groups:
        members = points[list(indices)]
        center = members.mean(axis=0)
        _, singular, vt = np.linalg.svd(members - center)
        if np.count_nonzero(singular > GEOMETRY_TOLERANCE * singular[0]) < k - 1:
            continue
        normal = vt[-1]
        if normal @ (centroid - center) > 0.0:
            normal = -normal
        facets.append(RawFacet(indices, normal, float(normal @ center)))

    logger.debug(
        "hull of %d points in R^%d: %d candidates, %d facets",
        n,
        k,
        int(np.count_nonzero(supporting)),
        len(facets),
    )
    return facets


def extreme_indices(points: np.ndarray, tol: Optional[float] = None) -> list[int]:
    """Return the sorted indices of the extreme points of a full-dimensional set.

    A point is extreme when it is extreme within some facet, which reduces the
    question one dimension at a time down to the two ends of a segment.
    Duplicated points are reported once, by their lowest index.
    """
    points = np.asarray(points, dtype=float)
    tol = tolerance_for(points) if tol is None else tol
    if points.shape[1] == 1:
        coords = points[:, 0]
        return sorted({int(np.argmin(coords)), int(np.argmax(coords))})

    extreme: set[int] = set()
    for facet in enumerate_facets(points, tol):
        members = np.array(facet.indices)
        local = extreme_indices(embed_in_hyperplane(points[members]), tol)
        extreme.update(int(members[i]) for i in local)
    return sorted(extreme)


def polygon_area(points: np.ndarray, tol: Optional[float] = None) -> float:
    """Return the area of the convex hull of planar points (shoelace formula)."""
    points = np.asarray(points, dtype=float)
    corners = points[extreme_indices(points, tol)]
    center = corners.mean(axis=0)
    angles = np.arctan2(corners[:, 1] - center[1], corners[:, 0] - center[0])
    order = np.argsort(angles)
    x, y = corners[order, 0], corners[order, 1]
    return 0.5 * abs(float(np.dot(x, np.roll(y, -1)) - np.dot(y, np.roll(x, -1))))


def convex_volume(points: np.ndarray, tol: Optional[float] = None) -> float:
    """Return the k-volume of the convex hull of a full-dimensional ``(n, k)`` set.

    Raises:
        DegenerateGeometryError: If the points do not span R^k
    """
    points = np.asarray(points, dtype=float)
    k = points.shape[1]
    require_full_rank(points)
    tol = tolerance_for(points) if tol is None else tol
    if k == 1:
        return float(np.ptp(points[:, 0]))
    if k == 2:
        return polygon_area(points, tol)

    interior = points.mean(axis=0)
    total = 0.0
    for facet in enumerate_facets(points, tol):
        height = facet.offset - float(facet.normal @ interior)
        total += height * facet_volume(points, facet, tol)
    return total / k


def facet_volume(
    points: np.ndarray, facet: RawFacet, tol: Optional[float] = None
) -> float:
    """Return the (k−1)-volume of one facet of a point set."""
    members = points[list(facet.indices)]
    return convex_volume(embed_in_hyperplane(members), tol)
