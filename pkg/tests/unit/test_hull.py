"""Tests for brute-force hulls and recursive volumes."""

import itertools
import math

import numpy as np
import pytest

from cauchy_projection.errors import DegenerateGeometryError
from cauchy_projection.geometry.hull import (
    affine_rank,
    convex_volume,
    embed_in_hyperplane,
    enumerate_facets,
    extreme_indices,
    polygon_area,
    require_full_rank,
    tolerance_for,
)


def brute_force_facet_count(points):
    """Count supporting hyperplanes through affinely independent k-subsets."""
    n, k = points.shape
    planes = set()
    for subset in itertools.combinations(range(n), k):
        base = points[subset[0]]
        edges = points[list(subset[1:])] - base
        _, singular, vt = np.linalg.svd(edges)
        if singular[-1] < 1e-9:
            continue
        normal = vt[-1]
        side = (points - base) @ normal
        if np.all(side <= 1e-9) or np.all(side >= -1e-9):
            planes.add(tuple(np.flatnonzero(np.abs(side) <= 1e-9)))
    return len(planes)


class TestRank:
    """Test cases for rank and tolerance helpers."""

    def test_affine_rank(self, cube3_vertices):
        """Test rank of a solid, a plane and a line."""
        assert affine_rank(cube3_vertices) == 3
        assert affine_rank(cube3_vertices[cube3_vertices[:, 2] == 0]) == 2
        assert affine_rank(np.array([[0.0, 0.0], [1.0, 1.0], [2.0, 2.0]])) == 1

    def test_single_point_has_rank_zero(self):
        """Test that one point or repeated points have rank zero."""
        assert affine_rank(np.array([[1.0, 2.0]])) == 0
        assert affine_rank(np.array([[1.0, 2.0], [1.0, 2.0]])) == 0

    def test_require_full_rank(self):
        """Test that a flat point set is rejected with its rank."""
        flat = np.array([[0.0, 0.0, 0.0], [1.0, 0.0, 0.0], [0.0, 1.0, 0.0]] * 2)
        with pytest.raises(DegenerateGeometryError, match="affine rank 2"):
            require_full_rank(flat, "vertex set")

    def test_tolerance_scales_with_size(self, cube3_vertices):
        """Test the tolerance is 1e-9 of the largest vertex norm."""
        assert tolerance_for(cube3_vertices) == pytest.approx(1e-9 * math.sqrt(3))
        assert tolerance_for(1000 * cube3_vertices) == pytest.approx(
            1e-6 * math.sqrt(3)
        )


class TestEnumerateFacets:
    """Test cases for enumerate_facets."""

    def test_cube_faces(self, cube3_vertices):
        """Test the cube has six square faces with axis normals."""
        facets = enumerate_facets(cube3_vertices)

        assert len(facets) == 6
        assert all(len(f.indices) == 4 for f in facets)
        normals = sorted(tuple(np.round(f.normal, 12)) for f in facets)
        expected = sorted(
            tuple(sign * row) for row in np.eye(3) for sign in (1.0, -1.0)
        )
        assert normals == expected

    def test_simplex_faces(self, simplex3_vertices):
        """Test the tetrahedron has four triangles."""
        facets = enumerate_facets(simplex3_vertices)

        assert len(facets) == 4
        assert sorted(len(f.indices) for f in facets) == [3, 3, 3, 3]

    def test_cross_polytope_matches_brute_force(self, cross4_vertices):
        """Test 16 tetrahedral facets of the 4-d cross-polytope."""
        facets = enumerate_facets(cross4_vertices)

        assert len(facets) == 16
        assert all(len(f.indices) == 4 for f in facets)
        assert len(facets) == brute_force_facet_count(cross4_vertices)

    def test_random_hull_matches_brute_force(self, random_hull_3d):
        """Test a random hull against the independent enumeration."""
        facets = enumerate_facets(random_hull_3d)
        assert len(facets) == brute_force_facet_count(random_hull_3d)

    def test_facets_are_outward_and_supporting(self, random_hull_4d):
        """Test every facet plane holds its vertices and has the rest inside."""
        tol = tolerance_for(random_hull_4d)
        for facet in enumerate_facets(random_hull_4d):
            distances = random_hull_4d @ facet.normal - facet.offset
            on_plane = np.zeros(len(random_hull_4d), dtype=bool)
            on_plane[list(facet.indices)] = True

            assert np.linalg.norm(facet.normal) == pytest.approx(1.0)
            assert np.all(np.abs(distances[on_plane]) <= tol)
            assert np.all(distances[~on_plane] < 0.0)

    def test_every_vertex_is_on_a_facet(self, cube4_vertices):
        """Test the union of facet vertex sets covers all vertices."""
        covered = set()
        for facet in enumerate_facets(cube4_vertices):
            covered.update(facet.indices)
        assert covered == set(range(16))

    def test_segment(self):
        """Test the two ends of a one-dimensional point set."""
        facets = enumerate_facets(np.array([[2.0], [-1.0], [0.5]]))

        assert [f.indices for f in facets] == [(1,), (0,)]
        assert [f.offset for f in facets] == [1.0, 2.0]

    def test_degenerate_input(self):
        """Test that coplanar points in R^3 are rejected."""
        square = np.array(
            [[0.0, 0.0, 0.0], [1.0, 0.0, 0.0], [1.0, 1.0, 0.0], [0.0, 1.0, 0.0]]
        )
        with pytest.raises(DegenerateGeometryError):
            enumerate_facets(square)


class TestExtremeIndices:
    """Test cases for extreme_indices."""

    def test_drops_interior_and_face_points(self, cube3_vertices):
        """Test that the centre and a face centre are not extreme."""
        points = np.vstack([cube3_vertices, [[0.5, 0.5, 0.5], [0.5, 0.5, 0.0]]])
        assert extreme_indices(points) == list(range(8))

    def test_drops_edge_midpoints(self, square_vertices):
        """Test that a point in the middle of an edge is not extreme."""
        points = np.vstack([square_vertices, [[0.5, 0.0]]])
        assert extreme_indices(points) == [0, 1, 2, 3]

    def test_reports_duplicates_once(self, square_vertices):
        """Test that a repeated vertex is reported by its first index."""
        points = np.vstack([square_vertices, square_vertices[:1]])
        assert extreme_indices(points) == [0, 1, 2, 3]


class TestVolumes:
    """Test cases for polygon_area and convex_volume."""

    def test_unit_square(self, square_vertices):
        """Test the shoelace area of the unit square in any order."""
        assert polygon_area(square_vertices[[2, 0, 3, 1]]) == pytest.approx(1.0)

    def test_regular_polygon(self):
        """Test the area of a regular hexagon."""
        angles = np.arange(6) * math.pi / 3
        hexagon = np.column_stack([np.cos(angles), np.sin(angles)])
        assert polygon_area(hexagon) == pytest.approx(3 * math.sqrt(3) / 2)

    def test_segment_length(self):
        """Test the one-dimensional volume is a length."""
        assert convex_volume(np.array([[3.0], [-1.0], [0.0]])) == 4.0

    def test_cube_volumes(self, cube3_vertices, cube4_vertices):
        """Test unit volume for the cube and the tesseract."""
        assert convex_volume(cube3_vertices) == pytest.approx(1.0, rel=1e-12)
        assert convex_volume(cube4_vertices) == pytest.approx(1.0, rel=1e-12)

    def test_simplex_volume(self, simplex3_vertices):
        """Test the unit-edge tetrahedron volume 1/(6√2)."""
        assert convex_volume(simplex3_vertices) == pytest.approx(
            1 / (6 * math.sqrt(2)), rel=1e-12
        )

    def test_cross_polytope_volume(self, cross4_vertices):
        """Test the 4-d cross-polytope volume 2^4/4!."""
        assert convex_volume(cross4_vertices) == pytest.approx(16 / 24, rel=1e-12)

    def test_ignores_interior_points(self, cube3_vertices):
        """Test that interior points do not change the volume."""
        points = np.vstack([cube3_vertices, [[0.2, 0.3, 0.4], [0.5, 0.5, 0.5]]])
        assert convex_volume(points) == pytest.approx(1.0, rel=1e-12)


class TestEmbedInHyperplane:
    """Test cases for embed_in_hyperplane."""

    def test_preserves_distances(self, cube3_vertices):
        """Test that a tilted face keeps its pairwise distances."""
        face = cube3_vertices[cube3_vertices[:, 0] == 1.0] @ np.array(
            [[0.6, -0.8, 0.0], [0.8, 0.6, 0.0], [0.0, 0.0, 1.0]]
        )
        flat = embed_in_hyperplane(face)

        assert flat.shape == (4, 2)
        for i, j in itertools.combinations(range(4), 2):
            assert np.linalg.norm(flat[i] - flat[j]) == pytest.approx(
                np.linalg.norm(face[i] - face[j])
            )
