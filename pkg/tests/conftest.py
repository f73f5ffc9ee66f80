"""Pytest configuration and shared fixtures."""

import itertools
import math
from pathlib import Path

import numpy as np
import pytest


def sphere_points(n: int, dim: int, seed: int) -> np.ndarray:
    """Return n seeded points on the unit sphere; every one is a hull vertex."""
    rng = np.random.default_rng(seed)
    points = rng.normal(size=(n, dim))
    return points / np.linalg.norm(points, axis=1, keepdims=True)


@pytest.fixture
def cube3_vertices():
    """Vertices of the unit cube [0, 1]^3."""
    return np.array(list(itertools.product((0.0, 1.0), repeat=3)))


@pytest.fixture
def cube4_vertices():
    """Vertices of the unit tesseract [0, 1]^4."""
    return np.array(list(itertools.product((0.0, 1.0), repeat=4)))


@pytest.fixture
def simplex3_vertices():
    """Regular tetrahedron with unit edge length."""
    corners = np.array(
        [[1.0, 1.0, 1.0], [1.0, -1.0, -1.0], [-1.0, 1.0, -1.0], [-1.0, -1.0, 1.0]]
    )
    return corners / (2.0 * math.sqrt(2.0))


@pytest.fixture
def cross4_vertices():
    """The 4-d cross-polytope ±e_i."""
    eye = np.eye(4)
    return np.vstack([eye, -eye])


@pytest.fixture
def square_vertices():
    """The unit square."""
    return np.array([[0.0, 0.0], [1.0, 0.0], [1.0, 1.0], [0.0, 1.0]])


@pytest.fixture
def random_hull_3d():
    """Seeded 20 points on S^2."""
    return sphere_points(20, 3, seed=20)


@pytest.fixture
def random_hull_4d():
    """Seeded 12 points on S^3."""
    return sphere_points(12, 4, seed=12)


@pytest.fixture
def write_polytope(tmp_path):
    """Write polytope file text into a temporary directory and return its path."""

    def _write(text: str, name: str = "polytope.txt") -> Path:
        path = tmp_path / name
        path.write_text(text, encoding="utf-8")
        return path

    return _write
