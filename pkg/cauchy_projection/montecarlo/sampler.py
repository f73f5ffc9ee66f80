"""Reproducible uniform directions on the unit sphere S^(d−1).

Sample ``i`` of a stream is a pure function of ``(seed, i)``. Samples are laid
out in fixed blocks of :data:`~cauchy_projection.config.SAMPLE_BLOCK_SIZE`;
block ``b`` reads a Philox counter stream keyed by the seed and started at
counter ``b << 128``, so any block (and any sample) can be regenerated without
touching the ones before it. Normal deviates come from the Box–Muller
transform, which consumes a fixed number of uniforms per sample and never
loops.
"""

from __future__ import annotations

import math
from typing import Optional

import numpy as np
from scipy.stats import special_ortho_group

from ..config import MIN_DIMENSION, SAMPLE_BLOCK_SIZE
from ..errors import DomainError
from ..geometry.shapes import Direction
from ..special.gammafn import require_dimension

# Directions with a Gaussian norm below this are thrown away and redrawn
MIN_GAUSSIAN_NORM = 1e-8

_SEED_LIMIT = 1 << 64
_BLOCK_SHIFT = 128
_RETRY_SHIFT = 192
# Counter bit that separates rotation streams from direction streams
_ROTATION_STREAM = 1 << 255


class Seed(int):
    """A 64-bit unsigned random seed."""

    def __new__(cls, value: int) -> Seed:
        if isinstance(value, bool) or not isinstance(value, (int, np.integer)):
            raise DomainError(f"seed must be an integer, got {value!r}")
        if not 0 <= int(value) < _SEED_LIMIT:
            raise DomainError(f"seed must be in [0, 2**64), got {value}")
        return super().__new__(cls, int(value))


def philox_generator(seed: int, counter: int) -> np.random.Generator:
    """Return a generator reading the Philox stream of ``seed`` from ``counter``."""
    return np.random.Generator(np.random.Philox(key=int(seed), counter=counter))


def gaussian_rows(uniforms: np.ndarray, dim: int) -> np.ndarray:
    """Turn ``(m, 2·ceil(dim/2))`` uniforms in [0, 1) into ``(m, dim)`` normals."""
    half = uniforms.shape[1] // 2
    radius = np.sqrt(-2.0 * np.log1p(-uniforms[:, :half]))
    angle = 2.0 * math.pi * uniforms[:, half:]
    return np.hstack([radius * np.cos(angle), radius * np.sin(angle)])[:, :dim]


def _uniform_width(dim: int) -> int:
    return 2 * ((dim + 1) // 2)


class DirectionStream:
    """Block-addressable uniform directions in R^dim for one seed.

    The stream also keeps a cursor so it can be consumed one direction at a
    time with :func:`sample_direction`. Blocks themselves are stateless; the
    last block read through :meth:`at` is cached, read-only.
    """

    def __init__(
        self, dim: int, seed: int, block_size: int = SAMPLE_BLOCK_SIZE
    ) -> None:
        """Initialize the stream.

        Args:
            dim: Ambient dimension, at least 2
            seed: 64-bit unsigned seed
            block_size: Directions per block

        Raises:
            DomainError: If ``dim`` or ``seed`` is invalid
        """
        require_dimension(dim, MIN_DIMENSION)
        if block_size < 1:
            raise DomainError(f"block_size must be >= 1, got {block_size}")
        self.dim = dim
        self.seed = Seed(seed)
        self.block_size = block_size
        self.position = 0
        self._cached: Optional[tuple[int, np.ndarray]] = None

    def block(self, index: int) -> np.ndarray:
        """Return the ``(block_size, dim)`` unit directions of block ``index``."""
        generator = philox_generator(self.seed, index << _BLOCK_SHIFT)
        uniforms = generator.random((self.block_size, _uniform_width(self.dim)))
        rows = gaussian_rows(uniforms, self.dim)

        norms = np.linalg.norm(rows, axis=1)
        for offset in np.flatnonzero(norms < MIN_GAUSSIAN_NORM):
            rows[offset] = self._redraw(index * self.block_size + int(offset))
            norms[offset] = np.linalg.norm(rows[offset])
        return rows / norms[:, None]

    def _redraw(self, sample: int) -> np.ndarray:
        attempt = 0
        while True:
            attempt += 1
            counter = sample << _BLOCK_SHIFT | attempt << _RETRY_SHIFT
            generator = philox_generator(self.seed, counter)
            row = gaussian_rows(
                generator.random((1, _uniform_width(self.dim))), self.dim
            )[0]
            if np.linalg.norm(row) >= MIN_GAUSSIAN_NORM:
                return row

    def at(self, sample: int) -> Direction:
        """Return direction number ``sample`` of the stream."""
        if sample < 0:
            raise DomainError(f"sample index must be >= 0, got {sample}")
        block, offset = divmod(sample, self.block_size)
        return Direction(self._cached_block(block)[offset])

    def _cached_block(self, index: int) -> np.ndarray:
        if self._cached is None or self._cached[0] != index:
            rows = self.block(index)
            rows.setflags(write=False)
            self._cached = (index, rows)
        return self._cached[1]

    def rotations(self, index: int, count: int) -> np.ndarray:
        """Return ``count`` Haar-random rotations for block ``index``."""
        generator = philox_generator(
            self.seed, _ROTATION_STREAM | index << _BLOCK_SHIFT
        )
        matrices = special_ortho_group.rvs(
            self.dim, size=count, random_state=generator
        )
        return np.reshape(matrices, (count, self.dim, self.dim))


def sample_direction(d: int, stream: DirectionStream) -> Direction:
    """Draw the next uniform direction from a stream and advance its cursor.

    Raises:
        DomainError: If ``d`` does not match the stream dimension
    """
    if d != stream.dim:
        raise DomainError(f"stream draws in R^{stream.dim}, asked for R^{d}")
    direction = stream.at(stream.position)
    stream.position += 1
    return direction


def random_rotation(d: int, rng: np.random.Generator) -> np.ndarray:
    """Return a uniformly (Haar) distributed rotation matrix in SO(d)."""
    require_dimension(d, MIN_DIMENSION)
    return np.asarray(special_ortho_group.rvs(d, random_state=rng))
