"""Orthonormal 2-D Haar transform and the approximation (LL) pyramid.

Each 2x2 block ``[[a, b], [c, d]]`` maps to::

    ll = (a + b + c + d) / 2
    hl = (a + b - c - d) / 2
    lh = (a - b + c - d) / 2
    hh = (a - b - c + d) / 2

Odd dimensions are padded by repeating the last row/column first.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import DimensionMismatch, EmptyMatrix, TooManyLevels


@dataclass(frozen=True, eq=False)
class SubbandSet:
    ll: np.ndarray
    lh: np.ndarray
    hl: np.ndarray
    hh: np.ndarray

    def energy(self) -> float:
        return float(sum(np.sum(b * b) for b in (self.ll, self.lh, self.hl, self.hh)))


@dataclass(frozen=True, eq=False)
class ApproximationPyramid:
    levels: list = field(default_factory=list)

    @property
    def n_levels(self) -> int:
        return len(self.levels)

    def __getitem__(self, level: int) -> np.ndarray:
        """1-based access: ``pyr[1]`` is Ca_1."""
        if level < 1:
            raise IndexError("pyramid levels are numbered from 1")
        return self.levels[level - 1]


def pad_even(m: np.ndarray) -> np.ndarray:
    rows, cols = m.shape
    return np.pad(m, ((0, rows & 1), (0, cols & 1)), mode="edge")


def _as_matrix(m) -> np.ndarray:
    m = np.asarray(m, dtype=np.float64)
    if m.ndim != 2:
        raise ValueError(f"expected a 2-D matrix, got {m.ndim} dimensions")
    if 0 in m.shape:
        raise EmptyMatrix("matrix has no entries")
    return m


def haar_dwt2(m) -> SubbandSet:
    m = pad_even(_as_matrix(m))
    a = m[0::2, 0::2]
    b = m[0::2, 1::2]
    c = m[1::2, 0::2]
    d = m[1::2, 1::2]
    return SubbandSet(
        ll=(a + b + c + d) / 2,
        lh=(a - b + c - d) / 2,
        hl=(a + b - c - d) / 2,
        hh=(a - b - c + d) / 2,
    )


def haar_idwt2(bands: SubbandSet) -> np.ndarray:
    ll, lh, hl, hh = (np.asarray(x, dtype=np.float64) for x in (bands.ll, bands.lh, bands.hl, bands.hh))
    if not (ll.shape == lh.shape == hl.shape == hh.shape):
        raise DimensionMismatch(
            f"sub-band shapes differ: {ll.shape}, {lh.shape}, {hl.shape}, {hh.shape}"
        )
    rows, cols = ll.shape
    out = np.empty((2 * rows, 2 * cols))
    out[0::2, 0::2] = (ll + hl + lh + hh) / 2
    out[0::2, 1::2] = (ll + hl - lh - hh) / 2
    out[1::2, 0::2] = (ll - hl + lh - hh) / 2
    out[1::2, 1::2] = (ll - hl - lh + hh) / 2
    return out


def approximation_pyramid(m, n_levels: int = 4) -> ApproximationPyramid:
    """Repeatedly keep the LL band, ``n_levels`` times.

    Raises :class:`TooManyLevels` once the current approximation is a single
    coefficient, since further levels would not reduce anything.
    """
    if n_levels < 1:
        raise ValueError(f"n_levels must be >= 1, got {n_levels}")
    current = _as_matrix(m)
    levels = []
    for k in range(1, n_levels + 1):
        if current.shape == (1, 1):
            raise TooManyLevels(
                f"level {k} requested but level {k - 1} is already 1x1"
            )
        current = haar_dwt2(current).ll
        levels.append(current)
    return ApproximationPyramid(levels)


def pyramid_shapes(rows: int, cols: int, n_levels: int) -> list[tuple[int, int]]:
    shapes = []
    for _ in range(n_levels):
        rows, cols = (rows + 1) // 2, (cols + 1) // 2
        shapes.append((rows, cols))
    return shapes
