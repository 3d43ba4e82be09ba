"""Row-mean-of-absolute-value features over the Haar approximation pyramid."""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

import numpy as np

from .errors import EmptyMatrix
from .spectrogram import PixelMatrix
from .wavelet import approximation_pyramid


class FeatureMode(str, Enum):
    ALL = "all"    # concatenate levels 1..N
    LAST = "last"  # level N only


@dataclass(frozen=True, eq=False)
class FeatureVector:
    values: np.ndarray
    level_offsets: tuple
    n_levels: int

    def __len__(self):
        return self.values.size

    def segment(self, i: int) -> np.ndarray:
        """The ``i``-th stored segment (0-based)."""
        start = self.level_offsets[i]
        stop = self.level_offsets[i + 1] if i + 1 < len(self.level_offsets) else self.values.size
        return self.values[start:stop]


def row_mean_abs(m) -> np.ndarray:
    m = np.asarray(m, dtype=np.float64)
    if m.ndim != 2 or 0 in m.shape:
        raise EmptyMatrix("row means need a non-empty 2-D matrix")
    return np.abs(m).mean(axis=1)


def extract_features(px, n_levels: int = 4, mode: FeatureMode = FeatureMode.ALL) -> FeatureVector:
    mode = FeatureMode(mode)
    image = px.pixels if isinstance(px, PixelMatrix) else px
    pyramid = approximation_pyramid(np.asarray(image, dtype=np.float64), n_levels)
    levels = pyramid.levels if mode is FeatureMode.ALL else pyramid.levels[-1:]

    segments = [row_mean_abs(ca) for ca in levels]
    offsets = tuple(int(o) for o in np.cumsum([0] + [s.size for s in segments[:-1]]))
    values = np.concatenate(segments)
    values.setflags(write=False)
    return FeatureVector(values, offsets, n_levels)
