"""Minimum-Euclidean-distance matching against a database of spectrogram images."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple, Sequence

import numpy as np

from .errors import EmptyDatabase, LengthMismatch
from .features import FeatureMode, extract_features
from .spectrogram import PixelMatrix, resize_bilinear


@dataclass(frozen=True, eq=False)
class TrainingRecord:
    label: str
    pixels: PixelMatrix
    source_id: str = ""

    def __post_init__(self):
        if not self.label:
            raise ValueError("label must be non-empty")
        if not isinstance(self.pixels, PixelMatrix):
            object.__setattr__(self, "pixels", PixelMatrix(self.pixels))

    def __eq__(self, other):
        if not isinstance(other, TrainingRecord):
            return NotImplemented
        return (
            self.label == other.label
            and self.source_id == other.source_id
            and self.pixels == other.pixels
        )

    __hash__ = None


class Match(NamedTuple):
    source_id: str
    label: str
    distance: float


@dataclass(frozen=True)
class ClassificationResult:
    ranking: tuple  # of Match, ascending distance

    @property
    def best(self) -> Match:
        return self.ranking[0]

    @property
    def best_label(self) -> str:
        return self.ranking[0].label

    @property
    def best_distance(self) -> float:
        return self.ranking[0].distance


def euclidean_distance(x, y) -> float:
    x = np.asarray(x, dtype=np.float64).ravel()
    y = np.asarray(y, dtype=np.float64).ravel()
    if x.size != y.size or x.size == 0:
        raise LengthMismatch(f"cannot compare vectors of length {x.size} and {y.size}")
    d = x - y
    return math.sqrt(float(np.dot(d, d)))


def classify(
    test_px: PixelMatrix,
    db: Sequence[TrainingRecord],
    n_levels: int = 4,
    mode: FeatureMode = FeatureMode.ALL,
    cache: dict | None = None,
) -> ClassificationResult:
    """Rank ``db`` by feature distance to ``test_px`` (1-nearest-neighbour).

    Every training image is resized to the test image's shape before its
    features are taken. Equal distances keep database order, so the earliest
    record wins ties.

    ``cache`` may be a dict shared across calls on the same records; it maps
    ``(id(record), shape, n_levels, mode)`` to features and never changes results.
    """
    records = list(db)
    if not records:
        raise EmptyDatabase("no training records to match against")
    if not isinstance(test_px, PixelMatrix):
        test_px = PixelMatrix(test_px)
    mode = FeatureMode(mode)
    test_fv = extract_features(test_px, n_levels, mode)

    scored = []
    for rec in records:
        key = (id(rec), test_px.shape, n_levels, mode)
        hit = cache.get(key) if cache is not None else None
        if hit is not None and hit[0] is rec:
            fv = hit[1]
        else:
            fv = extract_features(resize_bilinear(rec.pixels, *test_px.shape), n_levels, mode)
            if cache is not None:
                # holding rec keeps its id from being reused while cached
                cache[key] = (rec, fv)
        scored.append(Match(rec.source_id, rec.label, euclidean_distance(test_fv.values, fv.values)))

    # stable sort keeps insertion order among ties
    ranking = tuple(sorted(scored, key=lambda m: m.distance))
    return ClassificationResult(ranking)
