"""End-to-end wiring: audio -> pixels -> database -> classification and evaluation."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from pathlib import Path
from typing import Sequence

import numpy as np

from .audio_io import AudioClip, downmix_to_mono, normalize_peak, read_wav
from .errors import TooFewRecords
from .features import FeatureMode
from .matcher import ClassificationResult, TrainingRecord, classify
from .spectrogram import PixelMatrix, StftConfig, quantize, stft_magnitude


@dataclass(frozen=True)
class PipelineConfig:
    stft: StftConfig = field(default_factory=StftConfig)
    n_levels: int = 4
    feature_mode: FeatureMode = FeatureMode.ALL

    def __post_init__(self):
        object.__setattr__(self, "feature_mode", FeatureMode(self.feature_mode))
        if self.n_levels < 1:
            raise ValueError(f"n_levels must be >= 1, got {self.n_levels}")


def clip_to_pixels(clip: AudioClip, stft: StftConfig = StftConfig()) -> PixelMatrix:
    clip = normalize_peak(downmix_to_mono(clip))
    return quantize(stft_magnitude(clip, stft))


def wav_to_pixels(path, stft: StftConfig = StftConfig()) -> PixelMatrix:
    return clip_to_pixels(read_wav(path), stft)


def label_from_path(path) -> str:
    return Path(path).parent.name or "unlabelled"


def source_id_for(path) -> str:
    p = Path(path)
    return f"{p.parent.name}/{p.name}" if p.parent.name else p.name


def collect_wavs(inputs: Sequence) -> list[Path]:
    """Expand directories to their ``.wav`` files (sorted), keep files as given."""
    out = []
    for item in inputs:
        p = Path(item)
        if p.is_dir():
            out.extend(sorted(q for q in p.rglob("*") if q.suffix.lower() == ".wav" and q.is_file()))
        else:
            out.append(p)
    return out


@dataclass
class EvaluationReport:
    labels: list                      # sorted class names
    confusion: np.ndarray             # confusion[true, predicted]
    predictions: list = field(default_factory=list)  # (source_id, true, predicted, distance)

    @property
    def total(self) -> int:
        return int(self.confusion.sum())

    @property
    def correct(self) -> int:
        return int(np.trace(self.confusion))

    @property
    def accuracy(self) -> float:
        return self.correct / self.total if self.total else 0.0

    def per_class_accuracy(self) -> dict:
        out = {}
        for i, label in enumerate(self.labels):
            n = self.confusion[i].sum()
            out[label] = float(self.confusion[i, i] / n) if n else float("nan")
        return out


def _report(pairs, labels=None) -> EvaluationReport:
    labels = sorted(labels or {p[1] for p in pairs} | {p[2] for p in pairs})
    index = {label: i for i, label in enumerate(labels)}
    confusion = np.zeros((len(labels), len(labels)), dtype=np.int64)
    for _, truth, pred, _ in pairs:
        confusion[index[truth], index[pred]] += 1
    return EvaluationReport(labels, confusion, list(pairs))


def evaluate_leave_one_out(
    records: Sequence[TrainingRecord],
    n_levels: int = 4,
    mode: FeatureMode = FeatureMode.ALL,
) -> EvaluationReport:
    """Classify each record against all the others."""
    records = list(records)
    if len(records) < 2:
        raise TooFewRecords(f"leave-one-out needs at least 2 records, got {len(records)}")
    cache: dict = {}
    pairs = []
    for i, rec in enumerate(records):
        others = records[:i] + records[i + 1:]
        res = classify(rec.pixels, others, n_levels, mode, cache=cache)
        pairs.append((rec.source_id, rec.label, res.best_label, res.best_distance))
    return _report(pairs, {r.label for r in records})


def split_records(records: Sequence[TrainingRecord], train_fraction: float = 0.5):
    """Per class, the first ``ceil(fraction * n)`` records train and the rest test.

    Each class keeps at least one training record.
    """
    if not 0 < train_fraction < 1:
        raise ValueError("train_fraction must lie strictly between 0 and 1")
    by_label: dict = {}
    for rec in records:
        by_label.setdefault(rec.label, []).append(rec)
    train, test = [], []
    for group in by_label.values():
        k = max(1, int(np.ceil(train_fraction * len(group))))
        train.extend(group[:k])
        test.extend(group[k:])
    order = {id(r): i for i, r in enumerate(records)}
    train.sort(key=lambda r: order[id(r)])
    test.sort(key=lambda r: order[id(r)])
    return train, test


def evaluate_split(
    records: Sequence[TrainingRecord],
    train_fraction: float = 0.5,
    n_levels: int = 4,
    mode: FeatureMode = FeatureMode.ALL,
) -> EvaluationReport:
    records = list(records)
    train, test = split_records(records, train_fraction)
    if not train or not test:
        raise TooFewRecords("split leaves no training or no test records")
    cache: dict = {}
    pairs = []
    for rec in test:
        res: ClassificationResult = classify(rec.pixels, train, n_levels, mode, cache=cache)
        pairs.append((rec.source_id, rec.label, res.best_label, res.best_distance))
    return _report(pairs, {r.label for r in records})


def class_counts(records: Sequence[TrainingRecord]) -> dict:
    return dict(sorted(Counter(r.label for r in records).items()))
