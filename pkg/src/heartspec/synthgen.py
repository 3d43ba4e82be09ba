"""Seeded synthetic heart sounds for tests and demos.

Three classes are modelled on a damped-sine beat:

* ``normal``: S1 (~60 Hz) then S2 (~90 Hz) each beat, systole shorter than diastole.
* ``murmur``: normal plus 100-400 Hz band-limited noise filling systole.
* ``extrasound``: normal plus a low (~45 Hz) third sound early in diastole.

All randomness comes from numpy's PCG64 bit generator seeded with
``SynthSpec.seed``. PCG64 is a fixed, documented algorithm, so a given spec yields the
same clip on every platform.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

import numpy as np

from .audio_io import AudioClip

BURST_LEN_S = 0.05
BURST_DECAY_S = 0.0125
# background hiss; low enough that the default -100 dB clamp sets the image minimum
NOISE_FLOOR = 1e-5
PEAK = 0.9


class ClassKind(str, Enum):
    NORMAL = "normal"
    MURMUR = "murmur"
    EXTRA = "extrasound"


@dataclass(frozen=True)
class SynthSpec:
    class_kind: ClassKind
    seed: int
    duration_s: float = 5.0
    sample_rate: int = 2000
    beat_rate_bpm: float = 72.0

    def __post_init__(self):
        object.__setattr__(self, "class_kind", ClassKind(self.class_kind))
        if not 0 <= self.seed < 2**64:
            raise ValueError("seed must fit in an unsigned 64-bit integer")
        if self.duration_s <= 0:
            raise ValueError("duration_s must be positive")
        if self.sample_rate < 2000:
            raise ValueError("sample_rate must be at least 2000 Hz")
        if not 40 <= self.beat_rate_bpm <= 180:
            raise ValueError("beat_rate_bpm must lie in [40, 180]")


def _burst(rng, fs, freq, amp):
    t = np.arange(int(round(BURST_LEN_S * fs))) / fs
    phase = rng.uniform(0, 2 * np.pi)
    return amp * np.exp(-t / BURST_DECAY_S) * np.sin(2 * np.pi * freq * t + phase)


def _add(signal, start, chunk):
    start = int(round(start))
    if start >= signal.size:
        return
    stop = min(signal.size, start + chunk.size)
    signal[start:stop] += chunk[: stop - start]


def _band_noise(rng, n, fs, lo, hi):
    if n < 2:
        return np.zeros(n)
    spectrum = np.fft.rfft(rng.standard_normal(n))
    freqs = np.fft.rfftfreq(n, 1.0 / fs)
    spectrum[(freqs < lo) | (freqs > hi)] = 0.0
    out = np.fft.irfft(spectrum, n)
    peak = np.max(np.abs(out))
    return out / peak if peak > 0 else out


def synth_clip(spec: SynthSpec) -> AudioClip:
    rng = np.random.Generator(np.random.PCG64(spec.seed))
    fs = spec.sample_rate
    n = int(round(spec.duration_s * fs))
    x = np.zeros(n)

    period = 60.0 / spec.beat_rate_bpm
    t = rng.uniform(0.0, 0.2 * period)
    while t * fs < n:
        beat = period * rng.uniform(0.97, 1.03)
        systole = beat * rng.uniform(0.32, 0.38)
        s1 = t
        s2 = t + systole

        _add(x, s1 * fs, _burst(rng, fs, rng.uniform(55, 65), rng.uniform(0.9, 1.0)))
        _add(x, s2 * fs, _burst(rng, fs, rng.uniform(85, 95), rng.uniform(0.6, 0.8)))

        if spec.class_kind is ClassKind.MURMUR:
            start = s1 + BURST_LEN_S
            length = int(round((s2 - start) * fs))
            noise = _band_noise(rng, length, fs, 100.0, 400.0)
            # fade in/out so the noise blends with the bursts
            noise *= np.hanning(length) if length > 2 else 1.0
            _add(x, start * fs, rng.uniform(0.35, 0.45) * noise)
        elif spec.class_kind is ClassKind.EXTRA:
            s3 = s2 + rng.uniform(0.12, 0.18)
            _add(x, s3 * fs, _burst(rng, fs, rng.uniform(42, 48), rng.uniform(0.5, 0.7)))

        t += beat

    x += NOISE_FLOOR * rng.standard_normal(n)
    x *= PEAK / np.max(np.abs(x))
    return AudioClip(x, fs)


def corpus_specs(n_per_class: int = 10, base_seed: int = 20_240_000, **kwargs) -> list[SynthSpec]:
    """Labelled specs for a balanced corpus.

    Class ``k`` (in :class:`ClassKind` order) clip ``i`` uses seed
    ``base_seed + 1000 * k + i``.
    """
    return [
        SynthSpec(kind, base_seed + 1000 * k + i, **kwargs)
        for k, kind in enumerate(ClassKind)
        for i in range(n_per_class)
    ]
