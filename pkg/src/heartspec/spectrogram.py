"""Short-time Fourier magnitude in dB, grayscale quantization, resizing and PGM output."""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

import numpy as np

from .audio_io import AudioClip
from .errors import ClipTooShort

EPS = 1e-10


class Window(str, Enum):
    HANN = "hann"
    RECT = "rect"


@dataclass(frozen=True)
class StftConfig:
    frame_len: int = 256
    hop: int = 128
    window: Window = Window.HANN
    db_floor: float = -100.0

    def __post_init__(self):
        object.__setattr__(self, "window", Window(self.window))
        n = self.frame_len
        if n < 1 or n & (n - 1):
            raise ValueError(f"frame_len must be a power of two, got {n}")
        if not 0 < self.hop <= n:
            raise ValueError(f"hop must satisfy 0 < hop <= frame_len, got {self.hop}")
        if not self.db_floor < 0:
            raise ValueError(f"db_floor must be negative, got {self.db_floor}")

    def window_array(self) -> np.ndarray:
        if self.window is Window.RECT:
            return np.ones(self.frame_len)
        # periodic Hann: the DFT-even form used for spectral analysis
        n = np.arange(self.frame_len)
        return 0.5 - 0.5 * np.cos(2.0 * np.pi * n / self.frame_len)


@dataclass(frozen=True, eq=False)
class Spectrogram:
    """dB magnitudes, shape ``(frame_len // 2 + 1, n_frames)``; row 0 is DC."""

    values: np.ndarray
    sample_rate: int
    db_floor: float = -100.0

    @property
    def shape(self):
        return self.values.shape

    def frequencies(self) -> np.ndarray:
        n_fft = 2 * (self.values.shape[0] - 1)
        return np.arange(self.values.shape[0]) * self.sample_rate / max(n_fft, 1)


@dataclass(frozen=True, eq=False)
class PixelMatrix:
    """8-bit grayscale image of a spectrogram, rows = frequency bins."""

    pixels: np.ndarray

    def __post_init__(self):
        px = np.asarray(self.pixels)
        if px.ndim != 2 or 0 in px.shape:
            raise ValueError(f"pixel matrix must be a non-empty 2-D array, got shape {px.shape}")
        if px.dtype != np.uint8:
            if np.any(px < 0) or np.any(px > 255) or np.any(px != np.round(px)):
                raise ValueError("pixels must be integers in [0, 255]")
            px = px.astype(np.uint8)
        px = np.array(px, dtype=np.uint8, copy=True)
        px.setflags(write=False)
        object.__setattr__(self, "pixels", px)

    @property
    def rows(self) -> int:
        return self.pixels.shape[0]

    @property
    def cols(self) -> int:
        return self.pixels.shape[1]

    @property
    def shape(self):
        return self.pixels.shape

    def __eq__(self, other):
        if not isinstance(other, PixelMatrix):
            return NotImplemented
        return np.array_equal(self.pixels, other.pixels)

    __hash__ = None


def frame_count(n_samples: int, frame_len: int, hop: int) -> int:
    return (n_samples - frame_len) // hop + 1


def stft_magnitude(clip: AudioClip, cfg: StftConfig = StftConfig()) -> Spectrogram:
    """Windowed DFT magnitude of each full frame, in dB and clamped at ``cfg.db_floor``.

    The transform is unnormalized, so a rectangular-window frame satisfies
    ``sum(|X|**2) == frame_len * sum(x**2)`` over the full two-sided spectrum.
    """
    x = clip.samples if clip.channels == 1 else clip.frames.mean(axis=1)
    if x.size < cfg.frame_len:
        raise ClipTooShort(f"clip has {x.size} samples, frame_len is {cfg.frame_len}")

    n_frames = frame_count(x.size, cfg.frame_len, cfg.hop)
    idx = np.arange(cfg.frame_len)[None, :] + cfg.hop * np.arange(n_frames)[:, None]
    frames = x[idx] * cfg.window_array()
    mag = np.abs(np.fft.rfft(frames, axis=1)).T
    db = 20.0 * np.log10(mag + EPS)
    np.maximum(db, cfg.db_floor, out=db)
    db.setflags(write=False)
    return Spectrogram(db, clip.sample_rate, cfg.db_floor)


def _round_half_up(x: np.ndarray) -> np.ndarray:
    return np.floor(x + 0.5)


def quantize(spec) -> PixelMatrix:
    """Map the value range linearly onto 0..255 (round half up).

    Accepts a :class:`Spectrogram` or any real 2-D array. A constant input
    yields an all-zero image.
    """
    values = spec.values if isinstance(spec, Spectrogram) else np.asarray(spec, dtype=np.float64)
    values = np.atleast_2d(values)
    lo, hi = values.min(), values.max()
    if hi == lo:
        return PixelMatrix(np.zeros(values.shape, dtype=np.uint8))
    scaled = (values - lo) / (hi - lo) * 255.0
    return PixelMatrix(np.clip(_round_half_up(scaled), 0, 255).astype(np.uint8))


def _grid(src_len: int, dst_len: int):
    if dst_len == 1:
        pos = np.zeros(1)
    else:
        pos = np.arange(dst_len) * (src_len - 1) / (dst_len - 1)
    i0 = np.floor(pos).astype(np.intp)
    i0 = np.minimum(i0, src_len - 1)
    i1 = np.minimum(i0 + 1, src_len - 1)
    return i0, i1, pos - i0


def resize_bilinear(px: PixelMatrix, target_rows: int, target_cols: int) -> PixelMatrix:
    """Bilinear resampling on a corner-aligned grid."""
    if target_rows < 1 or target_cols < 1:
        raise ValueError(f"target dims must be >= 1, got {target_rows}x{target_cols}")
    if px.shape == (target_rows, target_cols):
        return px
    src = px.pixels.astype(np.float64)
    r0, r1, fr = _grid(px.rows, target_rows)
    c0, c1, fc = _grid(px.cols, target_cols)
    fr = fr[:, None]
    fc = fc[None, :]
    top = src[np.ix_(r0, c0)] * (1 - fc) + src[np.ix_(r0, c1)] * fc
    bottom = src[np.ix_(r1, c0)] * (1 - fc) + src[np.ix_(r1, c1)] * fc
    out = top * (1 - fr) + bottom * fr
    return PixelMatrix(np.clip(_round_half_up(out), 0, 255).astype(np.uint8))


def render_pgm(px: PixelMatrix) -> bytes:
    """Binary P5 PGM with the highest-frequency row at the top."""
    header = f"P5\n{px.cols} {px.rows}\n255\n".encode("ascii")
    return header + np.ascontiguousarray(px.pixels[::-1]).tobytes()
