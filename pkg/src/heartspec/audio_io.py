"""RIFF/WAVE PCM decoding into normalized sample arrays.

Only uncompressed PCM (format tag 1) at 8 or 16 bits per sample is accepted.
Unknown chunks such as ``LIST`` are skipped.
"""

from __future__ import annotations

import struct
from dataclasses import dataclass

import numpy as np

from .errors import MalformedHeader, TruncatedData, UnsupportedEncoding

WAVE_FORMAT_PCM = 0x0001


@dataclass(frozen=True, eq=False)
class AudioClip:
    """Decoded audio.

    ``samples`` holds interleaved frames when ``channels > 1``; after
    :func:`downmix_to_mono` it is a plain 1-D signal.
    """

    samples: np.ndarray
    sample_rate: int
    channels: int = 1

    def __post_init__(self):
        samples = np.array(self.samples, dtype=np.float64).ravel()
        samples.setflags(write=False)
        object.__setattr__(self, "samples", samples)
        if self.sample_rate <= 0:
            raise ValueError(f"sample_rate must be positive, got {self.sample_rate}")
        if self.channels < 1:
            raise ValueError(f"channels must be >= 1, got {self.channels}")
        if samples.size % self.channels:
            raise ValueError("sample count is not a multiple of the channel count")

    @property
    def n_frames(self) -> int:
        return self.samples.size // self.channels

    @property
    def frames(self) -> np.ndarray:
        """Samples as an ``(n_frames, channels)`` view."""
        return self.samples.reshape(-1, self.channels)

    @property
    def duration(self) -> float:
        return self.n_frames / self.sample_rate

    def __eq__(self, other):
        if not isinstance(other, AudioClip):
            return NotImplemented
        return (
            self.sample_rate == other.sample_rate
            and self.channels == other.channels
            and np.array_equal(self.samples, other.samples)
        )

    __hash__ = None


def _iter_chunks(data: bytes, start: int, end: int):
    pos = start
    while pos + 8 <= end:
        chunk_id = data[pos:pos + 4]
        (size,) = struct.unpack_from("<I", data, pos + 4)
        body = pos + 8
        yield chunk_id, body, size
        # RIFF chunks are word aligned
        pos = body + size + (size & 1)


def parse_wav(data: bytes) -> AudioClip:
    """Decode a RIFF/WAVE byte string.

    8-bit samples are unsigned and map through ``(v - 128) / 128``; 16-bit
    samples are signed little-endian and map through ``v / 32768``.
    Multi-channel input is kept interleaved.
    """
    data = bytes(data)
    if len(data) < 12 or data[:4] != b"RIFF" or data[8:12] != b"WAVE":
        raise MalformedHeader("missing RIFF/WAVE signature")

    (riff_size,) = struct.unpack_from("<I", data, 4)
    # tolerate writers that get the RIFF size wrong; the chunk sizes are what matter
    end = len(data) if riff_size + 8 > len(data) or riff_size < 4 else riff_size + 8

    fmt = None
    payload = None
    for chunk_id, body, size in _iter_chunks(data, 12, end):
        if chunk_id == b"fmt ":
            if size < 16 or body + 16 > len(data):
                raise MalformedHeader("fmt chunk too short")
            fmt = struct.unpack_from("<HHIIHH", data, body)
        elif chunk_id == b"data":
            if fmt is None:
                raise MalformedHeader("data chunk precedes fmt chunk")
            if body + size > len(data):
                raise TruncatedData(
                    f"data chunk declares {size} bytes, only {len(data) - body} present"
                )
            payload = data[body:body + size]
            break

    if fmt is None:
        raise MalformedHeader("missing fmt chunk")
    if payload is None:
        raise MalformedHeader("missing data chunk")

    format_tag, channels, sample_rate, _byte_rate, _block_align, bits = fmt
    if format_tag != WAVE_FORMAT_PCM:
        raise UnsupportedEncoding(f"format tag {format_tag:#06x} is not PCM")
    if bits not in (8, 16):
        raise UnsupportedEncoding(f"{bits}-bit PCM is not supported")
    if channels < 1 or sample_rate < 1:
        raise MalformedHeader(f"invalid fmt fields: channels={channels}, rate={sample_rate}")

    frame_bytes = channels * (bits // 8)
    n_frames = len(payload) // frame_bytes
    if n_frames == 0:
        raise MalformedHeader("data chunk holds no complete frames")
    # drops a trailing pad byte or partial frame
    payload = payload[: n_frames * frame_bytes]

    if bits == 8:
        raw = np.frombuffer(payload, dtype=np.uint8).astype(np.float64)
        samples = (raw - 128.0) / 128.0
    else:
        raw = np.frombuffer(payload, dtype="<i2").astype(np.float64)
        samples = raw / 32768.0

    return AudioClip(samples, sample_rate, channels)


def read_wav(path) -> AudioClip:
    with open(path, "rb") as fh:
        return parse_wav(fh.read())


def downmix_to_mono(clip: AudioClip) -> AudioClip:
    """Average channels frame by frame."""
    if clip.channels == 1:
        return clip
    return AudioClip(clip.frames.mean(axis=1), clip.sample_rate, 1)


def normalize_peak(clip: AudioClip) -> AudioClip:
    """Scale so the largest absolute sample is 1. Silent clips pass through."""
    peak = np.max(np.abs(clip.samples)) if clip.samples.size else 0.0
    if peak == 0.0:
        return clip
    return AudioClip(clip.samples / peak, clip.sample_rate, clip.channels)
