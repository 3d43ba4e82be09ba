"""Binary database of labelled spectrogram images.

Layout (all integers little-endian)::

    magic    8 bytes  b"PCGSDB01"
    version  u32      1
    count    u32      number of records
    record:
      label_len  u16
      label      UTF-8, label_len bytes (1..255)
      rows       u32
      cols       u32
      pixels     rows * cols bytes, row-major, row 0 = frequency bin 0

Source ids are not part of the format. Loaded records are named ``#<index>``
after their position, and database equality compares labels and pixels only.
"""

from __future__ import annotations

import io
import struct
from dataclasses import dataclass, field

import numpy as np

from .errors import BadMagic, CorruptRecord, IoFailure, Truncated, UnsupportedVersion
from .matcher import TrainingRecord
from .spectrogram import PixelMatrix

MAGIC = b"PCGSDB01"
FORMAT_VERSION = 1
MAX_LABEL_BYTES = 255

_HEADER = struct.Struct("<8sII")
_LABEL_LEN = struct.Struct("<H")
_DIMS = struct.Struct("<II")


@dataclass(eq=False)
class SpectroDb:
    records: list = field(default_factory=list)
    format_version: int = FORMAT_VERSION

    def __len__(self):
        return len(self.records)

    def __iter__(self):
        return iter(self.records)

    def __eq__(self, other):
        if not isinstance(other, SpectroDb):
            return NotImplemented
        return (
            self.format_version == other.format_version
            and len(self.records) == len(other.records)
            and all(
                a.label == b.label and a.pixels == b.pixels
                for a, b in zip(self.records, other.records)
            )
        )

    __hash__ = None

    def labels(self) -> list[str]:
        return [r.label for r in self.records]


def _encode_record(rec: TrainingRecord) -> bytes:
    label = rec.label.encode("utf-8")
    if not 1 <= len(label) <= MAX_LABEL_BYTES:
        raise ValueError(f"label {rec.label!r} must encode to 1..{MAX_LABEL_BYTES} bytes")
    px = rec.pixels
    return b"".join([
        _LABEL_LEN.pack(len(label)),
        label,
        _DIMS.pack(px.rows, px.cols),
        np.ascontiguousarray(px.pixels, dtype=np.uint8).tobytes(),
    ])


def dumps_db(db: SpectroDb) -> bytes:
    parts = [_HEADER.pack(MAGIC, db.format_version, len(db.records))]
    parts.extend(_encode_record(r) for r in db.records)
    return b"".join(parts)


def save_db(db: SpectroDb, sink) -> int:
    """Write ``db`` to a binary stream or path; returns the byte count."""
    payload = dumps_db(db)
    try:
        if hasattr(sink, "write"):
            sink.write(payload)
        else:
            with open(sink, "wb") as fh:
                fh.write(payload)
    except OSError as exc:
        raise IoFailure(f"cannot write database: {exc}") from exc
    return len(payload)


def _read_exact(stream, n: int, what: str) -> bytes:
    buf = stream.read(n)
    if len(buf) != n:
        raise Truncated(f"stream ended inside {what} (wanted {n} bytes, got {len(buf)})")
    return buf


def load_db(source) -> SpectroDb:
    """Read a database from a binary stream, path, or bytes.

    Stops after the declared record count; anything following is not read.
    """
    if isinstance(source, (bytes, bytearray, memoryview)):
        return _load_stream(io.BytesIO(bytes(source)))
    if hasattr(source, "read"):
        return _load_stream(source)
    try:
        with open(source, "rb") as fh:
            return _load_stream(fh)
    except OSError as exc:
        raise IoFailure(f"cannot read database: {exc}") from exc


def _load_stream(stream) -> SpectroDb:
    head = stream.read(_HEADER.size)
    if len(head) < len(MAGIC) or head[: len(MAGIC)] != MAGIC:
        raise BadMagic("not a heart-sound spectrogram database")
    if len(head) != _HEADER.size:
        raise Truncated("stream ended inside the header")
    _, version, count = _HEADER.unpack(head)
    if version != FORMAT_VERSION:
        raise UnsupportedVersion(f"format version {version} is not supported")

    records = []
    for i in range(count):
        (label_len,) = _LABEL_LEN.unpack(_read_exact(stream, _LABEL_LEN.size, f"record {i} label length"))
        if not 1 <= label_len <= MAX_LABEL_BYTES:
            raise CorruptRecord(f"record {i}: label length {label_len} out of range")
        raw_label = _read_exact(stream, label_len, f"record {i} label")
        try:
            label = raw_label.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise CorruptRecord(f"record {i}: label is not UTF-8") from exc
        rows, cols = _DIMS.unpack(_read_exact(stream, _DIMS.size, f"record {i} dimensions"))
        if rows == 0 or cols == 0:
            raise CorruptRecord(f"record {i}: empty {rows}x{cols} image")
        pixels = np.frombuffer(_read_exact(stream, rows * cols, f"record {i} pixels"), dtype=np.uint8)
        records.append(TrainingRecord(label, PixelMatrix(pixels.reshape(rows, cols)), f"#{i}"))
    return SpectroDb(records, version)
