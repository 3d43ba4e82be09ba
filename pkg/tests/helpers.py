"""Test-only encoders, readers and brute-force oracles.

Nothing here calls into the package code paths it is used to check.
"""

import math
import struct

import numpy as np


def encode_wav(samples, sample_rate=8000, bits=16, channels=1, format_tag=1,
               extra_chunks=(), data_size=None):
    """Build RIFF/WAVE bytes by hand.

    ``samples`` are floats in [-1, 1] (interleaved if multi-channel); they are
    converted with the inverse of the decoder's scaling. ``extra_chunks`` are
    ``(id, payload)`` pairs inserted between ``fmt `` and ``data``.
    """
    samples = np.asarray(samples, dtype=np.float64).ravel()
    if bits == 16:
        ints = np.clip(np.round(samples * 32768), -32768, 32767).astype("<i2")
        payload = ints.tobytes()
    elif bits == 8:
        ints = np.clip(np.round(samples * 128 + 128), 0, 255).astype(np.uint8)
        payload = ints.tobytes()
    else:
        payload = np.asarray(samples, dtype="<f4").tobytes()
    block_align = channels * bits // 8
    fmt = struct.pack("<HHIIHH", format_tag, channels, sample_rate,
                      sample_rate * block_align, block_align, bits)
    body = b"WAVE" + b"fmt " + struct.pack("<I", len(fmt)) + fmt
    for cid, data in extra_chunks:
        body += cid + struct.pack("<I", len(data)) + data + (b"\x00" if len(data) & 1 else b"")
    declared = len(payload) if data_size is None else data_size
    body += b"data" + struct.pack("<I", declared) + payload
    return b"RIFF" + struct.pack("<I", len(body)) + body


def read_pgm(data):
    """Parse a binary P5 PGM back into a (rows, cols) array, bottom row = row 0."""
    tokens = []
    pos = 0
    while len(tokens) < 4:
        while data[pos:pos + 1].isspace():
            pos += 1
        start = pos
        while not data[pos:pos + 1].isspace():
            pos += 1
        tokens.append(data[start:pos])
    pos += 1  # single whitespace byte after maxval
    magic, width, height, maxval = tokens
    assert magic == b"P5" and int(maxval) == 255
    width, height = int(width), int(height)
    img = np.frombuffer(data[pos:pos + width * height], dtype=np.uint8).reshape(height, width)
    assert len(data) == pos + width * height
    return img[::-1]


def dft_bruteforce(frame):
    """O(n^2) unnormalized DFT, full two-sided spectrum."""
    n = len(frame)
    out = []
    for k in range(n):
        re = im = 0.0
        for t, x in enumerate(frame):
            ang = -2.0 * math.pi * k * t / n
            re += x * math.cos(ang)
            im += x * math.sin(ang)
        out.append(complex(re, im))
    return out


def pad_edge_loop(m):
    rows = [list(r) for r in m]
    if len(rows) % 2:
        rows.append(list(rows[-1]))
    if len(rows[0]) % 2:
        for r in rows:
            r.append(r[-1])
    return rows


def ll_loop(m):
    """LL band of one orthonormal Haar level, with explicit loops."""
    p = pad_edge_loop(m)
    out = []
    for i in range(0, len(p), 2):
        row = []
        for j in range(0, len(p[0]), 2):
            row.append((p[i][j] + p[i][j + 1] + p[i + 1][j] + p[i + 1][j + 1]) / 2.0)
        out.append(row)
    return out


def row_means_loop(m):
    out = []
    for row in m:
        total = 0.0
        for v in row:
            total += abs(v)
        out.append(total / len(row))
    return out


def features_oracle(m, n_levels):
    """Brute-force pyramid + per-row means, concatenated level by level."""
    current = [[float(v) for v in row] for row in np.asarray(m)]
    feats = []
    for _ in range(n_levels):
        current = ll_loop(current)
        feats.extend(row_means_loop(current))
    return feats


def dim_trace(rows, cols, n_levels):
    """Step-by-step dims under the pad-then-halve rule."""
    dims = []
    for _ in range(n_levels):
        if rows % 2:
            rows += 1
        if cols % 2:
            cols += 1
        rows //= 2
        cols //= 2
        dims.append((rows, cols))
    return dims


def distance_loop(x, y):
    total = 0.0
    for a, b in zip(x, y):
        total += (a - b) * (a - b)
    return math.sqrt(total)
