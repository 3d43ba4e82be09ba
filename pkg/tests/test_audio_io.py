import io
import struct
import wave

import numpy as np
import pytest
from hypothesis import given, strategies as st

from heartspec.audio_io import AudioClip, downmix_to_mono, normalize_peak, parse_wav
from heartspec.errors import MalformedHeader, TruncatedData, UnsupportedEncoding

from helpers import encode_wav


def minimal_wav_by_hand():
    # 44-byte canonical header + four 16-bit samples of 16384 at 8000 Hz
    payload = struct.pack("<4h", 16384, 16384, 16384, 16384)
    return (
        b"RIFF" + struct.pack("<I", 36 + len(payload)) + b"WAVE"
        + b"fmt " + struct.pack("<IHHIIHH", 16, 1, 1, 8000, 16000, 2, 16)
        + b"data" + struct.pack("<I", len(payload)) + payload
    )


def test_minimal_header_matches_stdlib_writer():
    buf = io.BytesIO()
    with wave.open(buf, "wb") as w:
        w.setnchannels(1)
        w.setsampwidth(2)
        w.setframerate(8000)
        w.writeframes(struct.pack("<4h", *[16384] * 4))
    assert minimal_wav_by_hand() == buf.getvalue()
    assert len(minimal_wav_by_hand()) == 44 + 8


def test_minimal_wav_decodes_to_half():
    clip = parse_wav(minimal_wav_by_hand())
    assert clip.sample_rate == 8000
    assert clip.channels == 1
    assert clip.samples.tolist() == [0.5, 0.5, 0.5, 0.5]


def test_zero_samples():
    clip = parse_wav(encode_wav(np.zeros(10)))
    assert np.all(clip.samples == 0.0)


def test_float_format_rejected():
    with pytest.raises(UnsupportedEncoding):
        parse_wav(encode_wav([0.1, 0.2], bits=32, format_tag=3))


def test_24_bit_rejected():
    data = bytearray(encode_wav([0.0, 0.0]))
    struct.pack_into("<H", data, 34, 24)
    with pytest.raises(UnsupportedEncoding):
        parse_wav(bytes(data))


def test_eight_bit_unsigned():
    data = encode_wav([-1.0, 0.0, 0.5], bits=8)
    assert data[-3:] == bytes([0, 128, 192])
    assert parse_wav(data).samples.tolist() == [-1.0, 0.0, 0.5]


def test_sixteen_bit_extremes():
    clip = parse_wav(encode_wav([-1.0, 32767 / 32768]))
    assert clip.samples.tolist() == [-1.0, 32767 / 32768]


@pytest.mark.parametrize("mangle", [
    lambda b: b"RIFX" + b[4:],
    lambda b: b[:8] + b"WAVX" + b[12:],
    lambda b: b[:12] + b"junk" + b[16:],   # fmt chunk renamed
    lambda b: b[:4],
])
def test_malformed_header(mangle):
    with pytest.raises(MalformedHeader):
        parse_wav(mangle(encode_wav([0.1, 0.2])))


def test_missing_data_chunk():
    data = encode_wav([0.1, 0.2])
    with pytest.raises(MalformedHeader):
        parse_wav(data[:36])


def test_truncated_data():
    with pytest.raises(TruncatedData):
        parse_wav(encode_wav([0.1] * 4, data_size=100))


def test_unknown_chunks_skipped():
    plain = parse_wav(encode_wav([0.25, -0.25]))
    tagged = parse_wav(encode_wav([0.25, -0.25], extra_chunks=[(b"LIST", b"INFOabc"), (b"fact", b"\1\0\0\0")]))
    assert tagged == plain


def test_odd_data_length_drops_pad_byte():
    data = bytearray(encode_wav([0.5, 0.5]))
    struct.pack_into("<I", data, 40, 5)
    data += b"\x00"
    struct.pack_into("<I", data, 4, len(data) - 8)
    assert parse_wav(bytes(data)).samples.tolist() == [0.5, 0.5]


def test_stereo_kept_interleaved():
    clip = parse_wav(encode_wav([0.25, -0.5, 0.5, 0.0], channels=2))
    assert clip.channels == 2
    assert clip.n_frames == 2
    assert clip.frames.tolist() == [[0.25, -0.5], [0.5, 0.0]]


@pytest.mark.parametrize("frames, expected", [
    ([[0.2, 0.4], [-0.2, 0.2]], [0.3, 0.0]),
    ([[1.0, -1.0]], [0.0]),
])
def test_downmix(frames, expected):
    clip = AudioClip(np.ravel(frames), 8000, 2)
    np.testing.assert_allclose(downmix_to_mono(clip).samples, expected, atol=1e-15)


def test_downmix_mono_identity():
    clip = AudioClip([0.1, 0.2], 8000)
    assert downmix_to_mono(clip) is clip


@pytest.mark.parametrize("samples, expected", [
    ([0.5, -0.25], [1.0, -0.5]),
    ([0.0, 0.0, 0.0], [0.0, 0.0, 0.0]),
    ([-0.8], [-1.0]),
])
def test_normalize_peak(samples, expected):
    assert normalize_peak(AudioClip(samples, 8000)).samples.tolist() == expected


def test_clip_is_immutable():
    clip = AudioClip([0.1, 0.2], 8000)
    with pytest.raises(ValueError):
        clip.samples[0] = 1.0


int16_samples = st.lists(st.integers(-32768, 32767), min_size=1, max_size=200)


@given(int16_samples, st.sampled_from([1, 2, 3]), st.integers(1, 96000))
def test_wav_roundtrip(ints, channels, rate):
    ints = ints[: len(ints) - len(ints) % channels] or [0] * channels
    samples = np.array(ints) / 32768.0
    clip = parse_wav(encode_wav(samples, sample_rate=rate, channels=channels))
    assert clip.sample_rate == rate
    assert np.array_equal(clip.samples, samples)


@given(st.integers(1, 4), st.integers(1, 30))
def test_downmix_keeps_frame_count(channels, n):
    rng = np.random.default_rng(n * 10 + channels)
    clip = AudioClip(rng.uniform(-1, 1, channels * n), 8000, channels)
    assert downmix_to_mono(clip).samples.size == n


@given(st.lists(st.floats(-1, 1, allow_nan=False), min_size=1, max_size=100))
def test_normalize_idempotent(values):
    once = normalize_peak(AudioClip(values, 8000))
    twice = normalize_peak(once)
    assert once.samples.tobytes() == twice.samples.tobytes()
