"""Heart sound identification from Haar wavelet row means of spectrogram images.

Pipeline: WAV -> mono, peak-normalized clip -> dB spectrogram -> 8-bit image
-> 4-level Haar approximation pyramid -> row means of |Ca_k| -> nearest
training image by Euclidean distance.
"""

__version__ = "0.1.0"

from .audio_io import AudioClip, downmix_to_mono, normalize_peak, parse_wav, read_wav
from .datastore import SpectroDb, load_db, save_db
from .features import FeatureMode, FeatureVector, extract_features, row_mean_abs
from .matcher import ClassificationResult, Match, TrainingRecord, classify, euclidean_distance
from .pipeline import PipelineConfig, clip_to_pixels, evaluate_leave_one_out, evaluate_split
from .spectrogram import (
    PixelMatrix,
    Spectrogram,
    StftConfig,
    Window,
    quantize,
    render_pgm,
    resize_bilinear,
    stft_magnitude,
)
from .synthgen import ClassKind, SynthSpec, corpus_specs, synth_clip
from .wavelet import ApproximationPyramid, SubbandSet, approximation_pyramid, haar_dwt2, haar_idwt2

__all__ = [
    "AudioClip", "ApproximationPyramid", "ClassKind", "ClassificationResult", "FeatureMode",
    "FeatureVector", "Match", "PipelineConfig", "PixelMatrix", "SpectroDb", "Spectrogram",
    "StftConfig", "SubbandSet", "SynthSpec", "TrainingRecord", "Window",
    "approximation_pyramid", "classify", "clip_to_pixels", "corpus_specs", "downmix_to_mono",
    "euclidean_distance", "evaluate_leave_one_out", "evaluate_split", "extract_features",
    "haar_dwt2", "haar_idwt2", "load_db", "normalize_peak", "parse_wav", "quantize",
    "read_wav", "render_pgm", "resize_bilinear", "row_mean_abs", "save_db", "stft_magnitude",
    "synth_clip",
]
