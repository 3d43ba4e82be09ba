# %% [markdown]
# # From heart sound to feature vector
#
# Walk one synthetic recording through every stage: dB spectrogram,
# 8-bit image, four Haar approximation levels, and the row-mean features.
# PGM images land in ./demo_output/ and open in any image viewer.

# %%
from pathlib import Path

import numpy as np

from heartspec import (
    SynthSpec,
    approximation_pyramid,
    extract_features,
    haar_dwt2,
    quantize,
    render_pgm,
    stft_magnitude,
    synth_clip,
)

out_dir = Path("demo_output")
out_dir.mkdir(exist_ok=True)

clip = synth_clip(SynthSpec("murmur", seed=7))
print(f"{clip.samples.size} samples at {clip.sample_rate} Hz ({clip.duration:.1f} s)")

# %% Spectrogram: rows are frequency bins (row 0 = DC), columns are frames
spec = stft_magnitude(clip)
print("spectrogram", spec.shape, "dB range", spec.values.min(), spec.values.max())
px = quantize(spec)
(out_dir / "murmur_spectrogram.pgm").write_bytes(render_pgm(px))

# %% One Haar level splits the image into four quarter-size bands.
bands = haar_dwt2(px.pixels)
energies = {name: float(np.sum(getattr(bands, name) ** 2)) for name in ("ll", "lh", "hl", "hh")}
total = sum(energies.values())
for name, e in energies.items():
    print(f"{name}: {e / total:6.1%} of the energy")

# %% The approximation pyramid keeps only LL at each level.
pyramid = approximation_pyramid(px.pixels, 4)
for k, ca in enumerate(pyramid.levels, 1):
    print(f"Ca_{k}: {ca.shape}")
    (out_dir / f"murmur_ca{k}.pgm").write_bytes(render_pgm(quantize(ca)))

# %% Row means of |Ca_k| for k = 1..4, concatenated.
fv = extract_features(px, 4)
print("feature length", len(fv), "segment starts", fv.level_offsets)
print("Ca_4 segment", np.round(fv.segment(3), 1))
