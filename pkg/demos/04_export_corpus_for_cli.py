# %% [markdown]
# # Writing a WAV corpus for the command-line tool
#
# The library only reads WAV files, so this uses the standard-library ``wave``
# module to write 16-bit PCM. The folder layout (one directory per class)
# is what ``heartspec build-db`` uses for labels.
#
# Afterwards, try:
#
#     heartspec build-db synthetic_corpus/train -o train.db
#     heartspec classify train.db synthetic_corpus/test/murmur/9001.wav
#     heartspec evaluate train.db --loo
#     heartspec render-spectrogram synthetic_corpus/test/normal/9001.wav -o normal.pgm

# %%
import wave
from pathlib import Path

import numpy as np

from heartspec import SynthSpec, corpus_specs, synth_clip


def write_wav(path, clip):
    path.parent.mkdir(parents=True, exist_ok=True)
    ints = np.clip(np.round(clip.samples * 32767), -32768, 32767).astype("<i2")
    with wave.open(str(path), "wb") as w:
        w.setnchannels(1)
        w.setsampwidth(2)
        w.setframerate(clip.sample_rate)
        w.writeframes(ints.tobytes())


root = Path("synthetic_corpus")
for spec in corpus_specs(10):
    write_wav(root / "train" / spec.class_kind.value / f"{spec.seed}.wav", synth_clip(spec))
for kind in ("normal", "murmur", "extrasound"):
    write_wav(root / "test" / kind / "9001.wav", synth_clip(SynthSpec(kind, 9001)))

print(sorted(str(p) for p in root.rglob("*.wav"))[:5], "...")
