# %% [markdown]
# # Minimum-distance matching with one prototype per class
#
# The database holds one spectrogram image per class. Each test recording is
# compared against all three and takes the label of the closest one, giving a
# three-row match/mismatch table per test.

# %%
from heartspec import SynthSpec, TrainingRecord, classify, clip_to_pixels, synth_clip

prototypes = [
    TrainingRecord(kind, clip_to_pixels(synth_clip(SynthSpec(kind, seed=1))), f"{kind} (seed 1)")
    for kind in ("extrasound", "normal", "murmur")
]

# %%
for kind in ("murmur", "extrasound", "normal"):
    test_px = clip_to_pixels(synth_clip(SynthSpec(kind, seed=9001)))
    result = classify(test_px, prototypes)
    print(f"\n{kind} sound as test sample vs")
    by_source = {m.source_id: m for m in result.ranking}
    for rec in prototypes:
        m = by_source[rec.source_id]
        verdict = "Matched" if m is result.best else "Mismatched"
        print(f"  {rec.source_id:<22} {m.distance:10.4f}  {verdict}")

# %% [markdown]
# Training images are resized to the test image before comparison, so a
# test recording of a different length still works:

# %%
short = clip_to_pixels(synth_clip(SynthSpec("normal", seed=5, duration_s=3.0)))
print("test image", short.shape, "prototype image", prototypes[0].pixels.shape)
print("best match:", classify(short, prototypes).best_label)
