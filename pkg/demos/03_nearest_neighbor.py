# %% [markdown]
# # Nearest-neighbor classification
#
# Exhaustive dtw/twi search against the banded search with lower bounds
# and early abandoning. For opt-dtw both return the same neighbor.

# %%
import time

import numpy as np

from warpinv import LabeledDataset, NnConfig, classify_many, cross_validate, error_rate

rng = np.random.default_rng(1)


def make(n):
    series, labels = [], []
    for k in range(n):
        lab = k % 2
        steps = np.repeat(rng.normal(lab, 1.0, size=12), rng.integers(1, 6, size=12))
        series.append(np.round(steps, 1))
        labels.append(str(lab))
    return LabeledDataset(series, labels)


train, test = make(120), make(60)
for method in ("dtw", "twi", "opt-dtw", "opt-twi"):
    t0 = time.perf_counter()
    preds = classify_many(train, test.series, NnConfig(method))
    ms = 1e3 * (time.perf_counter() - t0)
    pruned = sum(p.pruned_count for p in preds)
    print(f"{method:8s} error {error_rate(preds, test.labels):.3f}  {ms:7.1f} ms  pruned {pruned}")

# %%
cv = cross_validate(train.concat(test), folds=5, cfg=NnConfig("twi", seed=3))
print("5-fold twi accuracy:", np.round(cv.accuracies, 3), "mean", round(cv.mean, 3))
