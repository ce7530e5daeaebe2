# %% [markdown]
# # Reducibility statistics and comparing classifiers
#
# Share of series with repeated consecutive values, how much they shrink,
# and a Bayesian sign test over per-dataset accuracy differences.

# %%
import numpy as np

from warpinv import LabeledDataset
from warpinv.experiments import bayes_sign_test, correlations, reducibility_stats

rng = np.random.default_rng(2)
datasets = []
for k in range(12):
    length = 50 + 40 * k
    # longer sets are more often sampled from a coarse sensor
    coarse = rng.random(20) < k / 11
    series = [np.round(np.cumsum(rng.normal(size=length)), 0 if c else 6) for c in coarse]
    datasets.append(LabeledDataset(series, ["a"] * 20, name=f"set{k}"))

stats = [reducibility_stats(d) for d in datasets]
for d, s in zip(datasets, stats):
    print(f"{d.name:6s} len {d.lengths[0]:4d}  p_red {s.p_red:5.1f}%  shortening {s.mean_shortening:5.1f}%")
print("pearson/spearman/kendall:", np.round(correlations([d.lengths[0] for d in datasets], [s.p_red for s in stats]), 3))

# %%
diffs = rng.normal(0.0, 0.004, size=40)
print(bayes_sign_test(diffs, rope=0.005, seed=0))
print(bayes_sign_test(diffs + 0.02, rope=0.005, seed=0))
