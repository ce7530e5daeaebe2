# %% [markdown]
# # Means and k-means under dtw
#
# A mean of (0, 2, 3) and (1, 2, 3) is (0.5, 2, 3), but so is every
# series that repeats its last value. Cohesion cannot tell them apart,
# while the separation from another cluster grows with every repetition.

# %%
import numpy as np

from warpinv import dba, frechet, kmeans
from warpinv.clustering import EXAMPLE_CLUSTERS, EXAMPLE_MEAN_1, replicated_mean, separation_growth_demo

c1, c2 = EXAMPLE_CLUSTERS
res = dba(c2, length=3)
print("DBA mean", res.mean, "Frechet", res.history[-1])
for r in (1, 2, 5):
    print(r, replicated_mean(r), frechet(c2, replicated_mean(r)))

# %%
for row in separation_growth_demo(6):
    print(row)

# %% [markdown]
# k-means started from the two known means keeps the natural partition.

# %%
cl = kmeans([*c1, *c2], 2, init_centroids=[EXAMPLE_MEAN_1, replicated_mean(1)])
print(cl.assignments, [np.round(c, 3) for c in cl.centroids], cl.objective)
