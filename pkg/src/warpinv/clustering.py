"""Fréchet functions, DBA sample means and k-means under dtw or twi.

The demos at the bottom show how expanding a centroid changes cluster
separation while cohesion stays put.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from .core import as_series, condense_series, resample_linear
from .distances import _backtrack, _dtw_matrix, _dtw_sq

__all__ = [
    "Clustering",
    "DbaResult",
    "frechet",
    "dba",
    "dba_mean",
    "kmeans",
    "cluster_cohesion",
    "cluster_separation",
    "separation_growth_demo",
]


def _sq(x, y) -> float:
    return float(_dtw_sq(x, y, -1, np.inf))


def frechet(sample: Sequence, z) -> float:
    """Sum of squared dtw distances from ``z`` to every member of ``sample``."""
    if len(sample) == 0:
        raise ValueError("sample is empty")
    z = as_series(z, name="z")
    return float(sum(_sq(as_series(x), z) for x in sample))


@dataclass
class DbaResult:
    mean: np.ndarray
    history: list[float]  # Fréchet value of the initializer, then after each update
    n_iter: int


def _initial_mean(x: np.ndarray, length: int) -> np.ndarray:
    if x.size == length:
        return x.copy()
    if x.size >= 2 and length >= 2:
        return resample_linear(x, length)
    return np.full(length, x.mean())


def dba(
    sample: Sequence,
    length: int | None = None,
    max_iter: int = 50,
    seed: int = 0,
    init=None,
    tol: float = 1e-9,
) -> DbaResult:
    """DTW barycenter averaging of a fixed length.

    Each iteration aligns the current mean to every series along an optimal
    path and replaces each mean value by the average of all values aligned
    to it. The Fréchet value never increases.

    Parameters
    ----------
    sample : sequence of array_like
    length : int, optional
        Length of the mean; defaults to the median member length.
    max_iter : int
    seed : int
        Picks the member used as initializer (resampled to ``length``).
    init : array_like, optional
        Explicit initial mean; overrides ``seed`` and ``length``.
    tol : float
        Stop when the Fréchet value drops by less than this.
    """
    sample = [as_series(x) for x in sample]
    if not sample:
        raise ValueError("sample is empty")
    if init is not None:
        mean = as_series(init, name="init").copy()
    else:
        if length is None:
            length = int(np.median([x.size for x in sample]))
        if length < 1:
            raise ValueError("length must be positive")
        rng = np.random.default_rng(seed)
        mean = _initial_mean(sample[int(rng.integers(len(sample)))], length)

    history = [frechet(sample, mean)]
    it = 0
    for it in range(1, max_iter + 1):
        sums = np.zeros(mean.size)
        counts = np.zeros(mean.size)
        for x in sample:
            path = _backtrack(_dtw_matrix(mean, x, -1))
            np.add.at(sums, path[:, 0] - 1, x[path[:, 1] - 1])
            np.add.at(counts, path[:, 0] - 1, 1.0)
        candidate = sums / counts
        f = frechet(sample, candidate)
        if f > history[-1]:  # guards against round-off; the update cannot really increase F
            break
        mean = candidate
        history.append(f)
        if history[-2] - f < tol:
            break
    return DbaResult(mean, history, it)


def dba_mean(sample: Sequence, length: int | None = None, max_iter: int = 50, seed: int = 0) -> np.ndarray:
    return dba(sample, length, max_iter, seed).mean


@dataclass
class Clustering:
    assignments: np.ndarray
    centroids: list[np.ndarray]
    k: int
    objective: float
    n_iter: int = 0
    history: list[float] = field(default_factory=list)

    def members(self, i: int) -> np.ndarray:
        return np.flatnonzero(self.assignments == i)


def _assign(data, centroids, dist_sq):
    d = np.array([[dist_sq(x, c) for c in centroids] for x in data])
    return d.argmin(axis=1), d  # argmin keeps the lowest index on ties


def kmeans(
    data: Sequence,
    k: int,
    distance: str = "dtw",
    mean_length: int | None = None,
    max_iter: int = 30,
    seed: int = 0,
    init_centroids: Sequence | None = None,
    dba_iter: int = 30,
) -> Clustering:
    """k-means with DBA centroids.

    Under ``distance="twi"`` series are compared by their condensed forms,
    means are computed over condensed members and condensed again.
    ``mean_length`` fixes the centroid length; by default it is the median
    (condensed, under twi) length of each cluster's members.
    """
    if distance not in ("dtw", "twi"):
        raise ValueError("distance must be 'dtw' or 'twi'")
    data = [as_series(x) for x in data]
    if not 1 <= k <= len(data):
        raise ValueError(f"k must lie in [1, {len(data)}], got {k}")
    work = [condense_series(x) for x in data] if distance == "twi" else data
    rng = np.random.default_rng(seed)

    if init_centroids is not None:
        if len(init_centroids) != k:
            raise ValueError("need exactly k initial centroids")
        centroids = [as_series(c) for c in init_centroids]
    else:
        centroids = [work[i].copy() for i in rng.choice(len(work), size=k, replace=False)]
    if distance == "twi":
        centroids = [condense_series(c) for c in centroids]

    assign = None
    history: list[float] = []
    it = 0
    for it in range(1, max_iter + 1):
        new_assign, dmat = _assign(work, centroids, _sq)
        # repair empty clusters with the point farthest from its centroid
        for i in range(k):
            if not np.any(new_assign == i):
                own = dmat[np.arange(len(work)), new_assign]
                sizes = np.bincount(new_assign, minlength=k)
                own[sizes[new_assign] <= 1] = -np.inf
                far = int(np.argmax(own))
                new_assign[far] = i
                centroids[i] = work[far].copy()
        history.append(float(sum(_sq(work[j], centroids[new_assign[j]]) for j in range(len(work)))))
        if assign is not None and np.array_equal(assign, new_assign):
            break
        assign = new_assign
        for i in range(k):
            members = [work[j] for j in np.flatnonzero(assign == i)]
            length = mean_length or int(np.median([m.size for m in members]))
            init = centroids[i] if centroids[i].size == length else None
            res = dba(members, length=length, max_iter=dba_iter, seed=int(rng.integers(2**31)), init=init)
            centroids[i] = condense_series(res.mean) if distance == "twi" else res.mean
    objective = float(sum(_sq(work[j], centroids[assign[j]]) for j in range(len(work))))
    return Clustering(assign, centroids, k, objective, it, history)


def cluster_cohesion(clustering: Clustering, data: Sequence) -> float:
    """Sum over clusters of the Fréchet value of the centroid."""
    data = [as_series(x) for x in data]
    total = 0.0
    for i, c in enumerate(clustering.centroids):
        members = [data[j] for j in clustering.members(i)]
        if members:
            total += frechet(members, c)
    return total


def cluster_separation(mu_a, mu_b) -> float:
    """Squared dtw distance between two centroids."""
    return _sq(as_series(mu_a), as_series(mu_b))


#: Two clusters of three-point series with known means; the second mean
#: stays a mean when its last value is replicated.
EXAMPLE_CLUSTERS = (
    (np.array([-1.0, 0.0, 0.0]), np.array([-1.0, 0.0, 2.0])),
    (np.array([0.0, 2.0, 3.0]), np.array([1.0, 2.0, 3.0])),
)
EXAMPLE_MEAN_1 = np.array([-1.0, 0.0, 1.0])


def replicated_mean(r: int) -> np.ndarray:
    """``(0.5, 2, 3, ..., 3)`` with the 3 repeated ``r`` times."""
    return np.concatenate([[0.5, 2.0], np.full(r, 3.0)])


def separation_growth_demo(r_max: int = 10) -> list[dict]:
    """Cohesion and separation as the second mean's last value is replicated.

    Returns one row per ``r`` in ``1..r_max`` with keys ``r``, ``cohesion``,
    ``separation_dtw`` and ``separation_twi``.
    """
    if r_max < 1:
        raise ValueError("r_max must be at least 1")
    c1, c2 = EXAMPLE_CLUSTERS
    mu1 = EXAMPLE_MEAN_1
    rows = []
    for r in range(1, r_max + 1):
        mu2 = replicated_mean(r)
        rows.append({
            "r": r,
            "cohesion": frechet(c1, mu1) + frechet(c2, mu2),
            "separation_dtw": cluster_separation(mu1, mu2),
            "separation_twi": cluster_separation(condense_series(mu1), condense_series(mu2)),
        })
    return rows
