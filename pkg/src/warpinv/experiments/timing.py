"""Wall-clock comparison of distance computations on random pairs."""

from __future__ import annotations

import time
from typing import Callable, Sequence

import numpy as np

from ..core import LabeledDataset, condense_series
from ..distances import dtw_sq, euclidean, space_saving_ratio, twi
from .io import ExperimentRecord

__all__ = ["DISTANCES", "timing_bench", "summarize_timings"]

DISTANCES: dict[str, Callable] = {
    "euc": euclidean,
    "dtw": dtw_sq,
    "twi": twi,
}


def _time(fn, x, y, reps: int) -> np.ndarray:
    out = np.empty(reps)
    for k in range(reps):
        t0 = time.perf_counter()
        fn(x, y)
        out[k] = time.perf_counter() - t0
    return out * 1e3


def timing_bench(
    data: LabeledDataset,
    methods: Sequence[str] = ("euc", "dtw", "twi"),
    pairs: int = 100,
    reps: int = 100,
    seed: int = 0,
    warmup: int = 1,
) -> list[ExperimentRecord]:
    """Time every method on ``pairs`` random pairs, ``reps`` times each.

    Per pair and method the records hold ``time_mean_ms`` and
    ``time_median_ms``; for methods other than dtw also ``speedup``
    (mean dtw time over mean method time). The pair's space-saving ratio
    is recorded under method ``"pair"`` as ``rho_ss``. Euclidean timings
    are recorded only for equal-length pairs. Pair ``k`` is stored in the
    ``fold`` column.
    """
    unknown = set(methods) - set(DISTANCES)
    if unknown:
        raise ValueError(f"unknown methods {sorted(unknown)}; choose from {sorted(DISTANCES)}")
    if len(data) < 2:
        raise ValueError("need at least two series")
    if pairs < 1 or reps < 1:
        raise ValueError("pairs and reps must be positive")
    rng = np.random.default_rng(seed)
    # warm the compiled kernels so the first pair is not charged for it
    for m in methods:
        for _ in range(warmup):
            DISTANCES[m](data.series[0], data.series[0])
    records = []
    for k in range(pairs):
        i, j = (int(v) for v in rng.choice(len(data), size=2, replace=False))
        x, y = data.series[i], data.series[j]
        means = {}
        for m in methods:
            if m == "euc" and x.size != y.size:
                continue
            t = _time(DISTANCES[m], x, y, reps)
            means[m] = float(t.mean())
            records.append(ExperimentRecord(data.name, m, "time_mean_ms", means[m], k, seed, float(t.sum())))
            records.append(ExperimentRecord(data.name, m, "time_median_ms", float(np.median(t)), k, seed))
        if "dtw" in means:
            for m, v in means.items():
                if m != "dtw" and v > 0:
                    records.append(ExperimentRecord(data.name, m, "speedup", means["dtw"] / v, k, seed))
        rho = space_saving_ratio(x.size, y.size, condense_series(x).size, condense_series(y).size)
        records.append(ExperimentRecord(data.name, "pair", "rho_ss", rho, k, seed))
    return records


def summarize_timings(records: Sequence[ExperimentRecord]) -> dict[str, dict[str, float]]:
    """Median over pairs of each method's mean time and speed-up."""
    out: dict[str, dict[str, float]] = {}
    for metric in ("time_mean_ms", "speedup"):
        by_method: dict[str, list[float]] = {}
        for r in records:
            if r.metric == metric:
                by_method.setdefault(r.method, []).append(r.value)
        for m, vals in by_method.items():
            out.setdefault(m, {})[f"median_{metric}"] = float(np.median(vals))
    return out
