"""The experiment drivers: synthetic error rates, cross-validation, fixed splits.

All randomness is derived from a master seed with
:class:`numpy.random.SeedSequence`, one child per task, so results do not
depend on how tasks are scheduled.
"""

from __future__ import annotations

import time
from concurrent.futures import ThreadPoolExecutor
from typing import Sequence

import numpy as np

from ..core import LabeledDataset
from ..distances import BandConfig
from ..nn import NnConfig, classify_many, error_rate, stratified_folds
from .io import ExperimentRecord
from .synth import CYLINDER_ROWS, SynthConfig, balanced_split, generate_synthetic

__all__ = ["run_synth_study", "synth_summary", "run_cv_study", "run_split_study", "child_seeds"]


def child_seeds(seed: int, n: int) -> list[int]:
    """``n`` independent 63-bit seeds derived from ``seed``."""
    return [int(s.generate_state(1, dtype=np.uint64)[0] >> np.uint64(1)) for s in np.random.SeedSequence(seed).spawn(n)]


def _map(fn, tasks, n_jobs: int):
    if n_jobs == 1:
        return [fn(t) for t in tasks]
    with ThreadPoolExecutor(max_workers=n_jobs) as pool:
        return list(pool.map(fn, tasks))


def _nn_cfg(method: str, band: BandConfig | None, seed: int = 0) -> NnConfig:
    if method.startswith("opt-"):
        return NnConfig(method, band=band or BandConfig(fraction=0.1), seed=seed)
    return NnConfig(method, seed=seed)


def run_synth_study(
    rows: Sequence[str] | None = None,
    repeats: int = 50,
    seed: int = 0,
    configs: dict[str, SynthConfig] | None = None,
    methods: Sequence[str] = ("euc", "dtw", "twi"),
    n_jobs: int = 1,
) -> list[ExperimentRecord]:
    """Generate, split half/half, classify with 1-NN, repeat.

    One ``error`` record (a fraction) per row, method and repeat. The seed
    of repeat ``k`` of a row is stored with the record and regenerates
    that repeat exactly.
    """
    configs = configs or CYLINDER_ROWS
    rows = list(rows or configs)
    unknown = [r for r in rows if r not in configs]
    if unknown:
        raise ValueError(f"unknown rows {unknown}; choose from {sorted(configs)}")
    if repeats < 1:
        raise ValueError("repeats must be positive")
    row_seeds = dict(zip(rows, child_seeds(seed, len(rows))))
    tasks = [(row, k, s) for row in rows for k, s in enumerate(child_seeds(row_seeds[row], repeats))]

    def one(task):
        row, k, s = task
        data = generate_synthetic(configs[row].with_seed(s))
        train, test = balanced_split(data, np.random.default_rng(s))
        out = []
        for m in methods:
            t0 = time.perf_counter()
            preds = classify_many(train, test.series, NnConfig(m))
            ms = (time.perf_counter() - t0) * 1e3
            out.append(ExperimentRecord(row, m, "error", error_rate(preds, test.labels), k, s, ms))
        return out

    return [r for rs in _map(one, tasks, n_jobs) for r in rs]


def synth_summary(records: Sequence[ExperimentRecord]) -> dict[str, dict[str, float]]:
    """Mean error in percent per row and method."""
    acc: dict[str, dict[str, list[float]]] = {}
    for r in records:
        if r.metric == "error":
            acc.setdefault(r.dataset, {}).setdefault(r.method, []).append(r.value)
    return {row: {m: 100.0 * float(np.mean(v)) for m, v in ms.items()} for row, ms in acc.items()}


def run_cv_study(
    datasets: Sequence[LabeledDataset],
    methods: Sequence[str] = ("dtw", "twi"),
    folds: int = 10,
    seed: int = 0,
    band: BandConfig | None = None,
    n_jobs: int = 1,
) -> list[ExperimentRecord]:
    """k-fold cross-validated 1-NN accuracy for every dataset and method.

    Fold assignment depends on the dataset's derived seed only, so all
    methods see the same folds. One ``accuracy`` record per dataset,
    method and fold.
    """
    if not datasets:
        raise ValueError("no datasets")
    cfgs = {m: _nn_cfg(m, band) for m in methods}
    tasks = []
    for data, s in zip(datasets, child_seeds(seed, len(datasets))):
        parts = stratified_folds(data.labels, folds, s)
        for m in methods:
            for f, test_idx in enumerate(parts):
                tasks.append((data, m, f, test_idx, s))

    def one(task):
        data, m, f, test_idx, s = task
        mask = np.ones(len(data), dtype=bool)
        mask[test_idx] = False
        train = data.subset(np.flatnonzero(mask))
        t0 = time.perf_counter()
        preds = classify_many(train, [data.series[i] for i in test_idx], cfgs[m])
        ms = (time.perf_counter() - t0) * 1e3
        acc = 1.0 - error_rate(preds, [data.labels[i] for i in test_idx])
        return ExperimentRecord(data.name, m, "accuracy", acc, f, s, ms)

    return _map(one, tasks, n_jobs)


def run_split_study(
    train: LabeledDataset,
    test: LabeledDataset,
    methods: Sequence[str] = ("dtw", "twi", "opt-dtw", "opt-twi"),
    band: BandConfig | None = None,
    n_jobs: int = 1,
) -> list[ExperimentRecord]:
    """1-NN error rate and total classification time on a fixed split."""
    records = []
    for m in methods:
        t0 = time.perf_counter()
        preds = classify_many(train, test.series, _nn_cfg(m, band), n_jobs=n_jobs)
        ms = (time.perf_counter() - t0) * 1e3
        records.append(ExperimentRecord(train.name, m, "error", error_rate(preds, test.labels), wall_ms=ms))
        records.append(ExperimentRecord(train.name, m, "pruned", float(sum(p.pruned_count for p in preds))))
    return records
