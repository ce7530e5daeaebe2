"""One-nearest-neighbor classification with plug-in distances.

Methods
-------
``euc``
    Euclidean distance (equal lengths only).
``dtw`` / ``twi``
    Exhaustive scan with the unconstrained dtw, on raw or condensed series.
``opt-dtw`` / ``opt-twi``
    Sakoe-Chiba band plus a pruning cascade LB_Keogh -> LB_Improved ->
    early-abandoning banded dtw against the best distance so far.

For ``opt-dtw`` every candidate is first aligned to the query's length, so
the cascade returns exactly the neighbor an exhaustive banded scan over
the aligned candidates would return.

For ``opt-twi`` distances are banded dtw between condensed forms of
unequal length. By default (``lb_mode="safe"``) lower bounds are only used
for candidates whose condensed length already equals the query's. With
``lb_mode="resample"`` condensed candidates are linearly resampled to the
query's condensed length just to evaluate the lower bounds. That can prune
a true neighbor, so it is a speed heuristic.
"""

from __future__ import annotations

import math
import warnings
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Sequence

import numba as nb
import numpy as np

from .core import LabeledDataset, align_truncate_or_repeat, as_series, condense_series, resample_linear
from .distances import BandConfig, _band_radius, _dtw_sq, _lb_improved_sq, _lb_keogh_sq

__all__ = ["METHODS", "NnConfig", "Prediction", "CVResult", "classify_1nn", "classify_many", "cross_validate", "error_rate"]

METHODS = ("euc", "dtw", "twi", "opt-dtw", "opt-twi")


@dataclass(frozen=True)
class NnConfig:
    """How the nearest-neighbor search measures and prunes.

    ``alignment`` chooses how candidates are brought to the query length
    for the opt variants. ``opt_order`` decides, for ``opt-twi``, whether
    raw candidates are condensed before (``"condense_first"``) or after
    (``"align_first"``) alignment.
    """

    distance: str = "dtw"
    band: BandConfig | None = None
    alignment: str = "truncate_or_repeat"
    lb_mode: str = "safe"
    opt_order: str = "condense_first"
    seed: int = 0

    def __post_init__(self):
        if self.distance not in METHODS:
            raise ValueError(f"unknown distance {self.distance!r}; choose from {METHODS}")
        if self.distance.startswith("opt-") and self.band is None:
            object.__setattr__(self, "band", BandConfig(fraction=0.1))
        if self.alignment not in ("truncate_or_repeat", "linear_resample"):
            raise ValueError(f"unknown alignment {self.alignment!r}")
        if self.lb_mode not in ("safe", "resample"):
            raise ValueError(f"unknown lb_mode {self.lb_mode!r}")
        if self.opt_order not in ("condense_first", "align_first"):
            raise ValueError(f"unknown opt_order {self.opt_order!r}")


@dataclass(frozen=True)
class Prediction:
    label: str
    neighbor_index: int
    distance_value: float
    pruned_count: int = 0


@dataclass
class CVResult:
    accuracies: list[float]
    folds: list[np.ndarray] = field(repr=False, default_factory=list)

    @property
    def mean(self) -> float:
        return float(np.mean(self.accuracies))


# ---------------------------------------------------------------------------
# compiled scans
# ---------------------------------------------------------------------------


@nb.njit(cache=True, nogil=True)
def _scan_exhaustive(q, buf, off, r):
    best = np.inf
    best_i = -1
    for k in range(off.size - 1):
        d = _dtw_sq(q, buf[off[k]:off[k + 1]], r, np.inf)
        if d < best:
            best = d
            best_i = k
    return best_i, best


@nb.njit(cache=True, nogil=True)
def _scan_cascade(q, buf, off, lbbuf, lboff, fraction, radius):
    """Pruned scan; ``lbbuf`` holds the series used for lower bounds (empty slice: skip)."""
    best = np.inf
    best_i = -1
    pruned = 0
    m = q.size
    for k in range(off.size - 1):
        c = buf[off[k]:off[k + 1]]
        r = _band_radius(m, c.size, fraction, radius)
        lb_c = lbbuf[lboff[k]:lboff[k + 1]]
        if lb_c.size == m and best < np.inf:
            lr = _band_radius(m, m, fraction, radius)
            if _lb_keogh_sq(q, lb_c, lr) > best:
                pruned += 1
                continue
            if _lb_improved_sq(q, lb_c, lr) > best:
                pruned += 1
                continue
        d = _dtw_sq(q, c, r, best)
        if d == np.inf:
            pruned += 1
            continue
        if d < best:
            best = d
            best_i = k
    return best_i, best, pruned


def _pack(series: Sequence[np.ndarray]) -> tuple[np.ndarray, np.ndarray]:
    off = np.zeros(len(series) + 1, dtype=np.int64)
    off[1:] = np.cumsum([s.size for s in series])
    buf = np.concatenate(series) if series else np.empty(0)
    return np.ascontiguousarray(buf, dtype=np.float64), off


# ---------------------------------------------------------------------------
# classifier
# ---------------------------------------------------------------------------


class _Index:
    """Training data preprocessed once for a given configuration."""

    def __init__(self, train: LabeledDataset, cfg: NnConfig):
        if len(train) == 0:
            raise ValueError("training set is empty")
        self.cfg = cfg
        self.labels = list(train.labels)
        self.raw = list(train.series)
        self.condensed = [condense_series(s) for s in self.raw] if "twi" in cfg.distance else None
        if cfg.distance in ("dtw", "twi"):
            src = self.condensed if cfg.distance == "twi" else self.raw
            self.buf, self.off = _pack(src)

    def _align(self, s: np.ndarray, length: int) -> np.ndarray:
        if self.cfg.alignment == "linear_resample" and s.size >= 2 and length >= 2:
            return resample_linear(s, length)
        return align_truncate_or_repeat(s, length)

    def query(self, q) -> Prediction:
        cfg = self.cfg
        q = as_series(q, name="query")
        if cfg.distance == "euc":
            best, best_i = math.inf, -1
            for k, s in enumerate(self.raw):
                if s.size != q.size:
                    raise ValueError("euc needs training and query series of equal length")
                d = float(np.sum((s - q) ** 2))
                if d < best:
                    best, best_i = d, k
            return Prediction(self.labels[best_i], best_i, math.sqrt(best))
        if cfg.distance in ("dtw", "twi"):
            qq = condense_series(q) if cfg.distance == "twi" else q
            k, d2 = _scan_exhaustive(qq, self.buf, self.off, -1)
            return Prediction(self.labels[k], int(k), math.sqrt(d2))
        fraction, radius = cfg.band._kernel_args()
        if cfg.distance == "opt-dtw":
            cands = [self._align(s, q.size) for s in self.raw]
            lbs = cands
        else:
            if cfg.opt_order == "align_first":
                cands = [condense_series(self._align(s, q.size)) for s in self.raw]
            else:
                cands = self.condensed
            q = condense_series(q)
            if cfg.lb_mode == "resample":
                lbs = [self._align(c, q.size) if c.size != q.size else c for c in cands]
            else:
                lbs = [c if c.size == q.size else c[:0] for c in cands]
        buf, off = _pack(cands)
        lbbuf, lboff = _pack(lbs)
        k, d2, pruned = _scan_cascade(q, buf, off, lbbuf, lboff, fraction, radius)
        return Prediction(self.labels[k], int(k), math.sqrt(d2), int(pruned))


def classify_1nn(train: LabeledDataset, query, cfg: NnConfig = NnConfig()) -> Prediction:
    """Label of the training series closest to ``query``; ties go to the lowest index."""
    return _Index(train, cfg).query(query)


def classify_many(
    train: LabeledDataset, queries: Sequence, cfg: NnConfig = NnConfig(), n_jobs: int = 1
) -> list[Prediction]:
    """Classify several queries, optionally on a thread pool (kernels release the GIL)."""
    index = _Index(train, cfg)
    if n_jobs == 1:
        return [index.query(q) for q in queries]
    with ThreadPoolExecutor(max_workers=n_jobs) as pool:
        return list(pool.map(index.query, queries))


def error_rate(predictions: Sequence, truths: Sequence) -> float:
    """Fraction of predictions (labels or :class:`Prediction` objects) that miss."""
    if len(predictions) != len(truths):
        raise ValueError("predictions and truths differ in length")
    if not truths:
        raise ValueError("nothing to score")
    labels = [p.label if isinstance(p, Prediction) else p for p in predictions]
    return sum(str(p) != str(t) for p, t in zip(labels, truths)) / len(truths)


def stratified_folds(labels: Sequence[str], folds: int, seed: int) -> list[np.ndarray]:
    """Seeded fold assignment that spreads every class evenly over the folds.

    Falls back to a plain shuffled split (with a warning) when some class has
    fewer members than there are folds.
    """
    n = len(labels)
    if folds < 2:
        raise ValueError("need at least two folds")
    if folds > n:
        raise ValueError(f"{folds} folds requested for {n} series")
    rng = np.random.default_rng(seed)
    labels = np.asarray([str(lab) for lab in labels])
    classes, counts = np.unique(labels, return_counts=True)
    assign = np.empty(n, dtype=np.int64)
    if counts.min() < folds:
        warnings.warn("a class has fewer members than folds; using unstratified folds", stacklevel=2)
        perm = rng.permutation(n)
        assign[perm] = np.arange(n) % folds
    else:
        start = 0
        for cls in classes:
            members = rng.permutation(np.flatnonzero(labels == cls))
            assign[members] = (start + np.arange(members.size)) % folds
            start = (start + members.size) % folds
    return [np.flatnonzero(assign == f) for f in range(folds)]


def cross_validate(data: LabeledDataset, folds: int = 10, cfg: NnConfig = NnConfig()) -> CVResult:
    """k-fold cross-validated 1-NN accuracy, folds in order."""
    parts = stratified_folds(data.labels, folds, cfg.seed)
    accs = []
    for test_idx in parts:
        mask = np.ones(len(data), dtype=bool)
        mask[test_idx] = False
        train = data.subset(np.flatnonzero(mask))
        preds = classify_many(train, [data.series[i] for i in test_idx], cfg)
        accs.append(1.0 - error_rate(preds, [data.labels[i] for i in test_idx]))
    return CVResult(accs, parts)
