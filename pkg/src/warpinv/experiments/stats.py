"""Reducibility statistics, correlation coefficients and a Bayesian sign test."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np
from scipy import stats as sps

from ..core import LabeledDataset, condense_series

__all__ = ["ReducibilityStats", "reducibility_stats", "pooled_reducibility", "correlations", "BayesResult", "bayes_sign_test"]


@dataclass(frozen=True)
class ReducibilityStats:
    """Percentages are in ``[0, 100]``.

    ``ratios`` holds the compression ratio ``|x| / |x*|`` of every series.
    """

    p_red: float
    mean_shortening: float
    ratios: np.ndarray
    n_series: int
    n_reducible: int


def _lengths(data) -> tuple[np.ndarray, np.ndarray]:
    series = data.series if isinstance(data, LabeledDataset) else list(data)
    full = np.array([np.asarray(s).size for s in series], dtype=float)
    cond = np.array([condense_series(s).size for s in series], dtype=float)
    return full, cond


def _from_lengths(full: np.ndarray, cond: np.ndarray) -> ReducibilityStats:
    if full.size == 0:
        raise ValueError("no series")
    red = cond < full
    shortening = 100.0 * float(np.mean(1.0 - cond[red] / full[red])) if red.any() else 0.0
    return ReducibilityStats(100.0 * red.mean(), shortening, full / cond, int(full.size), int(red.sum()))


def reducibility_stats(data) -> ReducibilityStats:
    """Share of reducible series and their average relative shortening.

    The shortening ``1 - |x*| / |x|`` is averaged over reducible series only.
    """
    return _from_lengths(*_lengths(data))


def pooled_reducibility(datasets: Iterable) -> ReducibilityStats:
    """Statistics over the union of several datasets (every series weighs the same)."""
    parts = [_lengths(d) for d in datasets]
    if not parts:
        raise ValueError("no datasets")
    return _from_lengths(np.concatenate([p[0] for p in parts]), np.concatenate([p[1] for p in parts]))


def correlations(xs: Sequence[float], ys: Sequence[float]) -> tuple[float, float, float]:
    """Pearson, Spearman and Kendall (tau-b) coefficients."""
    xs, ys = np.asarray(xs, dtype=float), np.asarray(ys, dtype=float)
    if xs.shape != ys.shape or xs.ndim != 1 or xs.size == 0:
        raise ValueError("need two equal-length, non-empty 1-D samples")
    if xs.size < 2:
        raise ValueError("correlations need at least two points")
    return (
        float(sps.pearsonr(xs, ys).statistic),
        float(sps.spearmanr(xs, ys).statistic),
        float(sps.kendalltau(xs, ys, variant="b").statistic),
    )


@dataclass(frozen=True)
class BayesResult:
    """Posterior probabilities that the left method, neither, or the right method is better.

    ``p_left`` covers differences below ``-rope``, ``p_right`` those above.
    """

    p_left: float
    p_rope: float
    p_right: float
    test: str = "bayesian sign test"

    def __post_init__(self):
        total = self.p_left + self.p_rope + self.p_right
        if min(self.p_left, self.p_rope, self.p_right) < 0 or abs(total - 1.0) > 1e-9:
            raise ValueError("posterior probabilities must be non-negative and sum to 1")


def bayes_sign_test(
    diffs: Sequence[float],
    rope: float = 0.005,
    prior_strength: float = 1.0,
    mc_samples: int = 50_000,
    seed: int = 0,
) -> BayesResult:
    """Bayesian sign test with a region of practical equivalence.

    Differences are counted as left (``d < -rope``), rope (``|d| <= rope``)
    or right (``d > rope``). The posterior over the three probabilities is
    ``Dirichlet(n_left, n_rope + prior_strength, n_right)`` and each result
    field is the Monte Carlo share of draws in which that component is the
    largest. Components with zero concentration are identically zero.
    """
    d = np.asarray(diffs, dtype=float)
    if d.ndim != 1 or d.size == 0:
        raise ValueError("diffs must be a non-empty 1-D sequence")
    if not np.isfinite(d).all():
        raise ValueError("diffs must be finite")
    if rope < 0 or prior_strength < 0:
        raise ValueError("rope and prior_strength must be non-negative")
    if mc_samples < 1:
        raise ValueError("mc_samples must be positive")
    alpha = np.array([(d < -rope).sum(), (np.abs(d) <= rope).sum() + prior_strength, (d > rope).sum()], dtype=float)
    rng = np.random.default_rng(seed)
    # gamma(0) draws are exactly 0, which numpy's dirichlet would reject
    draws = rng.gamma(alpha, size=(mc_samples, 3))
    winners = np.bincount(draws.argmax(axis=1), minlength=3) / mc_samples
    return BayesResult(float(winners[0]), float(winners[1]), float(winners[2]))
