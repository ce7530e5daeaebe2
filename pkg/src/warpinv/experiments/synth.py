"""Synthetic two-class "cylinder on a plateau" data.

Every series is a constant base level ``b_y`` with one block ("cylinder")
of height ``c_y`` at a random position. Uniform noise ``U[0, theta]`` is
added to base and cylinder values. Depending on which of the two levels
differs between classes, warping-invariance helps or hurts.
"""

from __future__ import annotations

from dataclasses import dataclass, replace

import numpy as np

from ..core import LabeledDataset, z_normalize

__all__ = ["SynthConfig", "CYLINDER_ROWS", "REPORTED_ERRORS", "generate_synthetic", "balanced_split"]

CLASSES = ("+1", "-1")


@dataclass(frozen=True)
class SynthConfig:
    """Parameters of the generator.

    ``noise_per`` selects whether noise is drawn once per element (default)
    or once per segment of each series; the latter keeps plateaus exactly
    constant and is offered for comparison only.
    """

    n_series: int = 200
    series_len: int = 100
    cylinder_len: int = 10
    b_plus: float = 0.0
    b_minus: float = 0.0
    theta_b: float = 0.0
    c_plus: float = 1.0
    c_minus: float = 1.0
    theta_c: float = 0.0
    z_transform: bool = False
    seed: int = 0
    noise_per: str = "element"

    def __post_init__(self):
        if self.n_series < 2 or self.n_series % 2:
            raise ValueError("n_series must be a positive even number")
        if not 1 <= self.cylinder_len <= self.series_len:
            raise ValueError("need 1 <= cylinder_len <= series_len")
        if self.theta_b < 0 or self.theta_c < 0:
            raise ValueError("noise bounds must be non-negative")
        if self.noise_per not in ("element", "series"):
            raise ValueError("noise_per must be 'element' or 'series'")

    def with_seed(self, seed: int) -> "SynthConfig":
        return replace(self, seed=int(seed))


#: The five benchmark configurations E1 to E5.
CYLINDER_ROWS: dict[str, SynthConfig] = {
    "E1": SynthConfig(b_plus=0.0, b_minus=-0.05, theta_b=0.0, c_plus=1.0, c_minus=1.0, theta_c=1.0),
    "E2": SynthConfig(b_plus=0.0, b_minus=-0.05, theta_b=0.0, c_plus=1.0, c_minus=1.0, theta_c=0.1),
    "E3": SynthConfig(b_plus=0.0, b_minus=0.0, theta_b=1.0, c_plus=1.0, c_minus=1.05, theta_c=1.0),
    "E4": SynthConfig(b_plus=0.0, b_minus=0.0, theta_b=0.1, c_plus=1.0, c_minus=1.05, theta_c=1.0),
    "E5": SynthConfig(b_plus=0.0, b_minus=-0.05, theta_b=0.0, c_plus=1.0, c_minus=1.0, theta_c=1.0, z_transform=True),
}

#: Reference error rates in percent (euc, dtw, twi).
REPORTED_ERRORS: dict[str, dict[str, float]] = {
    "E1": {"euc": 50, "dtw": 0, "twi": 37},
    "E2": {"euc": 35, "dtw": 0, "twi": 0},
    "E3": {"euc": 50, "dtw": 31, "twi": 0},
    "E4": {"euc": 49, "dtw": 0, "twi": 0},
    "E5": {"euc": 51, "dtw": 45, "twi": 45},
}


def generate_synthetic(cfg: SynthConfig) -> LabeledDataset:
    """Draw ``n_series`` series, the first half of class ``+1``, the rest ``-1``."""
    rng = np.random.default_rng(cfg.seed)
    L, w = cfg.series_len, cfg.cylinder_len
    half = cfg.n_series // 2
    series, labels = [], []
    for k in range(cfg.n_series):
        plus = k < half
        b = cfg.b_plus if plus else cfg.b_minus
        c = cfg.c_plus if plus else cfg.c_minus
        start = int(rng.integers(0, L - w + 1))
        if cfg.noise_per == "element":
            x = b + rng.uniform(0.0, cfg.theta_b, L)
            x[start:start + w] = c + rng.uniform(0.0, cfg.theta_c, w)
        else:
            x = np.full(L, b + rng.uniform(0.0, cfg.theta_b))
            x[start:start + w] = c + rng.uniform(0.0, cfg.theta_c)
        if cfg.z_transform:
            x = z_normalize(x)
        series.append(x)
        labels.append(CLASSES[0] if plus else CLASSES[1])
    return LabeledDataset(series, labels, name="synthetic", meta={"config": cfg})


def balanced_split(data: LabeledDataset, rng: np.random.Generator) -> tuple[LabeledDataset, LabeledDataset]:
    """Random half/half split that keeps every class balanced between the parts."""
    labels = np.asarray(data.labels)
    train, test = [], []
    for cls in data.classes:
        idx = rng.permutation(np.flatnonzero(labels == cls))
        cut = idx.size // 2
        train.extend(idx[:cut].tolist())
        test.extend(idx[cut:].tolist())
    return data.subset(sorted(train)), data.subset(sorted(test))
