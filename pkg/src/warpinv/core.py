"""Time-series value handling shared by every other module.

Time series are plain one-dimensional ``float64`` numpy arrays. The helpers
here validate them, normalize them, change their length, and collapse
constant runs to singletons (condensation).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterator, Sequence

import numpy as np

__all__ = [
    "as_series",
    "condense_series",
    "is_irreducible",
    "z_normalize",
    "resample_linear",
    "align_truncate_or_repeat",
    "LabeledDataset",
]

_STD_FLOOR = 1e-12


def as_series(x, *, name: str = "x") -> np.ndarray:
    """Validate ``x`` as a time series and return it as a float64 array.

    Raises
    ------
    ValueError
        If ``x`` is not one-dimensional, is empty, or holds NaN/inf.
    """
    arr = np.asarray(x, dtype=np.float64)
    if arr.ndim == 0:
        arr = arr.reshape(1)
    if arr.ndim != 1:
        raise ValueError(f"{name} must be one-dimensional, got shape {arr.shape}")
    if arr.size == 0:
        raise ValueError(f"{name} must contain at least one value")
    if not np.all(np.isfinite(arr)):
        raise ValueError(f"{name} contains non-finite values")
    return arr


def condense_series(x, atol: float = 0.0) -> np.ndarray:
    """Collapse every run of equal consecutive values to a single value.

    With ``atol == 0`` values are compared for exact equality. With a
    positive tolerance a value joins the current run if it lies within
    ``atol`` of the run's *first* value, so runs cannot drift.

    >>> condense_series([0.0, 1.0, 1.0, 2.0, 2.0, 2.0]).tolist()
    [0.0, 1.0, 2.0]
    """
    x = as_series(x)
    if atol < 0:
        raise ValueError("atol must be non-negative")
    if atol == 0.0:
        keep = np.empty(x.size, dtype=bool)
        keep[0] = True
        np.not_equal(x[1:], x[:-1], out=keep[1:])
        return x[keep]
    out = [x[0]]
    anchor = x[0]
    for v in x[1:]:
        if abs(v - anchor) > atol:
            out.append(v)
            anchor = v
    return np.asarray(out, dtype=np.float64)


def is_irreducible(x, atol: float = 0.0) -> bool:
    """True if ``x`` has no consecutive duplicates (it equals its condensed form)."""
    return condense_series(x, atol).size == np.asarray(x).size


def z_normalize(x) -> np.ndarray:
    """Shift to zero mean and scale to unit population standard deviation.

    Series whose standard deviation is below ``1e-12`` map to all zeros.
    """
    x = as_series(x)
    std = x.std()
    if std < _STD_FLOOR:
        return np.zeros_like(x)
    return (x - x.mean()) / std


def resample_linear(x, target_len: int) -> np.ndarray:
    """Piecewise-linear resampling of ``x`` onto ``target_len`` equispaced points.

    Both endpoints are kept. Input positions and output positions are both
    mapped onto the unit interval before interpolating.
    """
    x = as_series(x)
    if target_len < 2 or x.size < 2:
        raise ValueError("resample_linear needs target_len >= 2 and len(x) >= 2")
    if target_len == x.size:
        return x.copy()
    src = np.linspace(0.0, 1.0, x.size)
    dst = np.linspace(0.0, 1.0, target_len)
    out = np.interp(dst, src, x)
    out[0], out[-1] = x[0], x[-1]
    return out


def align_truncate_or_repeat(x, target_len: int) -> np.ndarray:
    """Cut ``x`` to its first ``target_len`` values or pad by repeating the last one."""
    x = as_series(x)
    if target_len < 1:
        raise ValueError("target_len must be positive")
    if x.size >= target_len:
        return x[:target_len].copy()
    return np.concatenate([x, np.full(target_len - x.size, x[-1])])


@dataclass
class LabeledDataset:
    """A named collection of labeled time series.

    Labels are opaque string tokens. Series may differ in length.
    """

    series: list[np.ndarray]
    labels: list[str]
    name: str = "dataset"
    meta: dict = field(default_factory=dict)

    def __post_init__(self):
        if len(self.series) != len(self.labels):
            raise ValueError("series and labels differ in length")
        if not self.series:
            raise ValueError("a dataset needs at least one series")
        self.series = [as_series(s, name=f"{self.name}[{i}]") for i, s in enumerate(self.series)]
        self.labels = [str(lab) for lab in self.labels]
        if any(lab == "" for lab in self.labels):
            raise ValueError("labels must be non-empty")

    def __len__(self) -> int:
        return len(self.series)

    def __iter__(self) -> Iterator[tuple[np.ndarray, str]]:
        return iter(zip(self.series, self.labels))

    def __getitem__(self, i: int) -> tuple[np.ndarray, str]:
        return self.series[i], self.labels[i]

    @property
    def classes(self) -> list[str]:
        return sorted(set(self.labels))

    @property
    def lengths(self) -> np.ndarray:
        return np.array([s.size for s in self.series])

    def subset(self, indices: Sequence[int], name: str | None = None) -> "LabeledDataset":
        idx = list(indices)
        return LabeledDataset(
            [self.series[i] for i in idx],
            [self.labels[i] for i in idx],
            name=name or self.name,
            meta=dict(self.meta),
        )

    def map(self, fn, name: str | None = None) -> "LabeledDataset":
        """Apply ``fn`` to every series, keeping labels."""
        return LabeledDataset([fn(s) for s in self.series], list(self.labels), name or self.name, dict(self.meta))

    def concat(self, other: "LabeledDataset", name: str | None = None) -> "LabeledDataset":
        return LabeledDataset(
            self.series + other.series, self.labels + other.labels, name or self.name, dict(self.meta)
        )
