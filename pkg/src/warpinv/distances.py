"""Euclidean, dtw, banded/early-abandoning dtw, the twi-distance and lower bounds.

All dynamic programs accumulate squared costs and take a single square
root at the end. The compiled kernels (prefixed ``_``) work on contiguous
float64 arrays and are shared with :mod:`warpinv.nn`.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numba as nb
import numpy as np

from .core import as_series, condense_series

__all__ = [
    "DtwResult",
    "BandConfig",
    "euclidean",
    "dtw",
    "dtw_sq",
    "dtw_banded",
    "dtw_early_abandon",
    "twi",
    "envelope",
    "lb_keogh",
    "lb_lemire",
    "compression_ratio",
    "speedup_factors",
    "space_saving_ratio",
    "series_space_saving",
]

_jit = nb.njit(cache=True, nogil=True)


# ---------------------------------------------------------------------------
# compiled kernels
# ---------------------------------------------------------------------------


@_jit
def _dtw_sq(x, y, r, thresh2):
    """Squared dtw with optional band ``|i - j| <= r`` (``r < 0``: none).

    Returns ``inf`` as soon as a whole DP row exceeds ``thresh2``.
    """
    m = x.size
    n = y.size
    if r < 0:
        r = max(m, n)
    prev = np.full(n + 1, np.inf)
    cur = np.full(n + 1, np.inf)
    prev[0] = 0.0
    for i in range(1, m + 1):
        jlo = max(1, i - r)
        jhi = min(n, i + r)
        cur[jlo - 1] = np.inf
        xi = x[i - 1]
        rowmin = np.inf
        for j in range(jlo, jhi + 1):
            best = prev[j - 1]
            if prev[j] < best:
                best = prev[j]
            if cur[j - 1] < best:
                best = cur[j - 1]
            d = xi - y[j - 1]
            v = d * d + best
            cur[j] = v
            if v < rowmin:
                rowmin = v
        if rowmin > thresh2:
            return np.inf
        if jhi < n:
            cur[jhi + 1] = np.inf
        prev, cur = cur, prev
    return prev[n]


@_jit
def _dtw_matrix(x, y, r):
    m = x.size
    n = y.size
    if r < 0:
        r = max(m, n)
    D = np.full((m + 1, n + 1), np.inf)
    D[0, 0] = 0.0
    for i in range(1, m + 1):
        for j in range(max(1, i - r), min(n, i + r) + 1):
            best = D[i - 1, j - 1]
            if D[i - 1, j] < best:
                best = D[i - 1, j]
            if D[i, j - 1] < best:
                best = D[i, j - 1]
            d = x[i - 1] - y[j - 1]
            D[i, j] = d * d + best
    return D


@_jit
def _backtrack(D):
    # ties resolved diagonal > up (i - 1) > left (j - 1)
    i = D.shape[0] - 1
    j = D.shape[1] - 1
    out = np.empty((i + j, 2), dtype=np.int64)
    k = 0
    out[k, 0] = i
    out[k, 1] = j
    k += 1
    while i > 1 or j > 1:
        bi = i - 1
        bj = j - 1
        best = D[i - 1, j - 1]
        if D[i - 1, j] < best:
            best = D[i - 1, j]
            bi = i - 1
            bj = j
        if D[i, j - 1] < best:
            bi = i
            bj = j - 1
        i = bi
        j = bj
        out[k, 0] = i
        out[k, 1] = j
        k += 1
    return out[:k][::-1]


@_jit
def _envelope(c, r, upper, lower):
    """Running max/min of ``c`` over windows ``[i - r, i + r]`` (monotone deques)."""
    n = c.size
    qmax = np.empty(n, dtype=np.int64)
    qmin = np.empty(n, dtype=np.int64)
    hmax = 0
    tmax = 0
    hmin = 0
    tmin = 0
    for i in range(n + r):
        if i < n:
            v = c[i]
            while tmax > hmax and c[qmax[tmax - 1]] <= v:
                tmax -= 1
            qmax[tmax] = i
            tmax += 1
            while tmin > hmin and c[qmin[tmin - 1]] >= v:
                tmin -= 1
            qmin[tmin] = i
            tmin += 1
        o = i - r
        if o >= 0:
            while qmax[hmax] < o - r:
                hmax += 1
            while qmin[hmin] < o - r:
                hmin += 1
            upper[o] = c[qmax[hmax]]
            lower[o] = c[qmin[hmin]]


@_jit
def _outside_sq(q, upper, lower):
    s = 0.0
    for i in range(q.size):
        v = q[i]
        if v > upper[i]:
            d = v - upper[i]
            s += d * d
        elif v < lower[i]:
            d = lower[i] - v
            s += d * d
    return s


@_jit
def _lb_keogh_sq(q, c, r):
    n = c.size
    upper = np.empty(n)
    lower = np.empty(n)
    _envelope(c, r, upper, lower)
    return _outside_sq(q, upper, lower)


@_jit
def _lb_improved_sq(q, c, r):
    n = c.size
    upper = np.empty(n)
    lower = np.empty(n)
    _envelope(c, r, upper, lower)
    first = _outside_sq(q, upper, lower)
    # projection of q onto the envelope of c
    h = np.empty(n)
    for i in range(n):
        v = q[i]
        if v > upper[i]:
            v = upper[i]
        elif v < lower[i]:
            v = lower[i]
        h[i] = v
    _envelope(h, r, upper, lower)
    return first + _outside_sq(c, upper, lower)


@_jit
def _band_radius(m, n, fraction, radius):
    # -1 means unconstrained
    if radius >= 0:
        r = radius
    elif fraction >= 0.0:
        r = int(math.ceil(fraction * max(m, n) - 1e-9))
    else:
        return -1
    return max(r, abs(m - n))


# ---------------------------------------------------------------------------
# public API
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class DtwResult:
    """A dtw distance and, if requested, an optimal warping path (1-based points)."""

    distance: float
    path: tuple[tuple[int, int], ...] | None = None

    def __float__(self) -> float:
        return self.distance


@dataclass(frozen=True)
class BandConfig:
    """Sakoe-Chiba band given as a fraction of the longer length or as an absolute radius.

    The effective radius is ``ceil(fraction * max(m, n))`` (or ``radius``),
    widened to ``|m - n|`` so the corner cell stays reachable.
    """

    fraction: float | None = None
    radius: int | None = None

    def __post_init__(self):
        if (self.fraction is None) == (self.radius is None):
            raise ValueError("give exactly one of fraction or radius")
        if self.fraction is not None and not 0.0 <= self.fraction <= 1.0:
            raise ValueError("band fraction must lie in [0, 1]")
        if self.radius is not None and self.radius < 0:
            raise ValueError("band radius must be non-negative")

    def effective_radius(self, m: int, n: int) -> int:
        return int(_band_radius(m, n, *self._kernel_args()))

    def _kernel_args(self) -> tuple[float, int]:
        return (-1.0 if self.fraction is None else float(self.fraction),
                -1 if self.radius is None else int(self.radius))


def euclidean(x, y) -> float:
    x, y = as_series(x, name="x"), as_series(y, name="y")
    if x.size != y.size:
        raise ValueError(f"euclidean needs equal lengths, got {x.size} and {y.size}")
    return float(np.sqrt(np.sum((x - y) ** 2)))


def dtw_sq(x, y) -> float:
    """Squared dtw distance (the minimal path cost)."""
    return float(_dtw_sq(as_series(x, name="x"), as_series(y, name="y"), -1, np.inf))


def dtw(x, y, want_path: bool = False) -> DtwResult:
    """Dynamic time warping distance between two series.

    Parameters
    ----------
    x, y : array_like
        Non-empty series, possibly of different lengths.
    want_path : bool
        Also recover an optimal warping path. This keeps the whole
        ``(m+1) x (n+1)`` cost matrix instead of two rolling rows.

    Examples
    --------
    >>> dtw([0, 1, 1], [0, 2]).distance ** 2
    2.0
    """
    x, y = as_series(x, name="x"), as_series(y, name="y")
    if not want_path:
        return DtwResult(math.sqrt(_dtw_sq(x, y, -1, np.inf)))
    D = _dtw_matrix(x, y, -1)
    return DtwResult(math.sqrt(D[-1, -1]), _path_tuple(_backtrack(D)))


def _path_tuple(arr) -> tuple[tuple[int, int], ...]:
    return tuple((int(i), int(j)) for i, j in arr)


def dtw_banded(x, y, band: BandConfig, want_path: bool = False) -> float | DtwResult:
    """dtw restricted to cells with ``|i - j| <= r``; never below :func:`dtw`.

    Returns a float, or a :class:`DtwResult` when ``want_path`` is set.
    """
    x, y = as_series(x, name="x"), as_series(y, name="y")
    r = band.effective_radius(x.size, y.size)
    if want_path:
        D = _dtw_matrix(x, y, r)
        return DtwResult(math.sqrt(D[-1, -1]), _path_tuple(_backtrack(D)))
    return math.sqrt(_dtw_sq(x, y, r, np.inf))


def dtw_early_abandon(x, y, threshold: float, band: BandConfig | None = None) -> float | None:
    """dtw that gives up once it is certain to exceed ``threshold``.

    Returns ``None`` when some DP row lies entirely above ``threshold**2``
    (so the distance is provably larger than ``threshold``); otherwise the
    exact (possibly banded) distance.
    """
    if threshold < 0:
        raise ValueError("threshold must be non-negative")
    x, y = as_series(x, name="x"), as_series(y, name="y")
    r = -1 if band is None else band.effective_radius(x.size, y.size)
    d2 = _dtw_sq(x, y, r, threshold * threshold)
    if math.isinf(d2):
        return None
    return math.sqrt(d2)


def twi(x, y, atol: float = 0.0) -> float:
    """The time-warp-invariant distance: dtw between the condensed forms.

    >>> twi([0, 1, 1], [0, 2])
    1.0
    """
    cx = condense_series(x, atol)
    cy = condense_series(y, atol)
    return math.sqrt(_dtw_sq(cx, cy, -1, np.inf))


def envelope(c, r: int) -> tuple[np.ndarray, np.ndarray]:
    """Upper and lower envelope of ``c`` over windows of radius ``r``."""
    c = as_series(c)
    if r < 0:
        raise ValueError("radius must be non-negative")
    upper = np.empty_like(c)
    lower = np.empty_like(c)
    _envelope(c, int(r), upper, lower)
    return upper, lower


def _lb_args(query, candidate, r):
    q, c = as_series(query, name="query"), as_series(candidate, name="candidate")
    if q.size != c.size:
        raise ValueError("lower bounds need equal lengths; align the candidate first")
    if r < 0:
        raise ValueError("radius must be non-negative")
    return q, c, int(r)


def lb_keogh(query, candidate, r: int) -> float:
    """LB_Keogh: how far the query leaves the candidate's envelope."""
    return math.sqrt(_lb_keogh_sq(*_lb_args(query, candidate, r)))


def lb_lemire(query, candidate, r: int) -> float:
    """LB_Improved: LB_Keogh plus a second pass against the projected query's envelope."""
    return math.sqrt(_lb_improved_sq(*_lb_args(query, candidate, r)))


def compression_ratio(x, atol: float = 0.0) -> float:
    """``len(x) / len(condense(x))``."""
    x = as_series(x)
    return x.size / condense_series(x, atol).size


def speedup_factors(len_x: int, len_y: int, len_xc: int, len_yc: int) -> tuple[float, float]:
    """Expected speed-up of twi over dtw.

    The first factor counts the linear condensation passes, the second
    assumes the series are stored condensed already.
    """
    cells = len_x * len_y
    return cells / (len_xc * len_yc + len_xc + len_yc), cells / (len_xc * len_yc)


def space_saving_ratio(len_x: int, len_y: int, len_xc: int, len_yc: int) -> float:
    """Pairwise space-saving ratio ``1 - (|x*| + |y*|) / (2 (|x| + |y|))``."""
    return 1.0 - (len_xc + len_yc) / (2.0 * (len_x + len_y))


def series_space_saving(length: int, condensed_length: int) -> float:
    """Fraction of storage saved by keeping only the condensed form."""
    return 1.0 - condensed_length / length
