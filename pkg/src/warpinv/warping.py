"""Warping paths, warping walks and warping functions.

Grid points are 1-based ``(i, j)`` tuples, so a walk of order ``m x n``
starts at ``(1, 1)`` and ends at ``(m, n)``. A path may only take the steps
(1,0), (0,1), (1,1). A walk may also repeat a point (step (0,0)).

A warping function ``[l] -> [n]`` is surjective and non-decreasing. It
stands in for its 0/1 warping matrix: applying the matrix to a series is
an index gather, and matrix products are function compositions in
reverse order.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Sequence

import numpy as np

from . import words
from .core import as_series

__all__ = [
    "WarpingFunction",
    "validate_path",
    "validate_walk",
    "walk_to_path",
    "walk_from_functions",
    "walk_to_functions",
    "apply_warping",
    "path_expansions",
    "cost_along",
    "enumerate_paths",
    "enumerate_walks",
    "pullback_equalizer",
    "compose_walks",
    "random_warping_function",
]

Point = tuple[int, int]

_PATH_STEPS = ((1, 1), (1, 0), (0, 1))
_WALK_STEPS = ((0, 0), (1, 1), (1, 0), (0, 1))


@dataclass(frozen=True)
class WarpingFunction:
    """A surjective, non-decreasing map ``[len(values)] -> [codomain]``.

    ``values[l - 1]`` is the image of ``l``; images are 1-based.
    """

    values: tuple[int, ...]
    codomain: int

    def __post_init__(self):
        vals = tuple(int(v) for v in self.values)
        object.__setattr__(self, "values", vals)
        if not vals:
            raise ValueError("a warping function needs a non-empty domain")
        if vals[0] != 1 or vals[-1] != self.codomain:
            raise ValueError(f"not surjective onto [{self.codomain}]: {vals}")
        if any(b - a not in (0, 1) for a, b in zip(vals, vals[1:])):
            raise ValueError(f"not a monotone surjection: {vals}")

    @classmethod
    def identity(cls, n: int) -> "WarpingFunction":
        return cls(tuple(range(1, n + 1)), n)

    @classmethod
    def from_multiplicities(cls, multiplicities: Sequence[int]) -> "WarpingFunction":
        """The warping function hitting ``j`` exactly ``multiplicities[j-1]`` times."""
        return cls(words.expand(tuple(range(1, len(multiplicities) + 1)), multiplicities), len(multiplicities))

    def __len__(self) -> int:
        return len(self.values)

    def __call__(self, l: int) -> int:
        return self.values[l - 1]

    def compose(self, inner: "WarpingFunction") -> "WarpingFunction":
        """``self ∘ inner``; requires ``inner`` to map into ``self``'s domain."""
        if inner.codomain != len(self):
            raise ValueError("codomain of inner does not match domain of outer")
        return WarpingFunction(tuple(self.values[v - 1] for v in inner.values), self.codomain)

    def multiplicities(self) -> tuple[int, ...]:
        return tuple(f.count for f in words.prime_factorize(self.values))


def _check_order(order) -> tuple[int, int]:
    m, n = (int(v) for v in order)
    if m < 1 or n < 1:
        raise ValueError(f"invalid order {order}")
    return m, n


def _valid(points: Sequence[Point], order, steps) -> bool:
    m, n = _check_order(order)
    pts = [tuple(p) for p in points]
    if not pts or pts[0] != (1, 1) or pts[-1] != (m, n):
        return False
    if any(not (1 <= i <= m and 1 <= j <= n) for i, j in pts):
        return False
    return all((b[0] - a[0], b[1] - a[1]) in steps for a, b in zip(pts, pts[1:]))


def validate_path(points: Sequence[Point], order) -> bool:
    """Boundary condition plus strict steps (1,0), (0,1), (1,1)."""
    return _valid(points, order, _PATH_STEPS)


def validate_walk(points: Sequence[Point], order) -> bool:
    """Boundary condition plus weak steps in {0,1} x {0,1}."""
    return _valid(points, order, _WALK_STEPS)


def walk_to_path(points: Sequence[Point], order) -> tuple[Point, ...]:
    """Drop repeated consecutive points of a walk, giving a warping path."""
    if not validate_walk(points, order):
        raise ValueError("not a valid warping walk")
    return words.condense(tuple(tuple(p) for p in points))


def walk_from_functions(phi: WarpingFunction, psi: WarpingFunction) -> tuple[Point, ...]:
    """The walk ``l -> (phi(l), psi(l))`` of two warping functions on a shared domain."""
    if len(phi) != len(psi):
        raise ValueError("warping functions of a walk must share their domain")
    return tuple(zip(phi.values, psi.values))


def walk_to_functions(points: Sequence[Point], order) -> tuple[WarpingFunction, WarpingFunction]:
    if not validate_walk(points, order):
        raise ValueError("not a valid warping walk")
    m, n = _check_order(order)
    return (
        WarpingFunction(tuple(p[0] for p in points), m),
        WarpingFunction(tuple(p[1] for p in points), n),
    )


def apply_warping(phi: WarpingFunction, x) -> np.ndarray:
    """``Phi x``: the series ``(x[phi(1)], ..., x[phi(l)])``, an expansion of ``x``."""
    x = as_series(x)
    if phi.codomain != x.size:
        raise ValueError(f"warping function maps into [{phi.codomain}] but len(x) = {x.size}")
    return x[np.asarray(phi.values) - 1]


def _order_matches(points, x, y):
    m, n = max(p[0] for p in points), max(p[1] for p in points)
    if (m, n) != (x.size, y.size) or min(min(p) for p in points) < 1:
        raise ValueError(f"points span a {m}x{n} grid but the series have lengths {x.size}, {y.size}")


def path_expansions(points: Sequence[Point], x, y) -> tuple[np.ndarray, np.ndarray]:
    """The two equal-length expansions a path induces on ``x`` and ``y``."""
    x, y = as_series(x, name="x"), as_series(y, name="y")
    _order_matches(points, x, y)
    idx = np.asarray(points, dtype=np.intp) - 1
    return x[idx[:, 0]], y[idx[:, 1]]


def cost_along(points: Sequence[Point], x, y) -> float:
    """Sum of ``(x_i - y_j)^2`` over all points of a path or walk."""
    ex, ey = path_expansions(points, x, y)
    return float(np.sum((ex - ey) ** 2))


def enumerate_paths(m: int, n: int) -> Iterator[tuple[Point, ...]]:
    """Every warping path of order ``m x n``, depth first, steps tried diagonal first."""
    m, n = _check_order((m, n))
    stack: list[Point] = [(1, 1)]

    def rec():
        i, j = stack[-1]
        if (i, j) == (m, n):
            yield tuple(stack)
            return
        for di, dj in _PATH_STEPS:
            if i + di <= m and j + dj <= n:
                stack.append((i + di, j + dj))
                yield from rec()
                stack.pop()

    yield from rec()


def enumerate_walks(m: int, n: int, max_len: int) -> Iterator[tuple[Point, ...]]:
    """Every warping walk of order ``m x n`` with at most ``max_len`` points."""
    m, n = _check_order((m, n))
    stack: list[Point] = [(1, 1)]

    def rec():
        i, j = stack[-1]
        if (i, j) == (m, n):
            yield tuple(stack)
        # reaching (m, n) takes at least max(m - i, n - j) more points
        if len(stack) >= max_len or len(stack) + max(m - i, n - j) > max_len:
            return
        for di, dj in _WALK_STEPS:
            if i + di <= m and j + dj <= n:
                stack.append((i + di, j + dj))
                yield from rec()
                stack.pop()

    yield from rec()


def pullback_equalizer(
    phi: WarpingFunction, phi_prime: WarpingFunction
) -> tuple[WarpingFunction, WarpingFunction]:
    """Warping functions ``theta``, ``theta'`` with ``phi ∘ theta == phi' ∘ theta'``.

    For each ``i`` in the shared codomain the preimages under ``phi`` and
    ``phi'`` are runs of consecutive indices. The runs are zipped pairwise;
    once the shorter run is exhausted its last index is repeated against the
    remaining indices of the longer run. Concatenating these pairs over
    ``i`` lists them in lexicographic order, and the two coordinate
    sequences are ``theta`` and ``theta'``.
    """
    if phi.codomain != phi_prime.codomain:
        raise ValueError("both warping functions must share their codomain")
    a = phi.multiplicities()
    b = phi_prime.multiplicities()
    left: list[int] = []
    right: list[int] = []
    start_a = start_b = 1
    for ka, kb in zip(a, b):
        for t in range(max(ka, kb)):
            left.append(start_a + min(t, ka - 1))
            right.append(start_b + min(t, kb - 1))
        start_a += ka
        start_b += kb
    return WarpingFunction(tuple(left), len(phi)), WarpingFunction(tuple(right), len(phi_prime))


def compose_walks(
    first: Sequence[Point], first_order, second: Sequence[Point], second_order
) -> tuple[Point, ...]:
    """Chain a walk through ``[m] x [n]`` with a walk through ``[n] x [r]``.

    The shared middle coordinate is equalized with :func:`pullback_equalizer`,
    giving a walk through ``[m] x [r]``. If both input walks have zero cost
    for ``(x, y)`` and ``(y, z)`` the result has zero cost for ``(x, z)``.
    """
    (m, n), (n2, r) = _check_order(first_order), _check_order(second_order)
    if n != n2:
        raise ValueError("inner orders of the two walks differ")
    phi, psi = walk_to_functions(first, (m, n))
    phi2, psi2 = walk_to_functions(second, (n, r))
    theta, theta2 = pullback_equalizer(psi, phi2)
    return walk_from_functions(phi.compose(theta), psi2.compose(theta2))


def random_warping_function(rng: np.random.Generator, codomain: int, max_extra: int = 3) -> WarpingFunction:
    """A warping function onto ``[codomain]`` whose domain exceeds it by at most ``max_extra``."""
    extra = int(rng.integers(0, max_extra + 1))
    mult = np.ones(codomain, dtype=int)
    np.add.at(mult, rng.integers(0, codomain, size=extra), 1)
    return WarpingFunction.from_multiplicities(mult.tolist())
