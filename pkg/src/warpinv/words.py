"""Words over an arbitrary alphabet: prime factorization, condensation, expansions.

A word is any finite sequence. Symbols only need an equality predicate,
which defaults to ``==`` and can be replaced (for example by a tolerance
comparison on floats). Runs are always compared against their first
symbol, so a tolerance predicate cannot chain across a slowly drifting run.

The same functions serve time series (alphabet: reals) and warping walks
(alphabet: grid points).
"""

from __future__ import annotations

import itertools
import operator
from typing import Any, Callable, Iterator, NamedTuple, Sequence

__all__ = [
    "Factor",
    "prime_factorize",
    "from_factorization",
    "condense",
    "is_irreducible",
    "is_expansion",
    "expand",
    "enumerate_expansions",
    "enumerate_compressions",
    "common_compression",
]

Eq = Callable[[Any, Any], bool]


class Factor(NamedTuple):
    """A maximal run ``symbol^count`` inside a word."""

    symbol: Any
    count: int


def prime_factorize(word: Sequence, eq: Eq = operator.eq) -> list[Factor]:
    """Split ``word`` into maximal runs of equal symbols.

    >>> prime_factorize((5, 5, 7))
    [Factor(symbol=5, count=2), Factor(symbol=7, count=1)]
    >>> prime_factorize(())
    []
    """
    factors: list[Factor] = []
    for a in word:
        if factors and eq(factors[-1].symbol, a):
            factors[-1] = Factor(factors[-1].symbol, factors[-1].count + 1)
        else:
            factors.append(Factor(a, 1))
    return factors


def from_factorization(factors: Sequence[Factor]) -> tuple:
    """Concatenate ``symbol^count`` over all factors."""
    return tuple(itertools.chain.from_iterable(itertools.repeat(f.symbol, f.count) for f in factors))


def condense(word: Sequence, eq: Eq = operator.eq) -> tuple:
    """The condensed form: every maximal run collapsed to one symbol."""
    return tuple(f.symbol for f in prime_factorize(word, eq))


def is_irreducible(word: Sequence, eq: Eq = operator.eq) -> bool:
    return len(prime_factorize(word, eq)) == len(word)


def is_expansion(x: Sequence, y: Sequence, eq: Eq = operator.eq) -> bool:
    """True if ``x`` arises from ``y`` by replicating some of its elements.

    Equivalently the prime factorizations have the same length, the same
    symbols, and every run of ``x`` is at least as long as the matching run
    of ``y``.
    """
    px, py = prime_factorize(x, eq), prime_factorize(y, eq)
    if len(px) != len(py):
        return False
    return all(eq(p.symbol, q.symbol) and p.count >= q.count for p, q in zip(px, py))


def expand(y: Sequence, multiplicities: Sequence[int]) -> tuple:
    """Replicate ``y[i]`` exactly ``multiplicities[i]`` times."""
    if len(multiplicities) != len(y):
        raise ValueError(f"need {len(y)} multiplicities, got {len(multiplicities)}")
    if any(int(a) < 1 for a in multiplicities):
        raise ValueError("multiplicities must be positive integers")
    return tuple(itertools.chain.from_iterable(itertools.repeat(s, int(a)) for s, a in zip(y, multiplicities)))


def _compositions(total: int, parts: int) -> Iterator[tuple[int, ...]]:
    # positive compositions of ``total`` into ``parts`` slots, lexicographic
    if parts == 0:
        if total == 0:
            yield ()
        return
    if parts == 1:
        yield (total,)
        return
    for first in range(1, total - parts + 2):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


def _multiplicity_vectors(parts: int, max_total: int) -> list[tuple[int, ...]]:
    vecs = [c for total in range(parts, max_total + 1) for c in _compositions(total, parts)]
    vecs.sort()
    return vecs


def enumerate_expansions(y: Sequence, max_len: int) -> Iterator[tuple]:
    """Yield every word ``expand(y, a)`` with length at most ``max_len``.

    Multiplicity vectors ``a`` are visited in lexicographic order. Distinct
    vectors can give the same word when ``y`` itself has runs, so repeated
    words are dropped and each word is yielded exactly once.
    """
    if max_len < len(y):
        return
    if len(y) == 0:
        yield ()
        return
    seen = set()
    for alphas in _multiplicity_vectors(len(y), max_len):
        w = expand(y, alphas)
        if w in seen:
            continue
        seen.add(w)
        yield w


def enumerate_compressions(x: Sequence, eq: Eq = operator.eq) -> Iterator[tuple]:
    """Yield every compression of ``x``: each run shortened to any length >= 1."""
    factors = prime_factorize(x, eq)
    for counts in itertools.product(*(range(1, f.count + 1) for f in factors)):
        yield from_factorization([Factor(f.symbol, c) for f, c in zip(factors, counts)])


def common_compression(x: Sequence, y: Sequence, eq: Eq = operator.eq) -> tuple | None:
    """The shortest common compression of ``x`` and ``y``, or ``None``.

    A common compression exists exactly when both words share a condensed
    form, and that condensed form is then the shortest one.
    """
    cx, cy = condense(x, eq), condense(y, eq)
    if len(cx) != len(cy) or not all(eq(a, b) for a, b in zip(cx, cy)):
        return None
    return cx
