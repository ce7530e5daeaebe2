import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

import oracles
from warpinv.distances import dtw, dtw_sq
from warpinv.warping import (
    WarpingFunction,
    apply_warping,
    compose_walks,
    cost_along,
    enumerate_paths,
    enumerate_walks,
    path_expansions,
    pullback_equalizer,
    random_warping_function,
    validate_path,
    validate_walk,
    walk_from_functions,
    walk_to_functions,
    walk_to_path,
)

multiplicities = st.lists(st.integers(1, 3), min_size=1, max_size=6)


class TestWarpingFunction:
    def test_valid(self):
        phi = WarpingFunction((1, 1, 2, 3), 3)
        assert len(phi) == 4 and phi(3) == 2
        assert phi.multiplicities() == (2, 1, 1)

    @pytest.mark.parametrize("values,n", [((2, 3), 3), ((1, 3), 3), ((1, 2, 1), 2), ((1, 2), 3), ((), 0)])
    def test_invalid(self, values, n):
        with pytest.raises(ValueError):
            WarpingFunction(values, n)

    @given(multiplicities)
    def test_from_multiplicities_roundtrip(self, mult):
        assert WarpingFunction.from_multiplicities(mult).multiplicities() == tuple(mult)

    def test_compose(self):
        outer = WarpingFunction((1, 1, 2), 2)
        inner = WarpingFunction((1, 2, 2, 3), 3)
        assert outer.compose(inner).values == (1, 1, 1, 2)
        with pytest.raises(ValueError):
            inner.compose(outer)

    def test_apply_is_expansion(self):
        phi = WarpingFunction((1, 2, 2, 3), 3)
        assert apply_warping(phi, [5, 6, 7]).tolist() == [5, 6, 6, 7]
        with pytest.raises(ValueError):
            apply_warping(phi, [1, 2])

    @given(multiplicities, st.data())
    def test_composition_matches_gather(self, mult, data):
        # applying inner after outer equals applying the composition
        outer = WarpingFunction.from_multiplicities(mult)
        inner_mult = data.draw(st.lists(st.integers(1, 2), min_size=len(outer), max_size=len(outer)))
        inner = WarpingFunction.from_multiplicities(inner_mult)
        x = np.arange(1.0, outer.codomain + 1)
        assert np.array_equal(apply_warping(outer.compose(inner), x), apply_warping(inner, apply_warping(outer, x)))


class TestPathsAndWalks:
    def test_validate(self):
        assert validate_path([(1, 1), (2, 2), (2, 3)], (2, 3))
        assert not validate_path([(1, 1), (1, 1), (2, 2)], (2, 2))
        assert validate_walk([(1, 1), (1, 1), (2, 2)], (2, 2))
        assert not validate_walk([(1, 1), (3, 2)], (3, 2))
        assert not validate_path([(1, 2), (2, 2)], (2, 2))

    @pytest.mark.parametrize("m,n", [(1, 1), (2, 3), (3, 3), (4, 5)])
    def test_path_count_matches_delannoy(self, m, n):
        paths = list(enumerate_paths(m, n))
        assert len(paths) == len(set(paths)) == oracles.count_paths(m, n)
        assert all(validate_path(p, (m, n)) for p in paths)

    def test_paths_match_oracle(self):
        assert set(enumerate_paths(3, 4)) == set(oracles.all_paths(3, 4))

    def test_walks(self):
        walks = list(enumerate_walks(2, 2, 3))
        assert ((1, 1), (2, 2)) in walks
        assert ((1, 1), (1, 1), (2, 2)) in walks
        assert ((1, 1), (2, 2), (2, 2)) in walks
        assert all(len(w) <= 3 and validate_walk(w, (2, 2)) for w in walks)
        assert len(walks) == len(set(walks))
        paths = {walk_to_path(w, (2, 2)) for w in walks}
        assert paths == set(enumerate_paths(2, 2))

    def test_walk_functions_roundtrip(self):
        walk = ((1, 1), (1, 2), (2, 2), (2, 2), (3, 3))
        phi, psi = walk_to_functions(walk, (3, 3))
        assert walk_from_functions(phi, psi) == walk
        with pytest.raises(ValueError):
            walk_to_functions(((1, 1), (3, 3)), (3, 3))

    def test_walk_to_path(self):
        assert walk_to_path(((1, 1), (1, 1), (2, 1)), (2, 1)) == ((1, 1), (2, 1))

    def test_expansions_and_cost(self):
        p = ((1, 1), (2, 1), (3, 2))
        ex, ey = path_expansions(p, [0, 1, 1], [0, 2])
        assert ex.tolist() == [0, 1, 1] and ey.tolist() == [0, 0, 2]
        assert cost_along(p, [0, 1, 1], [0, 2]) == 2.0
        with pytest.raises(ValueError):
            cost_along(p, [0, 1], [0, 2])

    def test_walks_never_beat_paths(self, rng):
        # repeating points only adds cost, so the walk minimum is the dtw
        for _ in range(20):
            x, y = rng.normal(size=3), rng.normal(size=2)
            best = min(cost_along(w, x, y) for w in enumerate_walks(3, 2, 6))
            assert abs(best - dtw_sq(x, y)) < 1e-12


class TestPullback:
    def test_constant_maps(self):
        theta, theta2 = pullback_equalizer(WarpingFunction((1, 1), 1), WarpingFunction((1, 1, 1), 1))
        assert theta.values == (1, 2, 2) and theta2.values == (1, 2, 3)

    def test_codomain_mismatch(self):
        with pytest.raises(ValueError):
            pullback_equalizer(WarpingFunction((1,), 1), WarpingFunction((1, 2), 2))

    @given(st.integers(0, 2**32 - 1))
    def test_equalizes(self, seed):
        rng = np.random.default_rng(seed)
        n = int(rng.integers(1, 6))
        phi, phi2 = random_warping_function(rng, n), random_warping_function(rng, n)
        theta, theta2 = pullback_equalizer(phi, phi2)
        assert phi.compose(theta) == phi2.compose(theta2)
        assert len(theta) >= max(len(phi), len(phi2))

    def test_compose_walks_is_walk(self, rng):
        for _ in range(50):
            x, y, z = (rng.integers(0, 3, size=int(rng.integers(1, 5))).astype(float) for _ in range(3))
            p1 = dtw(x, y, want_path=True).path
            p2 = dtw(y, z, want_path=True).path
            w = compose_walks(p1, (x.size, y.size), p2, (y.size, z.size))
            assert validate_walk(w, (x.size, z.size))
