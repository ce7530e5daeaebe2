import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

import oracles
from warpinv.distances import (
    BandConfig,
    compression_ratio,
    dtw,
    dtw_banded,
    dtw_early_abandon,
    dtw_sq,
    envelope,
    euclidean,
    lb_keogh,
    lb_lemire,
    series_space_saving,
    space_saving_ratio,
    speedup_factors,
    twi,
)
from warpinv.warping import cost_along, validate_path

series = st.lists(st.floats(-10, 10, allow_nan=False), min_size=1, max_size=8)
int_series = st.lists(st.integers(0, 2), min_size=1, max_size=8)


class TestDtw:
    def test_worked_values(self):
        assert dtw([0, 1], [0, 2]).distance == 1.0
        assert dtw([0, 1, 1], [0, 2]).distance == math.sqrt(2)
        assert dtw([0, 1], [0, 1, 1]).distance == 0.0
        assert float(dtw([1, 2], [1, 2])) == 0.0

    def test_path_tie_priority(self):
        assert dtw([0, 1, 1], [0, 2], want_path=True).path == ((1, 1), (2, 1), (3, 2))
        assert dtw([0, 0], [0, 0], want_path=True).path == ((1, 1), (2, 2))

    def test_single_points(self):
        assert dtw([3.0], [1.0, 1.0]).distance == math.sqrt(8)

    @given(series, series)
    def test_matches_recursion(self, x, y):
        assert abs(dtw_sq(x, y) - oracles.dtw_sq_recursive(x, y)) <= 1e-9 * (1 + dtw_sq(x, y))

    @given(series, series)
    def test_path_is_optimal(self, x, y):
        res = dtw(x, y, want_path=True)
        assert validate_path(res.path, (len(x), len(y)))
        assert abs(math.sqrt(cost_along(res.path, x, y)) - res.distance) <= 1e-9 * (1 + res.distance)

    @given(series, series)
    def test_symmetric_nonnegative(self, x, y):
        assert dtw(x, y).distance == dtw(y, x).distance >= 0

    @given(series)
    def test_equal_length_bounded_by_euclidean(self, x):
        y = [v + 1.5 for v in reversed(x)]
        assert dtw(x, y).distance <= euclidean(x, y) + 1e-9

    def test_euclidean(self):
        assert euclidean([0, 0], [3, 4]) == 5.0
        with pytest.raises(ValueError):
            euclidean([0], [0, 1])

    @pytest.mark.parametrize("bad", [[], [np.nan]])
    def test_rejects_bad_input(self, bad):
        with pytest.raises(ValueError):
            dtw(bad, [1.0])


class TestBand:
    def test_config(self):
        assert BandConfig(fraction=0.1).effective_radius(100, 100) == 10
        assert BandConfig(fraction=0.1).effective_radius(10, 30) == 20
        assert BandConfig(fraction=0.1).effective_radius(7, 7) == 1
        assert BandConfig(radius=0).effective_radius(4, 4) == 0

    @pytest.mark.parametrize("kw", [{}, {"fraction": 0.1, "radius": 1}, {"fraction": 1.5}, {"radius": -1}])
    def test_config_rejects(self, kw):
        with pytest.raises(ValueError):
            BandConfig(**kw)

    def test_radius_zero_is_euclidean(self, rng):
        x, y = rng.normal(size=9), rng.normal(size=9)
        assert abs(dtw_banded(x, y, BandConfig(radius=0)) - euclidean(x, y)) < 1e-12

    def test_full_band_is_dtw(self, rng):
        x, y = rng.normal(size=9), rng.normal(size=6)
        assert abs(dtw_banded(x, y, BandConfig(fraction=1.0)) - dtw(x, y).distance) < 1e-12

    @given(series, series, st.integers(0, 8))
    def test_matches_banded_recursion_and_bounds_dtw(self, x, y, r):
        band = BandConfig(radius=r)
        rr = band.effective_radius(len(x), len(y))
        got = dtw_banded(x, y, band)
        assert abs(got**2 - oracles.dtw_sq_recursive(x, y, rr)) <= 1e-9 * (1 + got**2)
        assert got >= dtw(x, y).distance - 1e-12

    def test_banded_path_respects_band(self, rng):
        x, y = rng.normal(size=20), rng.normal(size=20)
        res = dtw_banded(x, y, BandConfig(radius=2), want_path=True)
        assert all(abs(i - j) <= 2 for i, j in res.path)


class TestEarlyAbandon:
    def test_abandons(self):
        assert dtw_early_abandon([0, 0, 0], [5, 5, 5], threshold=1.0) is None

    def test_exact_when_not_abandoned(self, rng):
        x, y = rng.normal(size=15), rng.normal(size=12)
        d = dtw(x, y).distance
        assert dtw_early_abandon(x, y, threshold=d + 1e-9) == pytest.approx(d, abs=1e-12)
        assert dtw_early_abandon(x, y, threshold=1e9) == pytest.approx(d, abs=1e-12)

    @given(series, series, st.floats(0, 20))
    def test_sound(self, x, y, t):
        d = dtw(x, y).distance
        got = dtw_early_abandon(x, y, t)
        if got is None:
            assert d > t
        else:
            assert got == pytest.approx(d, abs=1e-9)

    def test_negative_threshold(self):
        with pytest.raises(ValueError):
            dtw_early_abandon([1.0], [1.0], -1.0)


class TestTwi:
    def test_worked_values(self):
        assert twi([0, 1, 1], [0, 2]) == 1.0
        assert twi([0, 1, 1], [0, 1]) == 0.0

    @given(int_series, int_series)
    def test_equals_dtw_of_condensed(self, x, y):
        assert twi(x, y) == dtw(oracles.condense(x), oracles.condense(y)).distance

    @given(int_series, int_series)
    def test_never_above_dtw(self, x, y):
        assert twi(x, y) <= dtw(x, y).distance + 1e-12

    def test_tolerance(self):
        assert twi([1.0, 1.01, 2.0], [1.0, 2.0], atol=0.05) == 0.0
        assert twi([1.0, 1.01, 2.0], [1.0, 2.0]) > 0.0


class TestLowerBounds:
    def test_envelope_matches_oracle(self, rng):
        for r in range(0, 6):
            c = rng.normal(size=13)
            up, lo = envelope(c, r)
            ou, ol = oracles.envelope(list(c), r)
            assert up.tolist() == ou and lo.tolist() == ol

    def test_envelope_degenerate(self):
        up, lo = envelope([3.0], 5)
        assert up.tolist() == [3.0] and lo.tolist() == [3.0]

    @given(st.lists(st.floats(-5, 5), min_size=1, max_size=20), st.integers(0, 25), st.data())
    def test_chain(self, q, r, data):
        c = data.draw(st.lists(st.floats(-5, 5), min_size=len(q), max_size=len(q)))
        k, l = lb_keogh(q, c, r), lb_lemire(q, c, r)
        d = dtw_banded(q, c, BandConfig(radius=r))
        assert k <= l + 1e-9 and l <= d + 1e-9

    def test_identical_series(self, rng):
        x = rng.normal(size=10)
        assert lb_keogh(x, x, 2) == 0.0 and lb_lemire(x, x, 2) == 0.0

    def test_rejects_unequal_lengths(self):
        with pytest.raises(ValueError):
            lb_keogh([1, 2], [1, 2, 3], 1)
        with pytest.raises(ValueError):
            lb_lemire([1, 2], [1, 2], -1)


class TestRatios:
    def test_compression_ratio(self):
        assert compression_ratio([1, 1, 1, 2]) == 2.0

    def test_speedups(self):
        phi1, phi2 = speedup_factors(720, 720, 25, 35)
        assert phi2 == pytest.approx(720 * 720 / (25 * 35))
        assert phi1 == pytest.approx(720 * 720 / (25 * 35 + 60))
        assert phi1 < phi2

    def test_space_saving(self):
        assert series_space_saving(720, 25) == pytest.approx(0.96528, abs=1e-5)
        # the pairwise ratio is 1/2 for incompressible pairs
        assert space_saving_ratio(10, 10, 10, 10) == 0.5
        assert space_saving_ratio(10, 10, 1, 1) == pytest.approx(0.95)
