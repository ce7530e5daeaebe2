import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from warpinv import words
from warpinv.core import LabeledDataset, condense_series
from warpinv.distances import BandConfig, dtw, dtw_banded, twi
from warpinv.nn import (
    NnConfig,
    Prediction,
    classify_1nn,
    classify_many,
    cross_validate,
    error_rate,
    stratified_folds,
)


@pytest.fixture
def toy():
    return LabeledDataset([np.array([0.0, 1.0]), np.array([0.0, 2.0])], ["A", "B"])


def random_walks(rng, n, lo=20, hi=40, classes=3):
    return LabeledDataset(
        [np.round(np.cumsum(rng.normal(size=int(rng.integers(lo, hi)))), 0) for _ in range(n)],
        [str(i % classes) for i in range(n)],
    )


class TestConfig:
    def test_opt_gets_default_band(self):
        assert NnConfig("opt-dtw").band == BandConfig(fraction=0.1)
        assert NnConfig("dtw").band is None

    @pytest.mark.parametrize("kw", [{"distance": "cosine"}, {"alignment": "x"}, {"lb_mode": "x"}, {"opt_order": "x"}])
    def test_rejects(self, kw):
        with pytest.raises(ValueError):
            NnConfig(**kw)


class TestClassify:
    def test_single_item(self):
        d = LabeledDataset([[1.0, 2.0]], ["only"])
        assert classify_1nn(d, [5.0, 5.0, 5.0]).label == "only"

    def test_twi_toy(self, toy):
        p = classify_1nn(toy, [0, 1, 1], NnConfig("twi"))
        assert (p.label, p.neighbor_index, p.distance_value) == ("A", 0, 0.0)
        assert twi([0, 1, 1], [0, 2]) == 1.0

    def test_dtw_toy(self, toy):
        p = classify_1nn(toy, [0, 1, 1], NnConfig("dtw"))
        assert (p.label, p.distance_value) == ("A", 0.0)
        assert dtw([0, 1, 1], [0, 2]).distance > 0

    def test_euc(self, toy):
        assert classify_1nn(toy, [0, 1.8], NnConfig("euc")).label == "B"
        with pytest.raises(ValueError):
            classify_1nn(toy, [0, 1, 1], NnConfig("euc"))

    def test_ties_go_to_lowest_index(self):
        d = LabeledDataset([[1.0], [1.0], [1.0]], ["x", "y", "z"])
        for m in ("euc", "dtw", "twi", "opt-dtw", "opt-twi"):
            assert classify_1nn(d, [1.0], NnConfig(m)).neighbor_index == 0

    def test_empty_train(self):
        with pytest.raises(ValueError):
            classify_1nn(LabeledDataset([], []), [1.0])

    def test_opt_dtw_matches_exhaustive(self, rng):
        train = random_walks(rng, 40)
        for alignment in ("truncate_or_repeat", "linear_resample"):
            cfg = NnConfig("opt-dtw", alignment=alignment)
            for _ in range(40):
                q = np.cumsum(rng.normal(size=int(rng.integers(20, 40))))
                p = classify_1nn(train, q, cfg)
                ds = []
                for s in train.series:
                    a = classify_1nn(LabeledDataset([s], ["_"]), q, cfg)
                    ds.append(a.distance_value)
                assert p.neighbor_index == int(np.argmin(ds))

    def test_opt_twi_safe_is_exact(self, rng):
        train = random_walks(rng, 40)
        cfg = NnConfig("opt-twi")
        for _ in range(40):
            q = np.round(np.cumsum(rng.normal(size=30)), 0)
            p = classify_1nn(train, q, cfg)
            qc = condense_series(q)
            ds = [dtw_banded(condense_series(s), qc, cfg.band) for s in train.series]
            assert p.neighbor_index == int(np.argmin(ds))
            assert p.distance_value == pytest.approx(min(ds), abs=1e-9)

    def test_opt_twi_variants_run(self, rng):
        train = random_walks(rng, 20)
        q = train.series[3]
        for cfg in (NnConfig("opt-twi", lb_mode="resample"), NnConfig("opt-twi", opt_order="align_first")):
            p = classify_1nn(train, q, cfg)
            assert p.distance_value >= 0

    def test_pruning_is_sound(self, rng):
        train = random_walks(rng, 60)
        cfg = NnConfig("opt-dtw")
        for _ in range(20):
            q = np.cumsum(rng.normal(size=30))
            p = classify_1nn(train, q, cfg)
            exhaustive = [classify_1nn(LabeledDataset([s], ["_"]), q, cfg).distance_value for s in train.series]
            assert all(d >= p.distance_value - 1e-12 for d in exhaustive)

    def test_parallel_equals_sequential(self, rng):
        train = random_walks(rng, 30)
        queries = [np.cumsum(rng.normal(size=25)) for _ in range(20)]
        for m in ("dtw", "opt-twi"):
            assert classify_many(train, queries, NnConfig(m), n_jobs=3) == classify_many(train, queries, NnConfig(m))


class TestVoronoi:
    @given(st.integers(0, 2**32 - 1))
    def test_expanding_a_prototype_shrinks_its_cell(self, seed):
        rng = np.random.default_rng(seed)
        x = rng.integers(0, 4, size=int(rng.integers(1, 5))).astype(float)
        y = rng.integers(0, 4, size=int(rng.integers(1, 5))).astype(float)
        mult = rng.integers(1, 4, size=x.size).tolist()
        xe = np.asarray(words.expand(tuple(x), mult))
        d = LabeledDataset([x, y], ["x", "y"])
        d2 = LabeledDataset([xe, y], ["x", "y"])
        for _ in range(20):
            probe = rng.integers(0, 4, size=int(rng.integers(1, 7))).astype(float)
            if classify_1nn(d2, probe, NnConfig("dtw")).label == "x":
                assert classify_1nn(d, probe, NnConfig("dtw")).label == "x"
            assert classify_1nn(d2, probe, NnConfig("twi")) == classify_1nn(d, probe, NnConfig("twi"))


class TestErrorRate:
    def test_values(self):
        assert error_rate(["a", "b"], ["a", "b"]) == 0.0
        assert error_rate(["a", "b"], ["b", "a"]) == 1.0
        assert error_rate(["a", "a", "a", "b"], ["a", "a", "a", "a"]) == 0.25

    def test_predictions(self):
        assert error_rate([Prediction("a", 0, 0.0)], ["a"]) == 0.0

    def test_rejects(self):
        with pytest.raises(ValueError):
            error_rate(["a"], [])
        with pytest.raises(ValueError):
            error_rate([], [])


class TestCrossValidation:
    def test_separable(self):
        d = LabeledDataset([np.full(5, 0.0)] * 10 + [np.full(5, 100.0)] * 10, ["a"] * 10 + ["b"] * 10)
        assert cross_validate(d, 5, NnConfig("dtw")).mean == 1.0

    def test_single_class(self):
        d = LabeledDataset([np.arange(4.0) + k for k in range(6)], ["a"] * 6)
        assert cross_validate(d, 3).mean == 1.0

    def test_deterministic(self, rng):
        d = random_walks(rng, 30)
        a = cross_validate(d, 5, NnConfig("twi", seed=7))
        b = cross_validate(d, 5, NnConfig("twi", seed=7))
        assert a.accuracies == b.accuracies
        assert all(np.array_equal(f, g) for f, g in zip(a.folds, b.folds))

    def test_folds_partition_and_stratify(self):
        labels = ["a"] * 10 + ["b"] * 20
        parts = stratified_folds(labels, 5, seed=1)
        assert sorted(np.concatenate(parts).tolist()) == list(range(30))
        for p in parts:
            assert [labels[i] for i in p].count("a") == 2

    def test_unstratified_fallback_warns(self):
        with pytest.warns(UserWarning):
            parts = stratified_folds(["a"] * 5 + ["b"], 3, seed=0)
        assert sorted(np.concatenate(parts).tolist()) == list(range(6))

    def test_rejects(self):
        with pytest.raises(ValueError):
            stratified_folds(["a", "b"], 3, 0)
        with pytest.raises(ValueError):
            stratified_folds(["a", "b"], 1, 0)
