import numpy as np
import pytest

from corrkit import (
    FamilySpec,
    InvalidParams,
    RngSeed,
    fechner,
    fit_g,
    generate,
    ncc,
    pearson,
    sample_median,
    spearman,
)


def spec(family, n=200, seed=0, **params):
    return FamilySpec(family, n, RngSeed(seed), params)


class TestFamilySpec:
    def test_unknown_family(self):
        with pytest.raises(InvalidParams):
            FamilySpec("zigzag", 10, RngSeed(0))

    def test_unknown_param(self):
        with pytest.raises(InvalidParams):
            generate(spec("line", slope=2.0))

    def test_n_too_small(self):
        with pytest.raises(InvalidParams):
            FamilySpec("noise", 3, RngSeed(0))

    def test_int_seed_coerced(self):
        s = FamilySpec("noise", 10, 7)
        assert s.seed == RngSeed(7)

    def test_non_finite_param(self):
        with pytest.raises(InvalidParams):
            generate(spec("line", a=float("inf")))


class TestDeterminism:
    @pytest.mark.parametrize("family", sorted(["noise", "line", "curvilinear", "coarse_monotone", "sinusoid", "hetero_step", "step_plateau"]))
    def test_same_spec_bit_identical(self, family):
        a = generate(spec(family, n=64, seed=5))
        b = generate(spec(family, n=64, seed=5))
        np.testing.assert_array_equal(a.xs, b.xs)
        np.testing.assert_array_equal(a.ys, b.ys)

    def test_seed_changes_sample(self):
        a = generate(spec("noise", seed=1))
        b = generate(spec("noise", seed=2))
        assert not np.array_equal(a.xs, b.xs)


class TestLine:
    def test_exact_line(self):
        s = generate(spec("line", n=10, a=2.0, b=1.0))
        assert pearson(s) == pytest.approx(1.0, abs=1e-9)
        np.testing.assert_array_equal(s.ys, 2.0 * s.xs + 1.0)

    @pytest.mark.parametrize("a", [2.0, -3.0, 0.5])
    def test_kappa_is_sign_of_slope(self, a):
        s = generate(spec("line", n=50, seed=3, a=a, b=1.0))
        assert fechner(s).kappa == (1.0 if a > 0 else -1.0)


class TestNoise:
    def test_small_classic_coefficients(self):
        s = generate(spec("noise", n=500, seed=3))
        assert abs(pearson(s)) <= 0.15
        assert abs(spearman(s)) <= 0.15

    def test_unit_square(self):
        s = generate(spec("noise", n=500, seed=4))
        assert 0.0 <= s.xs.min() and s.xs.max() <= 1.0
        assert 0.0 <= s.ys.min() and s.ys.max() <= 1.0


class TestCurvilinear:
    def test_arch_shape_kills_pearson(self):
        s = generate(spec("curvilinear", n=400, seed=2))
        assert abs(pearson(s)) <= 0.15
        # but the arch is strongly detected by the grid coefficient
        assert ncc(s) > 0.3


class TestCoarseMonotone:
    def test_monotone_trend_detected(self):
        s = generate(spec("coarse_monotone", n=300, seed=2))
        assert spearman(s) > 0.6


class TestSinusoid:
    def test_contrast_bands(self):
        s = generate(spec("sinusoid", n=400, seed=1))
        assert abs(pearson(s)) <= 0.15
        assert fit_g(s).omega >= 0.65

    def test_spans_at_least_two_periods(self):
        s = generate(spec("sinusoid", n=400, seed=1))
        assert s.xs.max() - s.xs.min() >= 2.0 * 2.0 * np.pi


class TestHeteroStep:
    def test_spread_contrast_across_threshold(self):
        s = generate(spec("hetero_step", n=200, seed=7))
        left = s.ys[s.xs < 0]
        right = s.ys[s.xs >= 0]
        assert left.max() - left.min() < 1.5
        assert right.max() - right.min() > 5.0

    def test_median_shelf_present(self):
        s = generate(spec("hetero_step", n=200, seed=7))
        y_median = sample_median(s.ys)
        assert np.sum(s.ys == y_median) >= 2

    def test_perfect_forward_separation(self):
        s = generate(spec("hetero_step", n=200, seed=7))
        assert fit_g(s).omega == 1.0


class TestStepPlateau:
    def test_strictly_increasing(self):
        s = generate(spec("step_plateau", n=200, seed=9))
        order = np.argsort(s.xs)
        assert np.all(np.diff(s.xs[order]) > 0)
        assert np.all(np.diff(s.ys[order]) > 0)

    def test_fechner_blind_spot_with_perfect_omega(self):
        s = generate(spec("step_plateau", n=200, seed=9))
        assert abs(fechner(s).kappa) <= 0.1
        assert fit_g(s).omega == 1.0

    def test_step_count_validated(self):
        with pytest.raises(InvalidParams):
            generate(spec("step_plateau", step_count=1.0))
        with pytest.raises(InvalidParams):
            generate(spec("step_plateau", step_count=2.5))
