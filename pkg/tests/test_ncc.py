import math
from collections import Counter

import numpy as np
import pytest

from corrkit import (
    FamilySpec,
    InvalidParams,
    PairedSample,
    RngSeed,
    TooFewPoints,
    build_bin_grid,
    fit_g,
    generate,
    ncc,
)
from corrkit.ncc import bin_boundaries

from conftest import seeded_rng


# --- independent oracle: raw pairs -> bins -> entropies ------------------------


def ncc_raw_pairs_oracle(xs, ys, b):
    """Recompute from scratch: sort positions, floor boundaries, Counter."""
    n = len(xs)
    bounds = [(k * n) // b for k in range(b + 1)]

    def bin_of(position):
        for k in range(b):
            if bounds[k] <= position < bounds[k + 1]:
                return k
        raise AssertionError("position outside all bins")

    def positions(values):
        order = sorted(range(n), key=lambda i: (values[i], i))
        pos = [0] * n
        for p, i in enumerate(order):
            pos[i] = p
        return pos

    col = [bin_of(p) for p in positions(xs)]
    row = [bin_of(p) for p in positions(ys)]
    joint = Counter(zip(row, col))
    rows = Counter(row)
    cols = Counter(col)

    def entropy(counter):
        return -sum(
            (c / n) * math.log(c / n, b) for c in counter.values() if c > 0
        )

    return entropy(rows) + entropy(cols) - entropy(joint)


def diagonal_sample(n=100):
    xs = np.arange(float(n))
    return PairedSample(xs, xs.copy())


def uniform_grid_sample(n=100, b=10):
    # x-rank i lands in column i//b, and y = (i%b)*b + i//b permutes the
    # ranks so every (row, column) cell receives exactly one point
    xs = np.arange(float(n))
    ys = (xs % b) * b + xs // b
    return PairedSample(xs, ys)


class TestBinGrid:
    def test_diagonal_grid(self):
        grid = build_bin_grid(diagonal_sample(), 10)
        np.testing.assert_array_equal(grid.counts, np.eye(10) * 10)

    def test_uniform_grid(self):
        grid = build_bin_grid(uniform_grid_sample(), 10)
        np.testing.assert_array_equal(grid.counts, np.ones((10, 10)))

    def test_row_and_column_sums(self):
        rng = seeded_rng(30)
        s = PairedSample(rng.normal(size=100), rng.normal(size=100))
        grid = build_bin_grid(s, 10)
        assert grid.counts.sum() == 100
        np.testing.assert_array_equal(grid.row_counts, np.full(10, 10))
        np.testing.assert_array_equal(grid.col_counts, np.full(10, 10))

    def test_uneven_bins_match_floor_boundary_oracle(self):
        rng = seeded_rng(31)
        s = PairedSample(rng.normal(size=103), rng.normal(size=103))
        grid = build_bin_grid(s, 10)
        bounds = bin_boundaries(103, 10)
        expected_sizes = np.diff(bounds)
        np.testing.assert_array_equal(grid.col_counts, expected_sizes)
        np.testing.assert_array_equal(grid.row_counts, expected_sizes)

    def test_too_few_points(self):
        with pytest.raises(TooFewPoints):
            build_bin_grid(PairedSample([1, 2, 3], [1, 2, 3]), 10)

    def test_bad_bin_count(self):
        with pytest.raises(InvalidParams):
            build_bin_grid(diagonal_sample(), 1)


class TestNcc:
    def test_diagonal_is_one(self):
        assert ncc(diagonal_sample()) == pytest.approx(1.0, abs=1e-12)

    def test_uniform_grid_is_zero(self):
        assert ncc(uniform_grid_sample()) == pytest.approx(0.0, abs=1e-12)

    def test_matches_raw_pairs_oracle(self):
        for case in range(20):
            rng = seeded_rng(32, case)
            n = int(rng.integers(10, 200))
            b = int(rng.integers(2, 11))
            if n < b:
                continue
            xs = rng.normal(size=n)
            ys = rng.normal(size=n)
            expected = ncc_raw_pairs_oracle(list(xs), list(ys), b)
            assert ncc(PairedSample(xs, ys), b) == pytest.approx(expected, abs=1e-12)

    def test_range_on_fuzz(self):
        for case in range(200):
            rng = seeded_rng(33, case)
            n = int(rng.integers(10, 300))
            s = PairedSample(rng.normal(size=n), rng.normal(size=n))
            assert 0.0 <= ncc(s) <= 1.0

    def test_monotone_transform_invariance(self):
        rng = seeded_rng(34)
        s = PairedSample(rng.uniform(1, 2, 120), rng.uniform(1, 2, 120))
        transformed = PairedSample(np.exp(s.xs), s.ys**3)
        assert ncc(transformed) == ncc(s)

    def test_symmetry(self):
        rng = seeded_rng(35)
        s = PairedSample(rng.normal(size=90), rng.normal(size=90))
        assert ncc(s) == ncc(s.swapped())

    def test_grid_transpose_under_swap(self):
        rng = seeded_rng(36)
        s = PairedSample(rng.normal(size=90), rng.normal(size=90))
        np.testing.assert_array_equal(
            build_bin_grid(s, 9).counts, build_bin_grid(s.swapped(), 9).counts.T
        )

    def test_heteroscedastic_family_low_ncc_high_omega(self):
        s = generate(FamilySpec("hetero_step", 200, RngSeed(11)))
        assert ncc(s) < 0.6
        assert fit_g(s).omega == 1.0
