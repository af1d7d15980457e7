"""Seminorm computation: exact DP optima, oracles, comparison inequalities."""

import itertools
import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from thetagauss import errors
from thetagauss.seminorms import (
    Partition,
    SampledFamily,
    jump_count,
    jump_count_brute,
    oscillation,
    variation,
    variation_brute,
)


def fam(values, times=None):
    values = list(values)
    if times is None:
        times = [float(i + 1) for i in range(len(values))]
    return SampledFamily(times, values)


class TestTypes:
    def test_strictly_increasing_times(self):
        with pytest.raises(ValueError):
            SampledFamily([1.0, 1.0], [0, 1])
        with pytest.raises(ValueError):
            SampledFamily([2.0, 1.0], [0, 1])

    def test_partition_validation(self):
        with pytest.raises(errors.InvalidPartition):
            Partition([3.0, 2.0])
        with pytest.raises(errors.InvalidPartition):
            Partition([1.0])


class TestVariation:
    def test_constant_family_is_zero(self):
        assert variation(fam([2.0, 2.0, 2.0, 2.0]), 2.0) == 0.0

    def test_zigzag_example(self):
        assert variation(fam([0.0, 1.0, 0.0]), 2.0) == pytest.approx(math.sqrt(2.0))

    def test_monotone_r1_telescopes(self):
        values = [0.0, 0.5, 1.7, 2.0, 5.5]
        v = variation(fam(values), 1.0)
        assert v == pytest.approx(values[-1] - values[0])
        assert v == pytest.approx(sum(abs(b - a) for a, b in zip(values, values[1:])))

    def test_invalid_exponent(self):
        with pytest.raises(errors.InvalidExponent):
            variation(fam([0.0, 1.0]), 0.5)

    def test_single_point(self):
        assert variation(fam([3.0]), 2.0) == 0.0

    def test_complex_values(self):
        v = variation(fam([0.0, 1.0j, 0.0]), 2.0)
        assert v == pytest.approx(math.sqrt(2.0))

    def test_matches_brute_force_ternary(self):
        for values in itertools.product((-1.0, 0.0, 1.0), repeat=6):
            f = fam(values)
            for r in (1.0, 2.0, 3.0):
                assert variation(f, r) == variation_brute(f, r)

    def test_matches_brute_force_random(self):
        rng = np.random.default_rng(123)
        for _ in range(60):
            f = fam(rng.standard_normal(int(rng.integers(2, 12))))
            for r in (1.0, 2.0, 3.0):
                assert variation(f, r) == pytest.approx(variation_brute(f, r), rel=1e-12)

    def test_nonincreasing_in_r(self):
        rng = np.random.default_rng(5)
        for _ in range(30):
            f = fam(rng.standard_normal(10))
            vals = [variation(f, r) for r in (1.0, 2.0, 3.0, 4.0)]
            assert all(b <= a + 1e-12 for a, b in zip(vals, vals[1:]))

    def test_refinement_never_decreases(self):
        rng = np.random.default_rng(9)
        values = rng.standard_normal(12)
        times = np.arange(1.0, 13.0)
        coarse = fam(values[::2], times[::2])
        fine = fam(values, times)
        for r in (1.0, 2.0, 3.0):
            assert variation(fine, r) >= variation(coarse, r) - 1e-12


class TestJumpCount:
    def test_constant_family(self):
        assert jump_count(fam([1.0] * 5), 0.5) == 0

    def test_alternating_example(self):
        assert jump_count(fam([0.0, 1.0, 0.0, 1.0]), 1.0) == 3

    def test_threshold_above_range(self):
        values = [0.3, -0.4, 0.2]
        assert jump_count(fam(values), 2.0 * 0.4 + 0.1) == 0

    def test_invalid_threshold(self):
        with pytest.raises(errors.InvalidThreshold):
            jump_count(fam([0.0, 1.0]), 0.0)

    def test_matches_brute_force_ternary(self):
        for values in itertools.product((-1.0, 0.0, 1.0), repeat=6):
            f = fam(values)
            for lam in (0.5, 1.0, 1.5, 2.0):
                assert jump_count(f, lam) == jump_count_brute(f, lam)

    def test_matches_brute_force_random(self):
        rng = np.random.default_rng(321)
        for _ in range(60):
            f = fam(rng.standard_normal(int(rng.integers(2, 12))))
            for lam in (0.3, 0.8, 1.5):
                assert jump_count(f, lam) == jump_count_brute(f, lam)

    def test_eager_greedy_is_not_optimal_here(self):
        # the pairwise DP is required: eager left-to-right re-anchoring
        # undercounts on this family (best start loses the first jump)
        values = [0.0, 1.0, 1.9, 0.5, 1.6, 0.5]
        lam = 1.0

        def eager(vals, start):
            anchor, count = vals[start], 0
            for v in vals[start + 1 :]:
                if abs(v - anchor) >= lam:
                    count += 1
                    anchor = v
            return count

        greedy_best = max(eager(values, s) for s in range(len(values)))
        exact = jump_count(fam(values), lam)
        assert exact == jump_count_brute(fam(values), lam) == 4
        assert greedy_best == 3

    def test_refinement_never_decreases(self):
        rng = np.random.default_rng(17)
        values = rng.standard_normal(12)
        times = np.arange(1.0, 13.0)
        coarse = fam(values[::2], times[::2])
        fine = fam(values, times)
        for lam in (0.4, 1.0):
            assert jump_count(fine, lam) >= jump_count(coarse, lam)


class TestOscillation:
    def test_constant_family(self):
        f = fam([5.0] * 6)
        assert oscillation(f, Partition([1.0, 3.0, 6.0]), 2.0) == 0.0

    def test_window_example(self):
        f = fam([1.0, 2.0, 3.0, 4.0], [1.0, 2.0, 3.0, 4.0])
        assert oscillation(f, Partition([1.0, 3.0]), 2.0) == pytest.approx(1.0)

    def test_empty_windows_are_zero(self):
        f = fam([1.0, 5.0], [1.0, 2.0])
        assert oscillation(f, Partition([10.0, 11.0, 12.0]), 2.0) == 0.0

    def test_bounded_by_variation(self):
        rng = np.random.default_rng(77)
        for _ in range(100):
            npts = int(rng.integers(3, 14))
            values = rng.standard_normal(npts) + 1j * rng.standard_normal(npts)
            times = np.cumsum(rng.random(npts) + 0.1)
            f = SampledFamily(times, values)
            cuts = np.sort(rng.uniform(times[0], times[-1] + 1.0, 3))
            if not np.all(np.diff(cuts) > 0):
                continue
            part = Partition(cuts)
            for r in (1.0, 2.0):
                assert oscillation(f, part, r) <= variation(f, r) + 1e-12


class TestChainInequalities:
    @given(st.lists(st.floats(min_value=-5, max_value=5, allow_nan=False), min_size=2, max_size=10))
    @settings(max_examples=120, deadline=None)
    def test_sup_bound_688(self, values):
        f = fam(values)
        mags = [abs(v) for v in values]
        for r in (1.0, 2.0):
            v = variation(f, r)
            assert max(mags) <= min(mags) + v + 1e-9

    @given(st.lists(st.floats(min_value=-5, max_value=5, allow_nan=False), min_size=2, max_size=10),
           st.floats(min_value=0.1, max_value=3.0))
    @settings(max_examples=120, deadline=None)
    def test_jump_variation_725(self, values, lam):
        f = fam(values)
        for r in (1.0, 2.0, 3.0):
            assert lam * jump_count(f, lam) ** (1.0 / r) <= variation(f, r) + 1e-9

    def test_variation_bounded_by_total_62(self):
        rng = np.random.default_rng(13)
        for _ in range(200):
            values = rng.standard_normal(int(rng.integers(2, 12)))
            f = fam(values)
            for r in (1.0, 2.0, 3.0):
                total = 2.0 * float((np.abs(values) ** r).sum() ** (1.0 / r))
                assert variation(f, r) <= total + 1e-12
