"""Multiplier representations, derivatives, heat kernel, symbols, psi."""

import math

import numpy as np
import pytest

from thetagauss import errors
from thetagauss.theta import TruncationPolicy
from thetagauss.multipliers import (
    ConstantMultiplierFamily,
    GaussMultiplierFamily,
    MultiplierQuery,
    PsiValue,
    gauss_multiplier,
    gauss_multiplier_derivative,
    gauss_multiplier_dual,
    gauss_multiplier_theta,
    heat_kernel_torus,
    littlewood_paley_symbol,
    multiplier_batch,
    multiplier_derivs_batch,
    multiplier_derivs_tvec,
    psi,
    psi_derivatives,
    psi_inv,
    ratio_batch,
    ratio_derivs_batch,
    semigroup_symbol,
)

POL15 = TruncationPolicy(eps=1e-15, max_terms=100_000)


class TestMultiplier:
    def test_identity_at_origin(self):
        for t in (0.3, 1.0, 20.0):
            cv = gauss_multiplier(t, [0.0, 0.0])
            assert cv.value == pytest.approx(1.0, abs=1e-15)

    def test_dual_agreement_example(self):
        a = gauss_multiplier(2.0, [0.3], POL15)
        b = gauss_multiplier_dual(2.0, [0.3], POL15)
        assert abs(a.value - b.value) <= 1e-12

    def test_spot_value_against_large_scale_bound(self):
        cv = gauss_multiplier(15.0, [0.25], POL15)
        assert cv.value == pytest.approx(0.05258927314280118, abs=1e-10)
        assert cv.value <= math.exp(-math.pi * 15.0 * 0.0625 / 10.0)

    def test_dual_at_origin_is_one(self):
        assert gauss_multiplier_dual(0.37, [0.0]).value == pytest.approx(1.0, abs=1e-14)

    def test_bounded_by_one(self):
        rng = np.random.default_rng(11)
        for _ in range(200):
            t = float(np.exp(rng.uniform(np.log(0.05), np.log(50.0))))
            d = int(rng.integers(1, 4))
            xi = rng.uniform(-0.5, 0.5, d)
            cv = gauss_multiplier(t, xi, POL15)
            assert -1e-13 <= cv.value <= 1.0 + cv.tail_bound + 1e-13

    def test_tensorization(self):
        rng = np.random.default_rng(5)
        for _ in range(20):
            xi = rng.uniform(-0.5, 0.5, 3)
            t = 2.5
            prod = 1.0
            for c in xi:
                prod *= gauss_multiplier(t, [c], POL15).value
            assert gauss_multiplier(t, xi, POL15).value == pytest.approx(prod, abs=1e-13)

    def test_representations_cross_validate_both_regimes(self):
        for t in (0.05, 0.4, 1.0, 3.0, 40.0):
            for xi in ([0.2], [0.45, -0.3]):
                a = gauss_multiplier_theta(t, xi, POL15)
                b = gauss_multiplier_dual(t, xi, POL15)
                assert abs(a.value - b.value) <= a.tail_bound + b.tail_bound + 1e-12

    def test_query_objects(self):
        q = MultiplierQuery(2.0, __import__("thetagauss").TorusPoint([0.3]))
        assert gauss_multiplier(q).value == pytest.approx(
            gauss_multiplier(2.0, [0.3]).value
        )
        with pytest.raises(errors.DerivativeOrderTooLarge):
            MultiplierQuery(2.0, __import__("thetagauss").TorusPoint([0.3]), deriv_order=99)


class TestMultiplierDerivative:
    def test_constant_at_origin(self):
        cv = gauss_multiplier_derivative(3.0, [0.0], deriv_order=1)
        assert cv.value == pytest.approx(0.0, abs=1e-13)

    def test_first_derivative_matches_fd_large(self):
        t, xi = 16.0, [0.25]
        h = 1e-4
        fd = (gauss_multiplier(t + h, xi, POL15).value
              - gauss_multiplier(t - h, xi, POL15).value) / (2 * h)
        cv = gauss_multiplier_derivative(t, xi, POL15, deriv_order=1)
        assert cv.value == pytest.approx(fd, abs=1e-6)

    def test_second_derivative_matches_fd_of_first(self):
        t, xi = 20.0, [0.1, 0.2]
        h = 2e-3
        d1 = lambda tt: gauss_multiplier_derivative(tt, xi, POL15, deriv_order=1).value
        fd = (d1(t + h) - d1(t - h)) / (2 * h)
        cv = gauss_multiplier_derivative(t, xi, POL15, deriv_order=2)
        assert cv.value == pytest.approx(fd, abs=1e-5)

    def test_small_scale_derivative_matches_fd(self):
        t, xi = 0.4, [0.3]
        h = 1e-5 * t
        fd = (gauss_multiplier(t + h, xi, POL15).value
              - gauss_multiplier(t - h, xi, POL15).value) / (2 * h)
        cv = gauss_multiplier_derivative(t, xi, POL15, deriv_order=1)
        assert cv.value == pytest.approx(fd, rel=1e-6)

    def test_batch_matches_scalar(self):
        xis = np.array([0.05, 0.2, 0.45])
        for t in (0.5, 4.0):
            stack = ratio_derivs_batch(t, xis, 3, 1e-14)
            for i, x in enumerate(xis):
                for n in (1, 2, 3):
                    scalar = gauss_multiplier_derivative(t, [x], POL15, deriv_order=n)
                    assert stack[n, i] == pytest.approx(scalar.value, rel=1e-9, abs=1e-16)

    def test_tvec_matches_batch(self):
        ts = np.array([0.3, 0.9, 1.5, 24.0])
        xi = [0.17, -0.4]
        stack_t = multiplier_derivs_tvec(ts, xi, 2, 1e-14)
        for i, t in enumerate(ts):
            stack_x = multiplier_derivs_batch(float(t), np.array([xi]), 2, 1e-14)
            for n in range(3):
                assert stack_t[n, i] == pytest.approx(stack_x[n, 0], rel=1e-11, abs=1e-300)


class TestHeatKernel:
    def test_ratio_matches_multiplier(self):
        for t in (0.01, 0.2, 3.0):
            for xi in ([0.3], [0.1, -0.45]):
                s = 1.0 / (4.0 * math.pi * t)
                h1 = heat_kernel_torus(t, xi, POL15)
                h0 = heat_kernel_torus(t, [0.0] * len(xi), POL15)
                m = gauss_multiplier(s, xi, POL15)
                assert h1.value / h0.value == pytest.approx(m.value, abs=1e-12)

    def test_one_dim_theta_value(self):
        t = 1.0 / (4.0 * math.pi)
        cv = heat_kernel_torus(t, [0.0], POL15)
        assert cv.value == pytest.approx(1.086434811213308, abs=1e-12)

    def test_positive_on_grid(self):
        for t in np.geomspace(1e-3, 10.0, 12):
            assert heat_kernel_torus(t, [0.2, 0.2], POL15).value > 0.0


class TestSymbols:
    def test_semigroup_values(self):
        assert semigroup_symbol(1.0, [0.0, 0.0]) == 1.0
        assert semigroup_symbol(1.0, [0.5, 0.5]) == pytest.approx(math.exp(-2.0), rel=1e-15)

    def test_semigroup_monotone_in_t(self):
        assert semigroup_symbol(2.0, [0.25]) < semigroup_symbol(1.0, [0.25])

    def test_lp_symbol_zero_at_origin(self):
        assert littlewood_paley_symbol(3, [0.0, 0.0]) == 0.0

    def test_lp_symbol_nonnegative(self):
        rng = np.random.default_rng(3)
        for _ in range(50):
            xi = rng.uniform(-0.5, 0.5, 2)
            j = int(rng.integers(-8, 9))
            assert littlewood_paley_symbol(j, xi) >= 0.0

    def test_lp_telescoping(self):
        xi = [0.25]
        total = sum(littlewood_paley_symbol(j, xi) for j in range(-30, 31))
        expect = semigroup_symbol(2.0**-31, xi) - semigroup_symbol(2.0**30, xi)
        assert total == pytest.approx(expect, abs=1e-14)
        # the telescoped value approaches 1; the gap is within 2^-31 * sin^2(pi/4)
        assert abs(total - 1.0) <= 3e-10


class TestPsi:
    def test_definitional_point(self):
        assert psi_inv(math.exp(-math.pi)) == pytest.approx(1.0, abs=1e-15)

    def test_round_trip(self):
        assert psi(psi_inv(0.5)) == pytest.approx(0.5, abs=1e-15)
        for t in np.geomspace(0.01, 100.0, 21):
            assert psi_inv(psi(t)) == pytest.approx(t, rel=1e-14)

    def test_psi_16_value(self):
        val = psi(16.0)
        assert 0.5 < val < 1.0
        assert val == pytest.approx(math.exp(-math.pi / 16.0), rel=1e-16)

    def test_strictly_increasing(self):
        grid = np.geomspace(0.01, 100.0, 40)
        vals = [psi(t) for t in grid]
        assert all(b > a for a, b in zip(vals, vals[1:]))

    def test_domain_errors(self):
        with pytest.raises(errors.DomainError):
            psi_inv(0.0)
        with pytest.raises(errors.DomainError):
            psi_inv(1.0)
        with pytest.raises(errors.DomainError):
            PsiValue(1.5)

    def test_psi_derivatives_match_fd(self):
        u = 2.3
        h = 1e-5
        d = psi_derivatives(u, 2)
        fd1 = (psi(u + h) - psi(u - h)) / (2 * h)
        fd2 = (psi(u + h) - 2 * psi(u) + psi(u - h)) / h**2
        assert d[0] == pytest.approx(fd1, rel=1e-8)
        assert d[1] == pytest.approx(fd2, rel=1e-5)


class TestBatchEvaluators:
    def test_ratio_batch_matches_scalar(self):
        xis = np.linspace(-0.5, 0.49, 23)
        for t in (0.07, 0.9, 1.0, 14.0):
            vals = ratio_batch(t, xis, 1e-15)
            for x, v in zip(xis, vals):
                ref = gauss_multiplier(t, [x], POL15).value
                assert v == pytest.approx(ref, abs=1e-13)

    def test_multiplier_batch_matches_scalar(self):
        rng = np.random.default_rng(17)
        xi = rng.uniform(-0.5, 0.5, (10, 3))
        vals = multiplier_batch(2.2, xi, 1e-15)
        for row, v in zip(xi, vals):
            assert v == pytest.approx(gauss_multiplier(2.2, row, POL15).value, abs=1e-13)


class TestFamilies:
    def test_constant_family_stack(self):
        fam = ConstantMultiplierFamily()
        ts = np.array([0.5, 2.0])
        st = fam.deriv_stack(ts, 0.3, 2)
        assert np.allclose(st[0], 1.0) and np.allclose(st[1:], 0.0)

    def test_gauss_family_values(self):
        fam = GaussMultiplierFamily()
        ts = np.array([0.5, 3.0, 17.0])
        vals = fam.values(ts, 0.2)
        for t, v in zip(ts, vals):
            assert v == pytest.approx(gauss_multiplier(float(t), [0.2], POL15).value, abs=1e-12)


class TestDualBound:
    def test_dual_bounded_by_one_thousand_points(self):
        # the cosine form makes |multiplier| <= 1 manifest; spot it broadly
        rng = np.random.default_rng(29)
        for _ in range(1000):
            t = float(np.exp(rng.uniform(np.log(0.05), np.log(64.0))))
            d = int(rng.integers(1, 4))
            xi = rng.uniform(-0.5, 0.5, d)
            cv = gauss_multiplier_dual(t, xi)
            assert abs(cv.value) <= 1.0 + cv.tail_bound + 1e-13


class TestRegimeBoundary:
    def test_derivative_paths_agree_at_switch(self):
        # the two quotient-recursion paths compute the same function; compare
        # them on either side of the t = 1 representation switch
        for n in (1, 2, 3):
            below = ratio_derivs_batch(1.0 - 1e-9, np.array([0.3]), n, 1e-14)[n, 0]
            above = ratio_derivs_batch(1.0 + 1e-9, np.array([0.3]), n, 1e-14)[n, 0]
            assert below == pytest.approx(above, rel=1e-5)

    def test_order_cap_runs(self):
        cv = gauss_multiplier_derivative(2.0, [0.2], deriv_order=8)
        assert math.isfinite(cv.value)
        with pytest.raises(Exception):
            gauss_multiplier_derivative(2.0, [0.2], deriv_order=9)
