"""Lattice signals, convolution paths, ball averages, file format."""

import math

import numpy as np
import pytest

from thetagauss import errors
from thetagauss.theta import TruncationPolicy, theta1
from thetagauss.lattice import (
    ConvolutionPlan,
    EmbeddingGrid,
    LatticeSignal,
    ball_average,
    ball_offsets,
    convolve_gauss,
    convolve_semigroup,
    gauss_kernel_value,
    kernel_radius,
    littlewood_paley_apply,
    lp_norm,
    maximal_over_times,
    read_signal,
    wraparound_bound,
    write_signal,
)

POL = TruncationPolicy(eps=1e-13)


def rand_signal(rng, dim, radius=3, complex_values=True):
    ent = {}
    for _ in range(4 * (2 * radius + 1)):
        key = tuple(int(c) for c in rng.integers(-radius, radius + 1, dim))
        v = rng.standard_normal() + (1j * rng.standard_normal() if complex_values else 0.0)
        ent[key] = v
    return LatticeSignal(dim, ent)


class TestSignal:
    def test_canonical_form_drops_zeros(self):
        f = LatticeSignal(2, {(0, 0): 1.0, (1, 1): 0.0})
        assert (1, 1) not in f.entries
        assert len(f) == 1

    def test_key_length_validated(self):
        with pytest.raises(ValueError):
            LatticeSignal(2, {(0,): 1.0})

    def test_support_radius(self):
        f = LatticeSignal(2, {(0, 0): 1.0, (-3, 2): 2.0})
        assert f.support_radius == 3

    def test_dense_round_trip(self):
        rng = np.random.default_rng(1)
        f = rand_signal(rng, 2)
        dense, lo = f.to_dense()
        g = LatticeSignal.from_dense(dense, lo, 2)
        assert g.entries == f.entries


class TestKernel:
    def test_value_at_origin_d1(self):
        # frozen from the oracle: reciprocal of the direct theta sum at t = 1
        cv = gauss_kernel_value(1.0, [0], POL)
        assert cv.value == pytest.approx(1.0 / 1.086434811213308, abs=1e-12)
        assert cv.value == pytest.approx(0.9204417878355908, abs=1e-12)

    def test_origin_is_reciprocal_theta(self):
        for d in (1, 2, 3):
            t = 2.7
            cv = gauss_kernel_value(t, [0] * d, POL)
            th = theta1(1.0 / t, 0.0, POL)
            assert cv.value == pytest.approx(th.value**-d, rel=1e-13)

    def test_mass_sums_to_one(self):
        t, d, radius = 1.0, 2, 6
        total = 0.0
        for i in range(-radius, radius + 1):
            for j in range(-radius, radius + 1):
                total += gauss_kernel_value(t, [i, j], POL).value
        assert total == pytest.approx(1.0, abs=1e-12)

    def test_symmetric(self):
        assert gauss_kernel_value(2.0, [3, -1], POL).value == pytest.approx(
            gauss_kernel_value(2.0, [-3, 1], POL).value, rel=1e-15
        )

    def test_radius_certifies_mass(self):
        for t, d in ((0.5, 1), (2.0, 2), (16.0, 3)):
            r = kernel_radius(t, d, 1e-10)
            # brute mass outside the box, 1-dim factorized
            m = np.arange(-r - 60, r + 61)
            w = np.exp(-math.pi * m**2 / t)
            w /= w.sum()
            inside = w[np.abs(m) <= r].sum()
            assert d * (1.0 - inside) <= 1e-10


class TestConvolveGauss:
    def test_impulse_gives_kernel_table(self):
        f = LatticeSignal.delta(2)
        plan = ConvolutionPlan.direct(1.5, POL)
        out = convolve_gauss(f, plan)
        for key, v in out.entries.items():
            assert v.real == pytest.approx(gauss_kernel_value(1.5, key, POL).value, rel=1e-12)

    def test_direct_vs_spectral(self):
        rng = np.random.default_rng(2)
        f = rand_signal(rng, 2, radius=3)
        direct = convolve_gauss(f, ConvolutionPlan.direct(2.0, TruncationPolicy(1e-12)))
        spec = convolve_gauss(f, ConvolutionPlan.spectral(2.0, EmbeddingGrid(32, 2)))
        wrap = wraparound_bound(f, ConvolutionPlan.spectral(2.0, EmbeddingGrid(32, 2)))
        fmax = lp_norm(f, math.inf)
        keys = set(direct.entries) | set(spec.entries)
        worst = max(
            abs(direct.entries.get(k, 0.0) - spec.entries.get(k, 0.0)) for k in keys
        )
        assert worst <= 1e-10 + wrap * fmax

    def test_contraction_spot(self):
        rng = np.random.default_rng(3)
        for t in (0.5, 4.0):
            plan = ConvolutionPlan.direct(t, TruncationPolicy(1e-12))
            for _ in range(20):
                f = rand_signal(rng, 1)
                g = convolve_gauss(f, plan)
                for p in (1.0, 2.0, math.inf):
                    assert lp_norm(g, p) <= lp_norm(f, p) + 1e-10

    def test_grid_too_small(self):
        f = LatticeSignal(1, {(-8,): 1.0, (8,): 1.0})
        with pytest.raises(errors.GridTooSmall):
            convolve_gauss(f, ConvolutionPlan.spectral(1.0, EmbeddingGrid(16, 1)))

    def test_commutes_with_reflection(self):
        rng = np.random.default_rng(4)
        f = rand_signal(rng, 2)
        refl = LatticeSignal(2, {tuple(-c for c in k): v for k, v in f.entries.items()})
        plan = ConvolutionPlan.direct(1.3, POL)
        a = convolve_gauss(refl, plan)
        b = convolve_gauss(f, plan)
        for k, v in a.entries.items():
            assert v == pytest.approx(b.entries.get(tuple(-c for c in k), 0.0), abs=1e-12)


class TestSemigroup:
    def test_small_time_is_identity(self):
        rng = np.random.default_rng(5)
        f = rand_signal(rng, 1, radius=4)
        out = convolve_semigroup(f, 1e-8, EmbeddingGrid(64, 1))
        worst = max(
            abs(out.entries.get(k, 0.0) - f.entries.get(k, 0.0))
            for k in set(out.entries) | set(f.entries)
        )
        assert worst <= 1e-7 * lp_norm(f, math.inf)

    def test_mass_preserved_for_impulse(self):
        out = convolve_semigroup(LatticeSignal.delta(1), 1.0, EmbeddingGrid(64, 1))
        assert sum(v.real for v in out.entries.values()) == pytest.approx(1.0, abs=1e-12)

    def test_grid_doubling_stable(self):
        rng = np.random.default_rng(6)
        f = rand_signal(rng, 1, radius=4)
        a = convolve_semigroup(f, 1.0, EmbeddingGrid(64, 1))
        b = convolve_semigroup(f, 1.0, EmbeddingGrid(128, 1))
        keys = set(a.entries) | set(b.entries)
        worst = max(abs(a.entries.get(k, 0.0) - b.entries.get(k, 0.0)) for k in keys)
        assert worst <= 1e-10


class TestLittlewoodPaley:
    def test_telescoping(self):
        rng = np.random.default_rng(7)
        f = rand_signal(rng, 2, radius=2)
        grid = EmbeddingGrid(16, 2)
        total = littlewood_paley_apply(f, -20, grid)
        for j in range(-19, 21):
            total = total + littlewood_paley_apply(f, j, grid)
        target = f - convolve_semigroup(f, 2.0**20, grid)
        diff = total - target
        # the telescoping gap is (I - Q_{2^{-21}}) f, of order 2^-21 * d * ||f||
        assert lp_norm(diff, 2.0) <= 2.0**-21 * 2 * 2.5 * lp_norm(f, 2.0)

    def test_impulse_symbol(self):
        grid = EmbeddingGrid(32, 1)
        out = littlewood_paley_apply(LatticeSignal.delta(1), 2, grid)
        dense, lo = out.to_dense()
        # compare the DFT of the impulse response against the symbol
        arr = np.zeros(32, dtype=complex)
        for k, v in out.entries.items():
            arr[k[0] % 32] = v
        spec = np.fft.fft(arr)
        freqs = np.fft.fftfreq(32)
        sym = np.exp(-2.0 * np.sin(math.pi * freqs) ** 2) - np.exp(
            -4.0 * np.sin(math.pi * freqs) ** 2
        )
        assert np.max(np.abs(spec - sym)) <= 1e-12

    def test_zero_frequency_annihilated(self):
        # the band symbol vanishes at zero frequency, so the output of S_j
        # always sums to zero (the grid-constant component is killed)
        rng = np.random.default_rng(19)
        grid = EmbeddingGrid(16, 1)
        f = rand_signal(rng, 1, radius=3)
        out = littlewood_paley_apply(f, 0, grid)
        assert abs(sum(out.entries.values())) <= 1e-12 * lp_norm(f, 1.0)

    def test_square_function_l2(self):
        rng = np.random.default_rng(8)
        grid = EmbeddingGrid(16, 2)
        for _ in range(10):
            f = rand_signal(rng, 2, radius=2)
            sq = None
            for j in range(-12, 13):
                piece = littlewood_paley_apply(f, j, grid)
                dense, lo = piece.to_dense(pad=0)
                mag = np.zeros((16,) * 2)
                for k, v in piece.entries.items():
                    mag[k[0] % 16, k[1] % 16] += abs(v) ** 2
                sq = mag if sq is None else sq + mag
            norm = math.sqrt(float(sq.sum()))
            assert norm <= lp_norm(f, 2.0) + 1e-10


class TestNormsAndAverages:
    def test_delta_all_p(self):
        f = LatticeSignal.delta(3)
        for p in (1.0, 1.5, 2.0, math.inf):
            assert lp_norm(f, p) == 1.0

    def test_pythagorean(self):
        f = LatticeSignal(1, {(0,): 3.0, (5,): 4.0})
        assert lp_norm(f, 2.0) == pytest.approx(5.0)

    def test_l1_matches_direct_sum(self):
        rng = np.random.default_rng(9)
        f = rand_signal(rng, 2)
        assert lp_norm(f, 1.0) == pytest.approx(
            sum(abs(v) for v in f.entries.values()), rel=1e-13
        )

    def test_invalid_exponent(self):
        with pytest.raises(errors.InvalidExponent):
            lp_norm(LatticeSignal.delta(1), 0.5)

    def test_small_radius_identity(self):
        f = LatticeSignal(2, {(0, 0): 2.0, (1, 1): -1.0})
        out = ball_average(f, 0.5)
        assert out.entries == f.entries

    def test_three_point_ball(self):
        out = ball_average(LatticeSignal.delta(1), 1.0)
        assert out.entries == {(-1,): pytest.approx(1 / 3), (0,): pytest.approx(1 / 3),
                               (1,): pytest.approx(1 / 3)}

    def test_constant_interior(self):
        f = LatticeSignal(1, {(i,): 1.0 for i in range(-5, 6)})
        out = ball_average(f, 2.0)
        assert out.entries[(0,)] == pytest.approx(1.0)

    def test_ball_offsets_euclidean(self):
        offs = ball_offsets(2, 2.0)
        assert all((o**2).sum() <= 4.0 + 1e-9 for o in offs)
        assert len(offs) == 13  # |B_2 cap Z^2|


class TestMaximal:
    def test_single_time(self):
        rng = np.random.default_rng(10)
        f = rand_signal(rng, 1)
        plan = ConvolutionPlan.direct(1.0, POL)
        m = maximal_over_times(f, [1.0], plan)
        g = convolve_gauss(f, plan)
        for k, v in m.entries.items():
            assert v.real == pytest.approx(abs(g.entries.get(k, 0.0)), rel=1e-12)

    def test_refining_never_decreases(self):
        rng = np.random.default_rng(11)
        f = rand_signal(rng, 1)
        plan = ConvolutionPlan.direct(1.0, POL)
        coarse = maximal_over_times(f, [0.5, 2.0], plan)
        fine = maximal_over_times(f, [0.5, 1.0, 2.0, 3.0], plan)
        for k, v in coarse.entries.items():
            assert fine.entries.get(k, 0.0).real >= v.real - 1e-14

    def test_dominated_by_ball_maximal(self):
        rng = np.random.default_rng(12)
        f = LatticeSignal(2, {
            tuple(int(c) for c in rng.integers(-2, 3, 2)): float(rng.random())
            for _ in range(12)
        })
        plan = ConvolutionPlan.direct(1.0, TruncationPolicy(1e-10))
        sup_g = maximal_over_times(f, [0.5, 1.0, 2.0], plan)
        radius_grid = [0.5] + [math.sqrt(m) for m in range(1, 150)]
        best = {}
        for r in radius_grid:
            avg = ball_average(f, r)
            for k, v in avg.entries.items():
                best[k] = max(best.get(k, 0.0), v.real)
        fmax = lp_norm(f, math.inf)
        for k, v in sup_g.entries.items():
            assert v.real <= best.get(k, 0.0) + 1e-9 * fmax + 1e-12


class TestFileFormat:
    def test_round_trip_bit_exact(self, tmp_path):
        rng = np.random.default_rng(13)
        f = rand_signal(rng, 3, radius=2)
        path = tmp_path / "sig.txt"
        write_signal(f, path)
        g = read_signal(path)
        assert g.dim == f.dim
        assert g.entries == f.entries  # exact float equality through repr round-trip

    def test_header_and_order(self, tmp_path):
        f = LatticeSignal(2, {(1, 0): 2.5, (-1, 3): 1.0 + 2.0j})
        path = tmp_path / "sig.txt"
        write_signal(f, path)
        lines = path.read_text().splitlines()
        assert lines[0] == "dim=2"
        assert lines[1].startswith("-1 3 ")  # lexicographic key order
        assert len(lines[1].split()) == 4  # complex entry carries both parts
        assert len(lines[2].split()) == 3  # real entry omits the zero imag part

    def test_order_insensitive_read(self, tmp_path):
        path = tmp_path / "sig.txt"
        path.write_text("dim=1\n2 1.5\n-1 0.25\n")
        f = read_signal(path)
        assert f.entries == {(2,): 1.5, (-1,): 0.25}

    def test_malformed_rejected(self, tmp_path):
        path = tmp_path / "sig.txt"
        path.write_text("1 2 3\n")
        with pytest.raises(ValueError):
            read_signal(path)


class TestPathEquivalence:
    def test_fifty_random_instances(self):
        rng = np.random.default_rng(99)
        for i in range(50):
            d = 1 + (i % 2)
            t = float(np.exp(rng.uniform(np.log(0.5), np.log(4.0))))
            f = rand_signal(rng, d, radius=3)
            pol = TruncationPolicy(1e-12)
            side = 64 if d == 1 else 32
            spec_plan = ConvolutionPlan.spectral(t, EmbeddingGrid(side, d), pol)
            a = convolve_gauss(f, ConvolutionPlan.direct(t, pol))
            b = convolve_gauss(f, spec_plan)
            wrap = wraparound_bound(f, spec_plan)
            tol = 1e-12 * 10 + (1e-12 + wrap) * lp_norm(f, math.inf) + 1e-11
            keys = set(a.entries) | set(b.entries)
            worst = max(abs(a.entries.get(k, 0.0) - b.entries.get(k, 0.0)) for k in keys)
            assert worst <= tol
