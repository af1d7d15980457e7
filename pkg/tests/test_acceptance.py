"""Acceptance suite: one test per criterion, each printing a pass/fail line.

Grids and tolerances are pinned here exactly as stated; nothing is deferred
to later calibration.  Empirical-cap checks compare against the caps frozen
in the constant ledger and additionally verify grid-doubling stability.
"""

import itertools
import math
import time

import numpy as np
import pytest

import thetagauss.backend as backend
import thetagauss.certify as ct
import thetagauss.fractional as fr
import thetagauss.multipliers as mul
import thetagauss.seminorms as sn
from thetagauss.backend import BACKEND
from thetagauss.certify import GridSpec, default_ledger, run_check


def _report_line(num, name, ok, detail=""):
    status = "PASS" if ok else "FAIL"
    print(f"[{status}] criterion {num:2d}: {name} {detail}")
    assert ok, f"criterion {num} ({name}) failed: {detail}"


def _run(cid, grid=None):
    t0 = time.time()
    rep = run_check(cid, grid)
    return rep, time.time() - t0


def test_criterion_01_dual_representation():
    rep, dt = _run("FT_DUAL")  # default grid: 33 log t in [2^-8, 2^8], d in {1,2,4}, 100 xi
    ok = rep.all_passed and dt <= 10.0
    _report_line(1, "FT_DUAL dual-representation agreement", ok,
                 f"worst_margin={rep.summary['worst_margin']:.3e} runtime={dt:.1f}s")


def test_criterion_02_poisson_identity():
    rep, dt = _run("PS2_POISSON")
    ok = rep.all_passed and dt <= 1.0
    worst_dev = max(r.lhs for r in rep.records)
    _report_line(2, "PS2_POISSON scale-inversion identity", ok,
                 f"max_rel_dev={worst_dev:.3e} runtime={dt:.2f}s")


def test_criterion_03_origin_sandwich():
    rep, _ = _run("L1_THETA0")
    worst = min(r.margin for r in rep.records)
    ok = worst >= -1e-14
    _report_line(3, "L1_THETA0 sandwich margins >= -1e-14", ok, f"worst={worst:.3e}")


def test_criterion_04_global_origin_bound():
    rep, dt = _run("EST0_GLOBAL")  # t in [2^-6, 2^6], d in {1,2,4}, 500 xi
    ok = rep.all_passed and dt <= 30.0
    _report_line(4, "EST0_GLOBAL quadratic origin bound", ok,
                 f"failures={rep.summary['failures']} runtime={dt:.1f}s")


def test_criterion_05_large_scale_decay():
    rep, dt = _run("EST_INF")  # t in [15, 200] x 20 log, d in {1,2,4,8}, 1000 xi
    lhs = mul.gauss_multiplier(15.0, [0.25]).value
    rhs = math.exp(-math.pi * 15.0 * 0.0625 / 10.0)
    spot = abs(lhs - 0.0526) < 5e-4 and abs(rhs - 0.7449) < 5e-4
    ok = rep.all_passed and dt <= 60.0 and spot
    _report_line(5, "EST_INF exponential decay at large scales", ok,
                 f"spot lhs={lhs:.4f} rhs={rhs:.4f} runtime={dt:.1f}s")


def test_criterion_06_small_scale_explicit_constants():
    led = default_ledger()
    c32 = led.value("PROP1MOD", "c_D32")
    rep, dt = _run("PROP1MOD")  # 40 log points in (0, 32], d = 1
    ok = rep.all_passed and abs(c32 - 2.4035) < 1e-4
    _report_line(6, "PROP1MOD two-sided bounds at D=32", ok,
                 f"c_32={c32:.6f} failures={rep.summary['failures']} runtime={dt:.1f}s")


def test_criterion_07_heat_kernel_bounds():
    rep1, dt1 = _run("HTD1")
    rep2, dt2 = _run("HTD2")
    ok = rep1.all_passed and rep2.all_passed and (dt1 + dt2) <= 60.0
    _report_line(7, "HTD1/HTD2 heat kernel bounds", ok,
                 f"failures={rep1.summary['failures']}+{rep2.summary['failures']} "
                 f"runtime={dt1 + dt2:.1f}s")


def test_criterion_08_ratio_bounds():
    reps = [_run(cid)[0] for cid in ("LEM2", "LEM4", "COR1")]
    ok = all(r.all_passed for r in reps)
    _report_line(8, "LEM2/LEM4/COR1 theta ratio bounds", ok,
                 "failures=" + ",".join(str(r.summary["failures"]) for r in reps))


def test_criterion_09_seminorm_oracles():
    t0 = time.time()
    # all ternary value sequences of length 9
    vals = np.array(list(itertools.product((-1.0, 0.0, 1.0), repeat=9)))
    vals = np.ascontiguousarray(vals.astype(np.complex128))
    exact = True
    for r in (1.0, 2.0, 3.0):
        dp = sn.variation_batch(vals, r)
        brute = backend.variation_brute_batch(vals, r) ** (1.0 / r)
        if not np.array_equal(dp, brute):
            exact = False
    for lam in (0.5, 1.0, 1.5, 2.0):
        dp = sn.jump_count_batch(vals, lam)
        if not np.array_equal(dp, backend.jump_brute_batch(vals, lam)):
            exact = False
    # 500 random real families of length 12
    rng = np.random.default_rng(20260809)
    rnd = np.ascontiguousarray(rng.standard_normal((500, 12)).astype(np.complex128))
    for r in (1.0, 2.0, 3.0):
        dp = sn.variation_batch(rnd, r)
        brute = backend.variation_brute_batch(rnd, r) ** (1.0 / r)
        if not np.allclose(dp, brute, rtol=1e-12, atol=0):
            exact = False
    for lam in (0.3, 0.8, 1.5):
        dp = sn.jump_count_batch(rnd, lam)
        if not np.array_equal(dp, backend.jump_brute_batch(rnd, lam)):
            exact = False
    dt = time.time() - t0
    ok = exact and dt <= 120.0
    _report_line(9, "seminorm DP vs exhaustive brute force", ok,
                 f"{3**9} ternary + 500 random families, backend={BACKEND}, "
                 f"runtime={dt:.1f}s")


def test_criterion_10_seminorm_chain():
    rep, _ = _run("SEMINORM_CHAIN")  # 1000 random families
    ok = rep.all_passed
    worst = min(r.margin for r in rep.records)
    _report_line(10, "SEMINORM_CHAIN comparison inequalities", ok, f"worst={worst:.3e}")


def test_criterion_11_fractional_calculus():
    t0 = time.time()
    power_ok = True
    for beta in (0.5, 1.0, 2.0):
        h = fr.power_law(beta)
        for alpha in (0.2, 0.5, 0.8):
            fp = fr.FracParams(alpha)
            for u in np.geomspace(0.5, 32.0, 5):
                got = fr.frac_derivative(h, fp, float(u))
                exact = math.gamma(alpha + beta) / math.gamma(beta) * u ** (-alpha - beta)
                if abs(got - exact) > 1e-8 * abs(exact):
                    power_ok = False
    recon = run_check("FRAC_RECON")
    amass = run_check("A_INTEGRAL")
    mrecon = run_check("FRAC_MULT_RECON")
    dt = time.time() - t0
    ok = power_ok and recon.all_passed and amass.all_passed and mrecon.all_passed and dt <= 60.0
    _report_line(11, "fractional closed forms and reconstructions", ok,
                 f"power_ok={power_ok} recon={recon.summary['failures']} "
                 f"mass={amass.summary['failures']} eq7={mrecon.summary['failures']} "
                 f"runtime={dt:.1f}s")


def test_criterion_12_contraction():
    rep, dt = _run("CONTRACTION")
    ok = rep.all_passed
    _report_line(12, "CONTRACTION on l^p", ok,
                 f"failures={rep.summary['failures']} runtime={dt:.1f}s")


def test_criterion_13_pointwise_domination():
    rep, dt = _run("PTWISE_DOM")  # 50 nonnegative signals, d in {1,2,3}
    ok = rep.all_passed
    _report_line(13, "PTWISE_DOM maximal function vs ball averages", ok,
                 f"failures={rep.summary['failures']} runtime={dt:.1f}s")


@pytest.mark.parametrize("cid", [
    "EST0_LOCAL", "DERIV_1D", "DERIV_D", "G12", "G14", "PSI_DERIV",
    "DELTA_RATIO", "GDIFF_HOLDER",
])
def test_criterion_14_empirical_caps(cid):
    cdef = ct.REGISTRY[cid]
    base = run_check(cid)
    doubled = run_check(cid, cdef.grid.doubled())
    ok = base.all_passed and doubled.all_passed
    stable = True
    for rb, rd in zip(base.records, doubled.records):
        if rb.lhs > 0 and not (0.9 <= rd.lhs / rb.lhs <= 1.1):
            stable = False
    measured = {f"{r.params}": r.lhs for r in base.records}
    ok = ok and stable and all(math.isfinite(r.lhs) for r in base.records)
    _report_line(14, f"empirical caps: {cid}", ok,
                 f"stable={stable} measured={ {k: round(v, 4) for k, v in measured.items()} }")


def test_criterion_15_dimension_growth():
    t0 = time.time()
    rep = ct.estimate_norm_growth(2.0, (1, 2, 3, 4), trials=50, side=16)
    dt = time.time() - t0
    growth = rep.summary["growth_factor"]
    ok = growth <= 2.0 and dt <= 300.0
    curve = {r.params["d"]: round(r.lhs, 4) for r in rep.records
             if r.params.get("functional") == "maximal"}
    _report_line(15, "NORM_GROWTH dimension curve", ok,
                 f"growth={growth:.4f} curve={curve} runtime={dt:.1f}s")


def test_criterion_16_combinatorics():
    partitions = [1, 2, 3, 5, 7, 11, 15, 22, 30, 42]
    counts_ok = all(
        len(fr.faa_di_bruno_tuples(n)) == p for n, p in enumerate(partitions, start=1)
    )
    rng = np.random.default_rng(20260809)
    round_trip_ok = True
    for _ in range(30):
        fd = [float(rng.uniform(0.5, 2.0))] + list(rng.standard_normal(4))
        inv = [fr.inverse_derivative(k, fd) for k in range(1, 6)]
        outer = [0.0] + inv
        for n in range(1, 6):
            got = fr.compose_derivative(n, outer[: n + 1], fd[:n])
            expect = 1.0 if n == 1 else 0.0
            if abs(got - expect) > 1e-9:
                round_trip_ok = False
    ok = counts_ok and round_trip_ok
    _report_line(16, "partition counts and inverse round trip", ok,
                 f"counts_ok={counts_ok} round_trip_ok={round_trip_ok}")
