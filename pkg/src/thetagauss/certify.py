"""Named-inequality certification harness.

Every check in the registry pairs an LHS/RHS evaluator with a grid sweep over
(dimension, scale, frequency, order, ...) axes and lands in one of three
modes:

* ``explicit``: the inequality carries explicit constants; every grid point
  must pass with margin >= -(truncation slack + round-off slack),
* ``empirical``: the inequality holds with an implicit constant; the sweep
  measures the supremum of LHS over the RHS shape and compares it against a
  cap frozen from a documented pre-run (the measured value is always emitted),
* ``report``: a scientific curve (dimension growth) with a loose frozen-cap
  regression assertion.

Runs are deterministic: frequency samples come from a Kronecker
low-discrepancy sequence plus fixed corner/axis points, random signals from a
seeded generator, and reports serialize to byte-identical JSON given the same
seed and grid.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field, replace

import numpy as np
from scipy.signal import fftconvolve

from . import fractional as fr
from . import lattice as lat
from . import multipliers as mul
from . import seminorms as sn
from .errors import IncompatibleGrid, ResourceBudgetExceeded, ThetaGaussError
from .theta import TruncationPolicy, tail_bound, theta1, theta1_direct

ROUNDOFF_SLACK = 1e-13
DEFAULT_SEED = 20260809

__all__ = [
    "CheckId",
    "GridSpec",
    "ConstantLedger",
    "CheckRecord",
    "CertReport",
    "list_checks",
    "run_check",
    "run_suite",
    "estimate_norm_growth",
    "REGISTRY",
]


# ---------------------------------------------------------------------------
# report plumbing
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class CheckId:
    id: str
    description: str
    anchor: str
    mode: str  # explicit | empirical | report


@dataclass(frozen=True)
class GridSpec:
    """Axis specification for a sweep; checks use the axes they need."""

    t_lo: float = 0.5
    t_hi: float = 64.0
    t_count: int = 25
    t_log: bool = True
    dims: tuple[int, ...] = (1, 2, 4)
    xi_count: int = 300
    seed: int = DEFAULT_SEED
    alphas: tuple[float, ...] = (0.3, 0.5, 0.7)
    orders: tuple[int, ...] = (1, 2, 3)
    w_fracs: tuple[float, ...] = (0.01, 0.1, 0.5)
    times: tuple[float, ...] = (0.5, 1.0, 2.0, 4.0)
    n_signals: int = 50
    trials: int = 50
    side: int = 16

    def __post_init__(self):
        if self.t_count < 1 or self.xi_count < 1:
            raise ValueError("axis counts must be >= 1")

    def t_grid(self) -> np.ndarray:
        if self.t_count == 1:
            return np.array([self.t_lo])
        if self.t_log:
            return np.geomspace(self.t_lo, self.t_hi, self.t_count)
        return np.linspace(self.t_lo, self.t_hi, self.t_count)

    def doubled(self) -> "GridSpec":
        return replace(self, t_count=2 * self.t_count, xi_count=2 * self.xi_count)

    def describe(self) -> dict:
        return {
            "t": [self.t_lo, self.t_hi, self.t_count, "log" if self.t_log else "lin"],
            "dims": list(self.dims),
            "xi_count": self.xi_count,
            "seed": self.seed,
            "alphas": list(self.alphas),
            "orders": list(self.orders),
            "w_fracs": list(self.w_fracs),
            "times": list(self.times),
            "n_signals": self.n_signals,
            "trials": self.trials,
            "side": self.side,
        }


@dataclass(frozen=True)
class CheckRecord:
    check_id: str
    params: dict
    lhs: float
    rhs: float
    margin: float
    slack: float
    passed: bool


@dataclass
class CertReport:
    suite: str
    seed: int
    grid: dict
    records: list = field(default_factory=list)
    summary: dict = field(default_factory=dict)

    def finalize(self) -> "CertReport":
        fails = [r for r in self.records if not r.passed]
        worst = min(
            (r.margin for r in self.records if not math.isnan(r.margin)),
            default=math.inf,
        )
        caps = {
            f"{r.check_id}:{_params_str(r.params)}": r.lhs
            for r in self.records
            if r.params.get("mode") == "empirical"
        }
        self.summary = {
            "total": len(self.records),
            "failures": len(fails),
            "worst_margin": worst,
            "empirical_caps": caps,
        }
        return self

    @property
    def all_passed(self) -> bool:
        return all(r.passed for r in self.records)

    def to_json(self) -> str:
        payload = {
            "suite": self.suite,
            "seed": self.seed,
            "grid": self.grid,
            "records": [
                {
                    "check_id": r.check_id,
                    "params": _params_str(r.params),
                    "lhs": r.lhs,
                    "rhs": r.rhs,
                    "margin": r.margin,
                    "slack": r.slack,
                    "pass": r.passed,
                }
                for r in self.records
            ],
            "summary": self.summary,
        }
        return json.dumps(payload, indent=1)

    def to_csv(self) -> str:
        lines = ["check_id,params,lhs,rhs,margin,slack,pass"]
        for r in self.records:
            lines.append(
                f"{r.check_id},{_params_str(r.params)},{r.lhs!r},{r.rhs!r},"
                f"{r.margin!r},{r.slack!r},{int(r.passed)}"
            )
        return "\n".join(lines) + "\n"


def _params_str(params: dict) -> str:
    items = []
    for k, v in params.items():
        if isinstance(v, float):
            items.append(f"{k}={v:.6g}")
        else:
            items.append(f"{k}={v}")
    return ";".join(items)


def _explicit_record(cid, params, lhs, rhs, slack) -> CheckRecord:
    margin = rhs - lhs
    return CheckRecord(cid, params, float(lhs), float(rhs), float(margin),
                       float(slack), bool(margin >= -(slack + ROUNDOFF_SLACK)))


def _empirical_record(cid, params, measured, cap) -> CheckRecord:
    params = dict(params)
    params["mode"] = "empirical"
    margin = cap - measured
    return CheckRecord(cid, params, float(measured), float(cap), float(margin),
                       0.0, bool(margin >= 0.0))


# ---------------------------------------------------------------------------
# explicit constants and frozen empirical caps
# ---------------------------------------------------------------------------


def _c_small_scale(d_cap: float) -> float:
    return 16.0 / (1.0 + math.sqrt(d_cap))


def _big_c_small_scale(d_cap: float) -> float:
    base = 1.0 + d_cap**2 * math.exp(-math.pi / (2.0 * d_cap)) / math.pi**2
    return max(8.0 * math.pi**2 * base, 8.0 * math.pi**3 * d_cap * base)


def _g14_exponents(d_cap: float, n_max: int) -> list[float]:
    cs = [_c_small_scale(d_cap)]
    for _ in range(n_max):
        cs.append(0.5 * min(min(cs), 1.0))
    return cs


# Explicit entries carry (frozen value, formula); the formula is re-evaluated
# at load time and must reproduce the frozen float bit-for-bit.
_EXPLICIT_CONSTANTS = {
    ("PROP1MOD", "c_D32"): (2.4035376771573573, lambda: _c_small_scale(32.0)),
    ("PROP1MOD", "C_D32"): (792037.5350827063, lambda: _big_c_small_scale(32.0)),
    ("HTD2", "c"): (
        2.4035376771573573,
        lambda: 16.0 / (1.0 + 4.0 * math.sqrt(2.0)),
    ),
    ("HTD2", "C"): (
        792037.5350827063,
        lambda: 256.0 * (math.pi**3 + 1024.0 * math.pi * math.exp(-math.pi / 64.0)),
    ),
    ("EST0_GLOBAL", "coef"): (18.84955592153876, lambda: 6.0 * math.pi),
    ("EST_INF", "rate"): (0.3141592653589793, lambda: math.pi / 10.0),
    ("COR1", "rate"): (0.3141592653589793, lambda: math.pi / 10.0),
    ("LEM2", "rate"): (1.5707963267948966, lambda: math.pi / 2.0),
    ("HTD1", "rate_lower"): (0.25, lambda: 1.0 / 4.0),
    ("HTD1", "rate_upper"): (0.025, lambda: 1.0 / 40.0),
    ("G14", "c0_D16"): (3.2, lambda: _g14_exponents(16.0, 3)[0]),
    ("G14", "c1_D16"): (0.5, lambda: _g14_exponents(16.0, 3)[1]),
    ("G14", "c2_D16"): (0.25, lambda: _g14_exponents(16.0, 3)[2]),
    ("G14", "c3_D16"): (0.125, lambda: _g14_exponents(16.0, 3)[3]),
}

# Frozen from the documented pre-run (seed 20260809, default grids and their
# doubled refinements; max drift under doubling was 0.5 percent).  Each cap is
# the measured sup times a 1.25 headroom factor.  The measured values stay in
# the report next to these caps on every run; regenerate the measurements
# with benchmarks/prerun_caps.py when grids or evaluators change.
_FROZEN_CAPS = {
    ("EST0_LOCAL", "cap"): 77.0,  # measured 61.17 (sup at the t = 16 edge, xi -> 0)
    ("DERIV_1D", "n=1"): 4.5,  # measured 3.59
    ("DERIV_1D", "n=2"): 21.0,  # measured 16.70
    ("DERIV_1D", "n=3"): 94.0,  # measured 74.48
    ("DERIV_D", "n=1"): 0.49,  # measured 0.3872, stable across d = 1..8
    ("DERIV_D", "n=2"): 0.72,  # measured 0.5695
    ("DERIV_D", "n=3"): 1.75,  # measured 1.3960
    ("G12", "n=1"): 1230.0,  # measured 978.7 (edge t = 16; t^{-2n} shape)
    ("G12", "n=2"): 7330.0,  # measured 5856.6
    ("G12", "n=3"): 176000.0,  # measured 140182
    ("G14", "n=0"): 1.05,  # measured 1.0 exactly (explicit-constant case)
    ("G14", "n=1"): 7.5,  # measured 5.934
    ("G14", "n=2"): 175.0,  # measured 139.7
    ("G14", "n=3"): 6930.0,  # measured 5539.9
    ("PSI_DERIV", "n=1"): 4.4,  # measured 3.491
    ("PSI_DERIV", "n=2"): 48.0,  # measured 38.44
    ("PSI_DERIV", "n=3"): 940.0,  # measured 750.9
    ("DELTA_RATIO", "alpha=0.3"): 2.8,  # measured 2.229
    ("DELTA_RATIO", "alpha=0.5"): 2.9,  # measured 2.257
    ("DELTA_RATIO", "alpha=0.7"): 2.8,  # measured 2.201
    ("GDIFF_HOLDER", "large"): 0.32,  # measured 0.2492 at alpha = 0.75
    ("GDIFF_HOLDER", "small"): 0.38,  # measured 0.3003 at alpha = 0.75
    ("NORM_GROWTH", "growth"): 2.0,  # pinned by the acceptance criterion
}


class ConstantLedger:
    """Explicit constants (re-derived at load, mismatch aborts) plus frozen caps."""

    def __init__(self):
        self.entries = {}
        for key, (frozen, formula) in _EXPLICIT_CONSTANTS.items():
            value = formula()
            if value != frozen:
                raise AssertionError(
                    f"ledger integrity failure for {key}: formula gives {value!r}, "
                    f"frozen value is {frozen!r}"
                )
            self.entries[key] = {"mode": "explicit", "value": frozen,
                                 "provenance": "closed-form expression"}
        for key, cap in _FROZEN_CAPS.items():
            self.entries[key] = {"mode": "empirical", "value": cap,
                                 "provenance": f"pre-run seed {DEFAULT_SEED}"}

    def value(self, check: str, key: str) -> float:
        return self.entries[(check, key)]["value"]


_DEFAULT_LEDGER: ConstantLedger | None = None


def default_ledger() -> ConstantLedger:
    global _DEFAULT_LEDGER
    if _DEFAULT_LEDGER is None:
        _DEFAULT_LEDGER = ConstantLedger()
    return _DEFAULT_LEDGER


# ---------------------------------------------------------------------------
# deterministic samplers
# ---------------------------------------------------------------------------


def _kronecker_alpha(dim: int) -> np.ndarray:
    phi = 2.0
    for _ in range(64):
        phi = (1.0 + phi) ** (1.0 / (dim + 1))
    return np.array([phi ** (-(j + 1)) for j in range(dim)])


def sample_frequencies(dim: int, count: int, seed: int = DEFAULT_SEED) -> np.ndarray:
    """(count, dim) frequency sample: corner/axis extremes + Kronecker fill.

    The inequality extremes live on axes and corners, so those points are
    always present; the rest is a low-discrepancy Kronecker sequence whose
    start index is set by the seed.
    """
    specials = np.array(
        [
            np.zeros(dim),
            np.full(dim, -0.5),
            np.full(dim, 0.25),
            np.concatenate([[-0.5], np.zeros(dim - 1)]),
            np.concatenate([[0.25], np.zeros(dim - 1)]),
            # near-zero axis points: several sup ratios attain their extreme
            # in the xi -> 0 limit, which grid refinement must not chase
            np.concatenate([[1e-3], np.zeros(dim - 1)]),
            np.concatenate([[1e-4], np.zeros(dim - 1)]),
            np.full(dim, 1e-3),
        ]
    )[:count]
    need = count - specials.shape[0]
    if need <= 0:
        return specials
    alpha = _kronecker_alpha(dim)
    i = np.arange(1, need + 1)[:, None] + (seed % 997)
    fill = (0.5 + i * alpha[None, :]) % 1.0 - 0.5
    return np.vstack([specials, fill])


def _norm_sq(xi: np.ndarray) -> np.ndarray:
    return (xi**2).sum(axis=1)


def random_signal(rng, dim: int, radius: int = 2, density: float = 0.7,
                  complex_values: bool = False, nonnegative: bool = False) -> lat.LatticeSignal:
    ent = {}
    coords = np.stack(
        np.meshgrid(*([np.arange(-radius, radius + 1)] * dim), indexing="ij"), axis=-1
    ).reshape(-1, dim)
    for c in coords:
        if rng.random() > density:
            continue
        if nonnegative:
            v = rng.random()
        elif complex_values:
            v = complex(rng.standard_normal(), rng.standard_normal())
        else:
            v = rng.standard_normal()
        if v != 0:
            ent[tuple(int(x) for x in c)] = v
    if not ent:
        ent[(0,) * dim] = 1.0
    return lat.LatticeSignal(dim, ent)


# ---------------------------------------------------------------------------
# explicit checks
# ---------------------------------------------------------------------------

_POL15 = TruncationPolicy(eps=1e-15, max_terms=100_000)


def _check_l1_theta0(grid: GridSpec, ledger: ConstantLedger):
    records = []
    for t in grid.t_grid():
        th = theta1(t, 0.0, _POL15)
        slack = th.tail_bound + ROUNDOFF_SLACK
        records.append(
            _explicit_record("L1_THETA0", {"t": t, "side": "lower"},
                             max(1.0, t**-0.5), th.value, slack)
        )
        records.append(
            _explicit_record("L1_THETA0", {"t": t, "side": "upper"},
                             th.value, 1.0 + t**-0.5, slack)
        )
    return records


def _check_ps2_poisson(grid: GridSpec, ledger: ConstantLedger):
    records = []
    for t in grid.t_grid():
        lhs = theta1_direct(t, 0.0, _POL15)
        dual = theta1_direct(1.0 / t, 0.0, _POL15)
        rhs = t**-0.5 * dual.value
        dev = abs(lhs.value - rhs) / abs(rhs)
        slack = (lhs.tail_bound + t**-0.5 * dual.tail_bound) / abs(rhs)
        records.append(
            _explicit_record("PS2_POISSON", {"t": t}, dev, 1e-12, slack)
        )
    return records


def _check_ft_dual(grid: GridSpec, ledger: ConstantLedger):
    records = []
    for d in grid.dims:
        xis = sample_frequencies(d, grid.xi_count, grid.seed)
        for t in grid.t_grid():
            worst_dev = -math.inf
            worst_tol = 0.0
            for row in xis:
                a = mul.gauss_multiplier_theta(t, row, _POL15)
                b = mul.gauss_multiplier_dual(t, row, _POL15)
                dev = abs(a.value - b.value)
                tol = a.tail_bound + b.tail_bound + 1e-12
                if dev - tol > worst_dev - worst_tol:
                    worst_dev, worst_tol = dev, tol
            records.append(
                _explicit_record("FT_DUAL", {"t": t, "d": d}, worst_dev, worst_tol, 0.0)
            )
    return records


def _check_est0_global(grid: GridSpec, ledger: ConstantLedger):
    coef = ledger.value("EST0_GLOBAL", "coef")
    records = []
    for d in grid.dims:
        xis = sample_frequencies(d, grid.xi_count, grid.seed)
        nsq = _norm_sq(xis)
        for t in grid.t_grid():
            lhs = mul.one_minus_multiplier_batch(t, xis, 1e-13)
            rhs = coef * t * nsq
            worst = int(np.argmin(rhs - lhs))
            records.append(
                _explicit_record(
                    "EST0_GLOBAL", {"t": t, "d": d},
                    lhs[worst], rhs[worst], d * 1e-12,
                )
            )
    return records


def _check_lem2(grid: GridSpec, ledger: ConstantLedger):
    rate = ledger.value("LEM2", "rate")
    xis = sample_frequencies(1, grid.xi_count, grid.seed)[:, 0]
    records = []
    for t in grid.t_grid():
        th0 = theta1(t, 0.0, _POL15)
        ratio = mul.ratio_batch(t, xis, 1e-15)
        lhs = ratio * th0.value
        th8 = theta1(t / 8.0, 0.0, _POL15)
        rhs = th8.value * np.exp(-rate * t * xis**2)
        worst = int(np.argmin(rhs - lhs))
        slack = th0.tail_bound + th8.tail_bound + 1e-12
        records.append(
            _explicit_record("LEM2", {"t": t, "xi": xis[worst]},
                             lhs[worst], rhs[worst], slack)
        )
    return records


def _check_lem4(grid: GridSpec, ledger: ConstantLedger):
    records = []
    base = sample_frequencies(1, grid.xi_count, grid.seed)[:, 0]
    for alpha in (0.1, 0.25, 0.4):
        xis = base * 2.0 * alpha * 0.999  # restrict |xi| <= alpha
        for t in grid.t_grid():
            ratio = mul.ratio_batch(t, xis, 1e-15)
            lower = np.exp(-math.pi * t * xis**2)
            bump = np.exp(
                2.0 * xis**2 * math.exp(-math.pi * t * (0.25 - alpha / 2.0))
                / (0.5 - alpha) ** 2
            )
            upper = lower * bump
            wl = int(np.argmin(ratio - lower))
            wu = int(np.argmin(upper - ratio))
            records.append(
                _explicit_record("LEM4", {"alpha": alpha, "t": t, "side": "lower"},
                                 lower[wl], ratio[wl], 1e-12)
            )
            records.append(
                _explicit_record("LEM4", {"alpha": alpha, "t": t, "side": "upper"},
                                 ratio[wu], upper[wu], 1e-12)
            )
    # the lower bound holds for every frequency, not just |xi| <= alpha
    for t in grid.t_grid():
        ratio = mul.ratio_batch(t, base, 1e-15)
        lower = np.exp(-math.pi * t * base**2)
        w = int(np.argmin(ratio - lower))
        records.append(
            _explicit_record("LEM4", {"alpha": "all", "t": t, "side": "lower"},
                             lower[w], ratio[w], 1e-12)
        )
    return records


def _check_cor1(grid: GridSpec, ledger: ConstantLedger):
    if grid.t_lo < 15.0:
        raise IncompatibleGrid("COR1 requires t >= 15")
    rate = ledger.value("COR1", "rate")
    xis = sample_frequencies(1, grid.xi_count, grid.seed)[:, 0]
    records = []
    for t in grid.t_grid():
        ratio = mul.ratio_batch(t, xis, 1e-15)
        rhs = np.exp(-rate * t * xis**2)
        w = int(np.argmin(rhs - ratio))
        records.append(
            _explicit_record("COR1", {"t": t, "xi": xis[w]}, ratio[w], rhs[w], 1e-12)
        )
    return records


def _check_est_inf(grid: GridSpec, ledger: ConstantLedger):
    if grid.t_lo < 15.0:
        raise IncompatibleGrid("EST_INF requires t >= 15")
    rate = ledger.value("EST_INF", "rate")
    records = []
    for d in grid.dims:
        xis = sample_frequencies(d, grid.xi_count, grid.seed)
        nsq = _norm_sq(xis)
        for t in grid.t_grid():
            vals = mul.multiplier_batch(t, xis, 1e-14)
            rhs = np.exp(-rate * t * nsq)
            w = int(np.argmin(rhs - vals))
            records.append(
                _explicit_record("EST_INF", {"t": t, "d": d},
                                 vals[w], rhs[w], d * 1e-13)
            )
    return records


def _check_prop1mod(grid: GridSpec, ledger: ConstantLedger):
    if grid.t_hi > 32.0:
        raise IncompatibleGrid("PROP1MOD is stated for t <= D = 32")
    c_small = ledger.value("PROP1MOD", "c_D32")
    c_big = ledger.value("PROP1MOD", "C_D32")
    records = []
    for d in grid.dims:
        xis = sample_frequencies(d, grid.xi_count, grid.seed)
        nsq = _norm_sq(xis)
        for t in grid.t_grid():
            vals = mul.multiplier_batch(t, xis, 1e-14)
            decay = math.exp(-math.pi / t)
            upper = np.exp(-c_small * decay * nsq)
            lower = np.exp(-c_big * decay * nsq)
            wu = int(np.argmin(upper - vals))
            wl = int(np.argmin(vals - lower))
            records.append(
                _explicit_record("PROP1MOD", {"t": t, "d": d, "side": "upper"},
                                 vals[wu], upper[wu], d * 1e-13)
            )
            records.append(
                _explicit_record("PROP1MOD", {"t": t, "d": d, "side": "lower"},
                                 lower[wl], vals[wl], d * 1e-13)
            )
    return records


def _check_htd(grid: GridSpec, ledger: ConstantLedger, which: str):
    records = []
    for d in grid.dims:
        xis = sample_frequencies(d, grid.xi_count, grid.seed)
        nsq = _norm_sq(xis)
        for t in grid.t_grid():
            s = 1.0 / (4.0 * math.pi * t)
            vals = mul.multiplier_batch(s, xis, 1e-14)  # = H_t(xi)/H_t(0)
            if which == "HTD1":
                upper = np.exp(-nsq / (40.0 * t))
                lower = np.exp(-nsq / (4.0 * t))
            else:
                decay = math.exp(-4.0 * math.pi**2 * t)
                upper = np.exp(-ledger.value("HTD2", "c") * decay * nsq)
                lower = np.exp(-ledger.value("HTD2", "C") * decay * nsq)
            wu = int(np.argmin(upper - vals))
            wl = int(np.argmin(vals - lower))
            records.append(
                _explicit_record(which, {"t": t, "d": d, "side": "upper"},
                                 vals[wu], upper[wu], d * 1e-13)
            )
            records.append(
                _explicit_record(which, {"t": t, "d": d, "side": "lower"},
                                 lower[wl], vals[wl], d * 1e-13)
            )
    return records


def _check_htd1(grid: GridSpec, ledger: ConstantLedger):
    if grid.t_hi > 2.0**-8:
        raise IncompatibleGrid("HTD1 is stated for t < 2^-8")
    return _check_htd(grid, ledger, "HTD1")


def _check_htd2(grid: GridSpec, ledger: ConstantLedger):
    if grid.t_lo < 2.0**-8:
        raise IncompatibleGrid("HTD2 is stated for t >= 2^-8")
    return _check_htd(grid, ledger, "HTD2")


# ---------------------------------------------------------------------------
# empirical-cap checks
# ---------------------------------------------------------------------------


def _safe_sup_ratio(lhs: np.ndarray, shape: np.ndarray, floor: float = 1e-280) -> float:
    mask = shape > floor
    if not mask.any():
        return 0.0
    return float(np.max(np.abs(lhs[mask]) / shape[mask]))


def _check_est0_local(grid: GridSpec, ledger: ConstantLedger):
    cap = ledger.value("EST0_LOCAL", "cap")
    records = []
    for d in grid.dims:
        xis = sample_frequencies(d, grid.xi_count, grid.seed)
        nsq = _norm_sq(xis)
        keep = nsq > 1e-12
        xis, nsq = xis[keep], nsq[keep]
        measured = 0.0
        for t in grid.t_grid():
            gap = mul.one_minus_multiplier_batch(t, xis, 1e-14)
            shape = math.exp(-math.pi / t) * nsq
            measured = max(measured, _safe_sup_ratio(gap, shape))
        records.append(_empirical_record("EST0_LOCAL", {"d": d}, measured, cap))
    return records


def _check_deriv_1d(grid: GridSpec, ledger: ConstantLedger):
    if grid.t_lo <= 1.0:
        raise IncompatibleGrid("DERIV_1D is stated uniformly in t > 1")
    xis = sample_frequencies(1, grid.xi_count, grid.seed)[:, 0]
    xis = xis[np.abs(xis) > 1e-9]
    nmax = max(grid.orders)
    sups = {n: 0.0 for n in grid.orders}
    for t in grid.t_grid():
        stack = mul.ratio_derivs_batch(t, xis, nmax, 1e-14)
        for n in grid.orders:
            lhs = t**n * stack[n]
            shape = (t**n * np.abs(xis) ** (2 * n) + xis**2 * math.exp(-math.pi * t / 5.0)) \
                * np.exp(-math.pi * t * xis**2 / 5.0)
            sups[n] = max(sups[n], _safe_sup_ratio(lhs, shape))
    return [
        _empirical_record("DERIV_1D", {"n": n}, sups[n],
                          ledger.value("DERIV_1D", f"n={n}"))
        for n in grid.orders
    ]


def _check_deriv_d(grid: GridSpec, ledger: ConstantLedger):
    if grid.t_lo < 15.0:
        raise IncompatibleGrid("DERIV_D is stated uniformly in t >= 15")
    nmax = max(grid.orders)
    sups = {n: 0.0 for n in grid.orders}
    for d in grid.dims:
        xis = sample_frequencies(d, grid.xi_count, grid.seed)
        nsq = _norm_sq(xis)
        for t in grid.t_grid():
            stack = mul.multiplier_derivs_batch(t, xis, nmax, 1e-14)
            for n in grid.orders:
                lhs = t**n * stack[n]
                shape = np.exp(-math.pi * t * nsq * 2.0**-n / 10.0)
                sups[n] = max(sups[n], _safe_sup_ratio(lhs, shape))
    return [
        _empirical_record("DERIV_D", {"n": n}, sups[n],
                          ledger.value("DERIV_D", f"n={n}"))
        for n in grid.orders
    ]


def _check_g12(grid: GridSpec, ledger: ConstantLedger):
    if grid.t_hi > 16.0:
        raise IncompatibleGrid("G12 default domain is t <= D = 16")
    xis = sample_frequencies(1, grid.xi_count, grid.seed)[:, 0]
    xis = xis[np.abs(xis) > 1e-9]
    nmax = max(grid.orders)
    sups = {n: 0.0 for n in grid.orders}
    for t in grid.t_grid():
        stack = mul.ratio_derivs_batch(t, xis, nmax, 1e-14)
        decay = math.exp(-math.pi / t)
        for n in grid.orders:
            shape = t ** (-2 * n) * decay * xis**2 * np.exp(-decay * xis**2)
            sups[n] = max(sups[n], _safe_sup_ratio(stack[n], shape))
    return [
        _empirical_record("G12", {"n": n}, sups[n], ledger.value("G12", f"n={n}"))
        for n in grid.orders
    ]


def _check_g14(grid: GridSpec, ledger: ConstantLedger):
    if grid.t_hi > 16.0:
        raise IncompatibleGrid("G14 default domain is t <= D = 16")
    orders = tuple(sorted({0, *grid.orders}))
    nmax = max(orders)
    sups = {n: 0.0 for n in orders}
    for d in grid.dims:
        xis = sample_frequencies(d, grid.xi_count, grid.seed)
        nsq = _norm_sq(xis)
        for t in grid.t_grid():
            stack = mul.multiplier_derivs_batch(t, xis, nmax, 1e-14)
            decay = math.exp(-math.pi / t)
            for n in orders:
                cexp = ledger.value("G14", f"c{n}_D16")
                lhs = t ** (2 * n) * stack[n]
                shape = np.exp(-cexp * decay * nsq)
                sups[n] = max(sups[n], _safe_sup_ratio(lhs, shape))
    return [
        _empirical_record("G14", {"n": n}, sups[n], ledger.value("G14", f"n={n}"))
        for n in orders
    ]


def _check_psi_deriv(grid: GridSpec, ledger: ConstantLedger):
    if grid.t_hi >= 1.0:
        raise IncompatibleGrid("PSI_DERIV needs t <= c < 1")
    nmax = max(grid.orders)
    sups = {n: 0.0 for n in grid.orders}
    for d in grid.dims:
        xis = sample_frequencies(d, grid.xi_count, grid.seed)
        for t in grid.t_grid():
            u = mul.psi_inv(t)
            psi_d = mul.psi_derivatives(u, nmax)
            inner = [fr.inverse_derivative(k, psi_d) for k in range(1, nmax + 1)]
            stack = mul.multiplier_derivs_batch(u, xis, nmax, 1e-14)
            for n in grid.orders:
                comp = np.array(
                    [
                        fr.compose_derivative(n, stack[: n + 1, m], inner[:n])
                        for m in range(xis.shape[0])
                    ]
                )
                sups[n] = max(sups[n], float(np.max(np.abs(t**n * comp))))
    return [
        _empirical_record("PSI_DERIV", {"n": n}, sups[n],
                          ledger.value("PSI_DERIV", f"n={n}"))
        for n in grid.orders
    ]


# ---------------------------------------------------------------------------
# lattice-level checks
# ---------------------------------------------------------------------------


def _embed_into(frame_shape, arr, offset):
    out = np.zeros(frame_shape)
    sl = tuple(slice(o, o + s) for o, s in zip(offset, arr.shape))
    out[sl] = arr
    return out


def _check_ptwise_dom(grid: GridSpec, ledger: ConstantLedger):
    if max(grid.dims) > 3:
        raise IncompatibleGrid("PTWISE_DOM default runs at d <= 3")
    eps = 1e-10
    rng = np.random.default_rng(grid.seed)
    records = []
    for d in grid.dims:
        for sig in range(grid.n_signals):
            f = random_signal(rng, d, radius=2, nonnegative=True)
            dense, _ = f.to_dense()
            fd = dense.real
            fmax = float(fd.max())
            rad_per_t = {}
            for t in grid.times:
                rbox = lat.kernel_radius(t, d, eps)
                rad_per_t[t] = int(math.ceil(math.sqrt(d) * rbox))
            rmax = max(rad_per_t.values())
            frame = tuple(s + 2 * rmax for s in fd.shape)
            gmax = np.zeros(frame)
            for t in grid.times:
                re = rad_per_t[t]
                offs = lat.ball_offsets(d, re)
                th = theta1(1.0 / t, 0.0, _POL15).value
                kvals = np.exp(-math.pi * (offs.astype(float) ** 2).sum(1) / t) / th**d
                kern = np.zeros((2 * re + 1,) * d)
                kern[tuple((offs + re).T)] = kvals
                conv = fftconvolve(fd, kern, mode="full")
                np.maximum(gmax, _embed_into(frame, conv, (rmax - re,) * d), out=gmax)
            bmax = np.zeros(frame)
            all_offs = lat.ball_offsets(d, rmax)
            for m in sorted({int(v) for v in (all_offs**2).sum(1)}):
                offs_m = lat.ball_offsets(d, math.sqrt(m) + 1e-9)
                rm = int(np.abs(offs_m).max()) if offs_m.size else 0
                ind = np.zeros((2 * rm + 1,) * d)
                ind[tuple((offs_m + rm).T)] = 1.0 / offs_m.shape[0]
                conv = fftconvolve(fd, ind, mode="full")
                np.maximum(bmax, _embed_into(frame, conv, (rmax - rm,) * d), out=bmax)
            worst = float(np.min(bmax - gmax))
            slack = eps * fmax + 1e-11 * fmax
            records.append(
                _explicit_record("PTWISE_DOM", {"d": d, "signal": sig},
                                 -worst, 0.0, slack)
            )
    return records


def _contraction_plan(d: int, t: float) -> lat.ConvolutionPlan:
    if t <= 4.0:
        return lat.ConvolutionPlan.direct(t, TruncationPolicy(1e-12))
    side = {1: 256, 2: 64, 3: 16}.get(d, 16)
    return lat.ConvolutionPlan.spectral(t, lat.EmbeddingGrid(side, d), TruncationPolicy(1e-12))


def _check_contraction(grid: GridSpec, ledger: ConstantLedger):
    rng = np.random.default_rng(grid.seed)
    pvals = (1.0, 1.5, 2.0, 3.0, math.inf)
    records = []
    for d in grid.dims:
        for t in grid.times:
            plan = _contraction_plan(d, t)
            worst = {p: -math.inf for p in pvals}
            for _ in range(grid.n_signals):
                f = random_signal(rng, d, radius=2, complex_values=True)
                g = lat.convolve_gauss(f, plan)
                for p in pvals:
                    worst[p] = max(worst[p], lat.lp_norm(g, p) - lat.lp_norm(f, p))
            for p in pvals:
                records.append(
                    _explicit_record(
                        "CONTRACTION",
                        {"d": d, "t": t, "p": "inf" if p == math.inf else p},
                        worst[p], 0.0, 1e-10,
                    )
                )
    return records


def _check_seminorm_chain(grid: GridSpec, ledger: ConstantLedger):
    rng = np.random.default_rng(grid.seed)
    nfam = grid.n_signals
    rexps = (1.0, 2.0, 3.0)
    worst = {("688", r): math.inf for r in rexps}
    worst.update({("725", r): math.inf for r in rexps})
    worst.update({("62a", r): math.inf for r in rexps})
    worst.update({("62b", r): math.inf for r in rexps})
    for i in range(nfam):
        npts = int(rng.integers(5, 25))
        kind = i % 3
        if kind == 0:
            vals = rng.standard_normal(npts)
        elif kind == 1:
            vals = rng.standard_normal(npts) + 1j * rng.standard_normal(npts)
        else:
            vals = rng.integers(-1, 2, npts).astype(float)
        times = np.cumsum(rng.random(npts) + 0.05)
        fam = sn.SampledFamily(times, vals)
        mags = np.abs(np.asarray(vals, dtype=complex))
        scale = max(1.0, float(mags.max()))
        tol = 1e-12 * scale
        bounds = np.sort(rng.choice(times, size=min(4, npts), replace=False))
        if bounds.size >= 2 and np.all(np.diff(bounds) > 0):
            part = sn.Partition(bounds)
        else:
            part = sn.Partition([times[0], times[-1] + 1.0])
        for r in rexps:
            v = sn.variation(fam, r)
            worst[("688", r)] = min(worst[("688", r)],
                                    float(mags.min()) + v - float(mags.max()) + tol)
            for lam in (0.25, 0.5, 1.0, 2.0):
                nj = sn.jump_count(fam, lam)
                worst[("725", r)] = min(worst[("725", r)], v - lam * nj ** (1.0 / r) + tol)
            osc = sn.oscillation(fam, part, r)
            worst[("62a", r)] = min(worst[("62a", r)], v - osc + tol)
            total = 2.0 * float((mags**r).sum()) ** (1.0 / r)
            worst[("62b", r)] = min(worst[("62b", r)], total - v + tol)
    records = []
    for (name, r), margin in sorted(worst.items()):
        records.append(
            CheckRecord("SEMINORM_CHAIN", {"ineq": name, "r": r}, -margin, 0.0,
                        margin, 0.0, bool(margin >= 0.0))
        )
    return records


# ---------------------------------------------------------------------------
# fractional checks
# ---------------------------------------------------------------------------


def _check_a_integral(grid: GridSpec, ledger: ConstantLedger):
    records = []
    for alpha in (0.1, 0.5, 0.9):
        for t in (0.1, 1.0, 10.0):
            fp = fr.FracParams(alpha)
            val = fr.kernel_A_integral(t, fp)
            exact = 1.0 / math.gamma(1.0 + alpha)
            records.append(
                _explicit_record("A_INTEGRAL", {"alpha": alpha, "t": t},
                                 abs(val - exact), 1e-8, 0.0)
            )
    return records


def _check_delta_ratio(grid: GridSpec, ledger: ConstantLedger):
    records = []
    for alpha in grid.alphas:
        fp = fr.FracParams(alpha)
        measured = 0.0
        for t in (0.5, 2.0, 8.0):
            for frac in (1e-4, 1e-3, 0.01, 0.1, 0.5):
                measured = max(measured, fr.delta_kernel_ratio(t, frac * t, fp))
        records.append(
            _empirical_record("DELTA_RATIO", {"alpha": alpha}, measured,
                              ledger.value("DELTA_RATIO", f"alpha={alpha}"))
        )
    return records


def _check_frac_recon(grid: GridSpec, ledger: ConstantLedger):
    records = []
    for beta in (0.5, 1.0, 2.0):
        h = fr.power_law(beta)
        for alpha in (0.2, 0.5, 0.8):
            fp = fr.FracParams(alpha)
            for v in (0.5, 2.0, 20.0):
                rec = fr.frac_reconstruct(h, fp, v)
                exact = v**-beta
                records.append(
                    _explicit_record(
                        "FRAC_RECON",
                        {"family": "power", "beta": beta, "alpha": alpha, "v": v},
                        abs(rec - exact) / abs(exact), 1e-6, 0.0,
                    )
                )
    family = mul.GaussMultiplierFamily()
    xi = 0.2
    h = fr.family_time_function(family, xi)
    for alpha, v in ((0.3, 16.0), (0.3, 40.0), (0.5, 100.0)):
        fp = fr.FracParams(alpha)
        rec = fr.frac_reconstruct(h, fp, v)
        exact = float(family.values(np.array([v]), xi)[0]) / v
        records.append(
            _explicit_record(
                "FRAC_RECON", {"family": "gauss", "alpha": alpha, "v": v},
                abs(rec - exact) / abs(exact), 1e-5, 0.0,
            )
        )
    return records


def _check_frac_mult_recon(grid: GridSpec, ledger: ConstantLedger):
    family = mul.GaussMultiplierFamily()
    points = []
    for t in (16.0, 24.0, 40.0, 64.0):
        for xi in (0.1, 0.2, 0.35, 0.45):
            points.append((t, xi))
    alphas = (0.3, 0.4, 0.6)
    records = []
    for i, (t, xi) in enumerate(points[:20]):
        alpha = alphas[i % len(alphas)]
        fp = fr.FracParams(alpha)
        rec = fr.multiplier_reconstruct(family, fp, t, xi)
        exact = float(family.values(np.array([t]), xi)[0])
        records.append(
            _explicit_record(
                "FRAC_MULT_RECON", {"t": t, "xi": xi, "alpha": alpha},
                abs(rec - exact), 1e-5, 0.0,
            )
        )
    return records


def _check_gdiff_holder(grid: GridSpec, ledger: ConstantLedger):
    records = []
    for famname, tgrid in (("large", (16.0, 32.0, 64.0, 128.0)),
                           ("small", (0.05, 0.1, 0.2, 0.4))):
        cap = ledger.value("GDIFF_HOLDER", famname)
        for alpha in grid.alphas:
            measured = 0.0
            for d in grid.dims:
                xis = sample_frequencies(d, min(grid.xi_count, 200), grid.seed)
                for t in tgrid:
                    for frac in grid.w_fracs:
                        w = frac * t
                        if famname == "large":
                            m1 = mul.multiplier_batch(t + w, xis, 1e-14)
                            m0 = mul.multiplier_batch(t, xis, 1e-14)
                        else:
                            s1 = mul.psi_inv(mul.psi(16.0) * (t + w))
                            s0 = mul.psi_inv(mul.psi(16.0) * t)
                            m1 = mul.multiplier_batch(s1, xis, 1e-14)
                            m0 = mul.multiplier_batch(s0, xis, 1e-14)
                        dev = float(np.max(np.abs(m1 - m0)))
                        measured = max(measured, dev / (w / t) ** alpha)
            records.append(
                _empirical_record("GDIFF_HOLDER", {"family": famname, "alpha": alpha},
                                  measured, cap)
            )
    return records


# ---------------------------------------------------------------------------
# dimension-growth report
# ---------------------------------------------------------------------------


def estimate_norm_growth(
    p: float = 2.0,
    d_list=(1, 2, 3, 4),
    trials: int = 50,
    times=None,
    side: int = 16,
    seed: int = DEFAULT_SEED,
    growth_cap: float | None = None,
    rexp: float = 3.0,
) -> CertReport:
    """Empirical norm-ratio growth of the maximal / jump / variation functionals.

    For each dimension, reports the max over random trials of
    ``|| F(G_t f : t in grid) ||_p / ||f||_p`` for F = sup | . |, the best
    lambda jump functional, and the r-variation; asserts the frozen growth cap
    on the maximal-function curve between the first and last dimension.
    """
    if max(d_list) > 6:
        raise ResourceBudgetExceeded("d_list entries must be <= 6")
    times = np.geomspace(0.25, 64.0, 16) if times is None else np.asarray(times, float)
    if side ** max(d_list) * times.size * trials > 2_500_000_000:
        raise ResourceBudgetExceeded("grid x dimension product exceeds the cell cap")
    ledger = default_ledger()
    cap = ledger.value("NORM_GROWTH", "growth") if growth_cap is None else growth_cap
    rng = np.random.default_rng(seed)
    grid = GridSpec(dims=tuple(d_list), trials=trials, side=side, seed=seed)
    report = CertReport("NORM_GROWTH", seed, grid.describe())
    max_ratio = {}
    for d in d_list:
        symbols = []
        for t in times:
            axis = lat.gauss_symbol_axis(float(t), side, 1e-13)
            sym = axis
            for _ in range(d - 1):
                sym = np.multiply.outer(sym, axis)
            symbols.append(sym)
        best = {"maximal": 0.0, "jump": 0.0, "variation": 0.0}
        for _ in range(trials):
            f = random_signal(rng, d, radius=2)
            fgrid = lat.embed_to_grid(f, lat.EmbeddingGrid(side, d))
            spec = np.fft.fftn(fgrid)
            stack = np.empty((times.size, side**d), dtype=np.complex128)
            for i, sym in enumerate(symbols):
                stack[i] = np.fft.ifftn(spec * sym).ravel()
            fnorm = float(np.linalg.norm(np.abs(fgrid).ravel(), p))
            sup_vals = np.abs(stack).max(axis=0)
            best["maximal"] = max(best["maximal"],
                                  float(np.linalg.norm(sup_vals, p)) / fnorm)
            fams = np.ascontiguousarray(stack.T)
            var_vals = sn.variation_batch(fams, rexp)
            best["variation"] = max(best["variation"],
                                    float(np.linalg.norm(var_vals, p)) / fnorm)
            fmax = float(np.abs(fgrid).max())
            for lam in (0.1 * fmax, 0.25 * fmax, 0.5 * fmax):
                nj = sn.jump_count_batch(fams, lam).astype(float)
                jr = float(np.linalg.norm(lam * np.sqrt(nj), p)) / fnorm
                best["jump"] = max(best["jump"], jr)
        max_ratio[d] = best["maximal"]
        for key, val in best.items():
            report.records.append(
                CheckRecord("NORM_GROWTH", {"d": d, "functional": key},
                            float(val), math.nan, math.nan, 0.0, True)
            )
    growth = max_ratio[d_list[-1]] / max_ratio[d_list[0]]
    report.records.append(
        _explicit_record("NORM_GROWTH", {"functional": "maximal-growth"},
                         growth, cap, 0.0)
    )
    report.finalize()
    report.summary["growth_factor"] = growth
    return report


def _check_norm_growth(grid: GridSpec, ledger: ConstantLedger):
    rep = estimate_norm_growth(
        2.0, grid.dims, grid.trials, None, grid.side, grid.seed
    )
    return rep.records


# ---------------------------------------------------------------------------
# registry
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class _CheckDef:
    cid: CheckId
    runner: object
    grid: GridSpec


_G = GridSpec  # shorthand for the table below

_CHECK_TABLE = [
    (CheckId("L1_THETA0", "two-sided bound for theta_t(0)", "theta origin sandwich", "explicit"),
     _check_l1_theta0, _G(t_lo=2**-8, t_hi=2**8, t_count=65)),
    (CheckId("PS2_POISSON", "scale-inversion identity at the origin", "dual-scale identity", "explicit"),
     _check_ps2_poisson, _G(t_lo=2**-8, t_hi=2**8, t_count=33)),
    (CheckId("FT_DUAL", "agreement of the two multiplier representations", "representation cross-check", "explicit"),
     _check_ft_dual, _G(t_lo=2**-8, t_hi=2**8, t_count=33, dims=(1, 2, 4), xi_count=100)),
    (CheckId("EST0_GLOBAL", "global quadratic bound at the origin", "multiplier near origin", "explicit"),
     _check_est0_global, _G(t_lo=2**-6, t_hi=2**6, t_count=25, dims=(1, 2, 4), xi_count=500)),
    (CheckId("EST0_LOCAL", "refined small-scale bound at the origin", "multiplier near origin, small scales", "empirical"),
     _check_est0_local, _G(t_lo=2**-7, t_hi=16.0, t_count=30, dims=(1, 2, 4), xi_count=300)),
    (CheckId("LEM2", "theta bounded by rescaled origin value", "theta off-origin decay", "explicit"),
     _check_lem2, _G(t_lo=2**-6, t_hi=2**6, t_count=33, xi_count=200)),
    (CheckId("LEM4", "two-sided Gaussian comparison near the origin", "theta ratio sandwich", "explicit"),
     _check_lem4, _G(t_lo=2**-6, t_hi=2**6, t_count=25, xi_count=200)),
    (CheckId("COR1", "exponential ratio decay at large scales, 1-dim", "large-scale ratio decay", "explicit"),
     _check_cor1, _G(t_lo=15.0, t_hi=200.0, t_count=20, xi_count=300)),
    (CheckId("EST_INF", "exponential multiplier decay at large scales", "large-scale multiplier decay", "explicit"),
     _check_est_inf, _G(t_lo=15.0, t_hi=200.0, t_count=20, dims=(1, 2, 4, 8), xi_count=1000)),
    (CheckId("PROP1MOD", "explicit two-sided small-scale bounds, D = 32", "small-scale multiplier bounds", "explicit"),
     _check_prop1mod, _G(t_lo=2**-7, t_hi=32.0, t_count=40, dims=(1,), xi_count=300)),
    (CheckId("HTD1", "heat kernel bounds for very small times", "heat kernel, small time", "explicit"),
     _check_htd1, _G(t_lo=2**-11, t_hi=2**-8 * 0.999, t_count=20, dims=(1, 2, 4), xi_count=500)),
    (CheckId("HTD2", "heat kernel bounds for moderate times", "heat kernel, moderate time", "explicit"),
     _check_htd2, _G(t_lo=2**-8, t_hi=4.0, t_count=25, dims=(1, 2, 4), xi_count=500)),
    (CheckId("DERIV_1D", "1-dim ratio derivative envelope, large scales", "derivative envelope (1-dim)", "empirical"),
     _check_deriv_1d, _G(t_lo=1.05, t_hi=256.0, t_count=25, xi_count=200, orders=(1, 2, 3))),
    (CheckId("DERIV_D", "multiplier derivative envelope, large scales", "derivative envelope (d-dim)", "empirical"),
     _check_deriv_d, _G(t_lo=15.0, t_hi=200.0, t_count=12, dims=(1, 2, 4, 8), xi_count=200, orders=(1, 2, 3))),
    (CheckId("G12", "1-dim ratio derivative envelope, small scales", "derivative envelope, small scales", "empirical"),
     _check_g12, _G(t_lo=2**-7, t_hi=16.0, t_count=25, xi_count=200, orders=(1, 2, 3))),
    (CheckId("G14", "multiplier derivative envelope with derived exponents", "small-scale derivative bounds", "empirical"),
     _check_g14, _G(t_lo=2**-7, t_hi=16.0, t_count=20, dims=(1, 2, 4), xi_count=150, orders=(1, 2, 3))),
    (CheckId("PSI_DERIV", "derivative budget of the rescaled family", "rescaled-family derivatives", "empirical"),
     _check_psi_deriv, _G(t_lo=0.05, t_hi=0.9, t_count=25, dims=(1, 2, 4), xi_count=100, orders=(1, 2, 3))),
    (CheckId("PTWISE_DOM", "maximal function dominated by ball averages", "pointwise domination", "explicit"),
     _check_ptwise_dom, _G(dims=(1, 2, 3), n_signals=50, times=(0.5, 1.0, 2.0, 4.0))),
    (CheckId("SEMINORM_CHAIN", "variation / jump / oscillation comparison chain", "seminorm inequalities", "explicit"),
     _check_seminorm_chain, _G(n_signals=1000)),
    (CheckId("A_INTEGRAL", "mass of the averaging kernel", "kernel mass identity", "explicit"),
     _check_a_integral, _G()),
    (CheckId("DELTA_RATIO", "perturbed-kernel L1 difference over (w/t)^alpha", "kernel perturbation rate", "empirical"),
     _check_delta_ratio, _G(alphas=(0.3, 0.5, 0.7))),
    (CheckId("FRAC_RECON", "fractional reconstruction identity", "reconstruction identity", "explicit"),
     _check_frac_recon, _G()),
    (CheckId("FRAC_MULT_RECON", "multiplier reconstruction through p_u", "multiplier reconstruction", "explicit"),
     _check_frac_mult_recon, _G()),
    (CheckId("CONTRACTION", "l^p contraction of the convolution operators", "operator contraction", "explicit"),
     _check_contraction, _G(dims=(1, 2, 3), times=(0.5, 2.0, 16.0, 64.0), n_signals=100)),
    (CheckId("GDIFF_HOLDER", "Hoelder-in-scale multiplier differences", "scale-difference rate", "empirical"),
     _check_gdiff_holder, _G(dims=(1, 2, 4), alphas=(0.25, 0.5, 0.75), xi_count=200)),
    (CheckId("NORM_GROWTH", "empirical dimension growth of the functionals", "dimension growth report", "report"),
     _check_norm_growth, _G(dims=(1, 2, 3, 4), trials=50, side=16)),
]

REGISTRY: dict[str, _CheckDef] = {
    cid.id: _CheckDef(cid, runner, grid) for cid, runner, grid in _CHECK_TABLE
}


def list_checks() -> tuple[CheckId, ...]:
    """The full check registry in fixed order."""
    return tuple(d.cid for d in REGISTRY.values())


def run_check(check_id: str, grid: GridSpec | None = None,
              ledger: ConstantLedger | None = None) -> CertReport:
    """Run one named check on its (or the given) grid and build a report."""
    if check_id not in REGISTRY:
        raise KeyError(f"unknown check id {check_id!r}; see list_checks()")
    cdef = REGISTRY[check_id]
    grid = grid or cdef.grid
    ledger = ledger or default_ledger()
    report = CertReport(check_id, grid.seed, grid.describe())
    try:
        report.records = list(cdef.runner(grid, ledger))
    except IncompatibleGrid:
        raise
    except ThetaGaussError as exc:
        # numeric failures become a failed record so a sweep always reports
        report.records = [
            CheckRecord(check_id, {"error": type(exc).__name__}, math.inf, 0.0,
                        -math.inf, 0.0, False)
        ]
    return report.finalize()


def run_suite(suite: str = "all", seed: int | None = None,
              ledger: ConstantLedger | None = None, jobs: int = 1) -> CertReport:
    """Run every check whose mode matches the suite name.

    Suites: ``explicit``, ``empirical``, ``report``, ``all``.  Grid points of
    each check are independent work items; with jobs > 1 checks run in a
    thread pool and are merged back in registry order, so output is
    deterministic regardless of the worker count.
    """
    if suite not in ("explicit", "empirical", "report", "all"):
        raise KeyError(f"unknown suite {suite!r}")
    ledger = ledger or default_ledger()
    chosen = [d for d in REGISTRY.values() if suite in ("all", d.cid.mode)]
    grids = []
    for d in chosen:
        g = d.grid if seed is None else replace(d.grid, seed=seed)
        grids.append(g)
    results: list[list[CheckRecord]] = [None] * len(chosen)  # type: ignore
    if jobs > 1:
        from concurrent.futures import ThreadPoolExecutor

        with ThreadPoolExecutor(max_workers=jobs) as pool:
            futs = [
                pool.submit(d.runner, g, ledger) for d, g in zip(chosen, grids)
            ]
            for i, fut in enumerate(futs):
                results[i] = list(fut.result())
    else:
        for i, (d, g) in enumerate(zip(chosen, grids)):
            results[i] = list(d.runner(g, ledger))
    report = CertReport(suite, seed if seed is not None else DEFAULT_SEED,
                        {"checks": [d.cid.id for d in chosen]})
    for rec_list in results:
        report.records.extend(rec_list)
    return report.finalize()
