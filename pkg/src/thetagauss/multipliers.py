"""Fourier multiplier of the discrete Gaussian kernel and related symbols.

The multiplier admits two representations:

* theta-ratio form (tensorized): ``prod_j theta_t(xi_j) / theta_t(0)``,
* dual cosine form: per coordinate
  ``(1 + 2 sum_n e^{-pi n^2/t} cos(2 pi n xi_j)) / (1 + 2 sum_n e^{-pi n^2/t})``.

The first converges fast at large scales, the second at small scales; the
default evaluator switches at t = 1, and both pinned forms stay public so the
certification suite can compare them across the whole scale range.

t-derivatives of the per-coordinate ratio are computed by quotient-rule
recursion: at large scales on the term-wise differentiated theta series, at
small scales on the decomposition

    theta_t(xi)/theta_t(0) = 1 + J_t(xi)/theta_{1/t}(0),
    J_t(xi) = 2 sum_{l>=1} e^{-pi l^2/t} (cos(2 pi l xi) - 1),

whose terms all scale like e^{-pi/t}, so the tiny derivative values are not
produced by cancellation of large intermediates.  d-dimensional derivatives
assemble the per-coordinate stacks with the product Leibniz rule.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import backend
from ._combin import exp_inv_weights
from .errors import DerivativeOrderTooLarge, DomainError, NonPositiveScale
from .theta import (
    DEFAULT_POLICY,
    DERIVATIVE_ORDER_CAP,
    CertifiedValue,
    TorusPoint,
    TruncationPolicy,
    _check_scale,
    _radius_any,
    as_torus_point,
    product_certified,
    reduce_torus,
    tail_bound,
    theta1,
    theta1_direct,
    theta1_time_derivative,
)

__all__ = [
    "MultiplierQuery",
    "PsiValue",
    "gauss_multiplier",
    "gauss_multiplier_dual",
    "gauss_multiplier_theta",
    "gauss_multiplier_derivative",
    "ratio_derivatives_1d",
    "heat_kernel_torus",
    "semigroup_symbol",
    "littlewood_paley_symbol",
    "psi",
    "psi_inv",
    "psi_derivatives",
    "multiplier_batch",
    "ratio_batch",
    "ratio_derivs_batch",
    "multiplier_derivs_batch",
    "ratio_derivs_tvec",
    "multiplier_derivs_tvec",
    "GaussMultiplierFamily",
    "ConstantMultiplierFamily",
]

_TINY = 1e-300


@dataclass(frozen=True)
class MultiplierQuery:
    """A (t, xi) evaluation request with truncation policy and derivative order."""

    t: float
    xi: TorusPoint
    pol: TruncationPolicy = DEFAULT_POLICY
    deriv_order: int = 0

    def __post_init__(self):
        if not self.t > 0:
            raise NonPositiveScale(f"scale must be > 0, got {self.t}")
        if not 0 <= self.deriv_order <= DERIVATIVE_ORDER_CAP:
            raise DerivativeOrderTooLarge(
                f"deriv_order must lie in [0, {DERIVATIVE_ORDER_CAP}]"
            )


@dataclass(frozen=True)
class PsiValue:
    """A value in the image (0, 1) of the scale-change bijection."""

    u: float

    def __post_init__(self):
        if not 0.0 < self.u < 1.0:
            raise DomainError(f"psi value must lie in (0, 1), got {self.u}")


# ---------------------------------------------------------------------------
# certified-value arithmetic (first-order error propagation)
# ---------------------------------------------------------------------------


def _cv_add(a: CertifiedValue, b: CertifiedValue) -> CertifiedValue:
    return CertifiedValue(a.value + b.value, a.tail_bound + b.tail_bound)


def _cv_scale(c: float, a: CertifiedValue) -> CertifiedValue:
    return CertifiedValue(c * a.value, abs(c) * a.tail_bound)


def _cv_mul(a: CertifiedValue, b: CertifiedValue) -> CertifiedValue:
    tail = abs(a.value) * b.tail_bound + abs(b.value) * a.tail_bound + a.tail_bound * b.tail_bound
    return CertifiedValue(a.value * b.value, tail)


def _cv_div(a: CertifiedValue, b: CertifiedValue) -> CertifiedValue:
    denom = max(b.value - b.tail_bound, _TINY)
    v = a.value / b.value
    return CertifiedValue(v, (a.tail_bound + abs(v) * b.tail_bound) / denom)


def _quotient_recursion(num, den):
    """Derivative stack of num/den from derivative stacks of num and den.

    Works for lists of CertifiedValue (scalar path) via the helpers above.
    """
    order = len(num) - 1
    out = [_cv_div(num[0], den[0])]
    for k in range(1, order + 1):
        acc = num[k]
        for i in range(k):
            c = math.comb(k, i)
            acc = _cv_add(acc, _cv_scale(-c, _cv_mul(out[i], den[k - i])))
        out.append(_cv_div(acc, den[0]))
    return out


# ---------------------------------------------------------------------------
# per-coordinate ratio derivatives, certified
# ---------------------------------------------------------------------------


def _ratio_derivs_large(t: float, zeta: float, n: int, pol: TruncationPolicy):
    num = [theta1_time_derivative(k, t, zeta, pol) for k in range(n + 1)]
    den = [theta1_time_derivative(k, t, 0.0, pol) for k in range(n + 1)]
    return _quotient_recursion(num, den)


def _small_scale_sums(t: float, zeta: float, n: int, pol: TruncationPolicy):
    """Derivative stacks of J_t(zeta) and theta_{1/t}(0) for t < 1, certified."""
    nrad = _radius_any(1.0 / (2.0 * t), min(pol.eps * 1e-10, 1e-25), pol.max_terms)
    ell = np.arange(1, nrad + 1, dtype=np.float64)
    a = math.pi * ell * ell
    ea = np.exp(-a / t)
    cosm1 = np.cos(2.0 * math.pi * ell * zeta) - 1.0
    half_tail = 0.5 * tail_bound(1.0 / (2.0 * t), nrad + 1)

    nmom = [float((a**p * ea).sum()) for p in range(n + 1)]
    jmom = [float((a**p * ea * cosm1).sum()) for p in range(n + 1)]
    mom_tail = [t**p * (1.0 if p == 0 else (2.0 * p / math.e) ** p) * half_tail for p in range(n + 1)]

    bder = [CertifiedValue(1.0 + 2.0 * nmom[0], 2.0 * mom_tail[0])]
    jder = [CertifiedValue(2.0 * jmom[0], 4.0 * mom_tail[0])]
    for k in range(1, n + 1):
        bval = jval = btail = jtail = 0.0
        for p, w in exp_inv_weights(k):
            scale = w * t ** (-(k + p))
            sign = -1.0 if (k + p) % 2 else 1.0
            bval += sign * scale * nmom[p]
            jval += sign * scale * jmom[p]
            btail += scale * mom_tail[p]
            jtail += 2.0 * scale * mom_tail[p]
        bder.append(CertifiedValue(2.0 * bval, 2.0 * btail))
        jder.append(CertifiedValue(2.0 * jval, 2.0 * jtail))
    return jder, bder


def _ratio_derivs_small(t: float, zeta: float, n: int, pol: TruncationPolicy):
    jder, bder = _small_scale_sums(t, zeta, n, pol)
    ratio = _quotient_recursion(jder, bder)
    out = [CertifiedValue(1.0 + ratio[0].value, ratio[0].tail_bound)]
    out.extend(ratio[1:])
    return out


def ratio_derivatives_1d(
    t, zeta: float, n: int, pol: TruncationPolicy = DEFAULT_POLICY
) -> list[CertifiedValue]:
    """Certified stack [d^k/dt^k (theta_t(zeta)/theta_t(0))] for k = 0..n."""
    t = _check_scale(t)
    if not 0 <= n <= DERIVATIVE_ORDER_CAP:
        raise DerivativeOrderTooLarge(f"order must lie in [0, {DERIVATIVE_ORDER_CAP}]")
    z = float(reduce_torus(zeta))
    if t >= 1.0:
        return _ratio_derivs_large(t, z, n, pol)
    return _ratio_derivs_small(t, z, n, pol)


def _leibniz_stacks(stacks):
    """Derivative stack of a product of factors from per-factor stacks."""
    cur = list(stacks[0])
    order = len(cur) - 1
    for nxt in stacks[1:]:
        new = []
        for k in range(order + 1):
            acc = CertifiedValue(0.0, 0.0)
            for i in range(k + 1):
                acc = _cv_add(acc, _cv_scale(math.comb(k, i), _cv_mul(cur[i], nxt[k - i])))
            new.append(acc)
        cur = new
    return cur


# ---------------------------------------------------------------------------
# multiplier evaluation
# ---------------------------------------------------------------------------


def _as_query_args(q_or_t, xi=None, pol=None, deriv_order=0):
    if isinstance(q_or_t, MultiplierQuery):
        return q_or_t.t, q_or_t.xi, q_or_t.pol, q_or_t.deriv_order
    pt = as_torus_point(xi)
    return _check_scale(q_or_t), pt, pol or DEFAULT_POLICY, deriv_order


def gauss_multiplier(q_or_t, xi=None, pol: TruncationPolicy | None = None) -> CertifiedValue:
    """Multiplier of g_t at xi: prod_j theta_t(xi_j)/theta_t(0), in [0, 1].

    Uses the theta-ratio form at t >= 1 and the dual cosine form below
    (through the representation switch inside ``theta1``).
    """
    t, pt, pol, _ = _as_query_args(q_or_t, xi, pol)
    den = theta1(t, 0.0, pol)
    factors = [_cv_div(theta1(t, c, pol), den) for c in pt.coords]
    return product_certified(factors)


def gauss_multiplier_theta(q_or_t, xi=None, pol: TruncationPolicy | None = None) -> CertifiedValue:
    """Pinned theta-ratio representation (direct series regardless of t)."""
    t, pt, pol, _ = _as_query_args(q_or_t, xi, pol)
    den = theta1_direct(t, 0.0, pol)
    factors = [_cv_div(theta1_direct(t, c, pol), den) for c in pt.coords]
    return product_certified(factors)


def gauss_multiplier_dual(q_or_t, xi=None, pol: TruncationPolicy | None = None) -> CertifiedValue:
    """Pinned dual representation: tensorized cosine series at weight e^{-pi n^2/t}."""
    t, pt, pol, _ = _as_query_args(q_or_t, xi, pol)
    s = 1.0 / t
    nrad = _radius_any(s, pol.eps, pol.max_terms)
    j = np.arange(1, nrad, dtype=np.float64)
    w = np.exp(-math.pi * s * j * j)
    tail = tail_bound(s, nrad)
    den = CertifiedValue(1.0 + 2.0 * float(w.sum()), tail)
    factors = []
    for c in pt.coords:
        num = 1.0 + 2.0 * float((w * np.cos(2.0 * math.pi * j * c)).sum())
        factors.append(_cv_div(CertifiedValue(num, tail), den))
    return product_certified(factors)


def gauss_multiplier_derivative(
    q_or_t, xi=None, pol: TruncationPolicy | None = None, deriv_order: int | None = None
) -> CertifiedValue:
    """n-th t-derivative of the multiplier via per-coordinate quotient recursion
    and the product Leibniz rule across coordinates."""
    t, pt, pol, n = _as_query_args(q_or_t, xi, pol, deriv_order or 0)
    if deriv_order is not None:
        n = deriv_order
    if not 1 <= n <= DERIVATIVE_ORDER_CAP:
        raise DerivativeOrderTooLarge("deriv_order must be >= 1 (use gauss_multiplier for n=0)")
    stacks = [ratio_derivatives_1d(t, c, n, pol) for c in pt.coords]
    return _leibniz_stacks(stacks)[n]


# ---------------------------------------------------------------------------
# heat kernel, semigroup symbols, scale change
# ---------------------------------------------------------------------------


def heat_kernel_torus(t, xi, pol: TruncationPolicy | None = None) -> CertifiedValue:
    """Heat kernel on T^d: H_t(xi) = (4 pi t)^{-d/2} Theta_{1/(4 pi t)}(xi)."""
    t = _check_scale(t)
    pol = pol or DEFAULT_POLICY
    pt = as_torus_point(xi)
    s = 1.0 / (4.0 * math.pi * t)
    pref = (4.0 * math.pi * t) ** (-pt.dim / 2.0)
    prod = product_certified([theta1(s, c, pol) for c in pt.coords])
    return _cv_scale(pref, prod)


def semigroup_symbol(t, xi) -> float:
    """Discrete heat semigroup symbol exp(-t sum_i sin^2(pi xi_i)).  Exact."""
    t = _check_scale(t)
    pt = as_torus_point(xi)
    acc = float((np.sin(math.pi * np.asarray(pt.coords)) ** 2).sum())
    return math.exp(-t * acc)


def littlewood_paley_symbol(j: int, xi) -> float:
    """Dyadic band symbol q_{2^{j-1}}(xi) - q_{2^j}(xi)."""
    return semigroup_symbol(2.0 ** (j - 1), xi) - semigroup_symbol(2.0**j, xi)


def psi(t) -> float:
    """Increasing bijection (0, inf) -> (0, 1): psi(t) = exp(-pi / t)."""
    t = _check_scale(t)
    return math.exp(-math.pi / t)


def psi_inv(u) -> float:
    """Inverse of the scale-change bijection: psi_inv(u) = -pi / log(u)."""
    u = u.u if isinstance(u, PsiValue) else float(u)
    if not 0.0 < u < 1.0:
        raise DomainError(f"psi_inv needs u in (0, 1), got {u}")
    return -math.pi / math.log(u)


def psi_derivatives(u: float, n: int) -> list[float]:
    """[psi^(j)(u) for j = 1..n], from the exp(-a/u) derivative expansion."""
    u = _check_scale(u)
    base = math.exp(-math.pi / u)
    out = []
    for k in range(1, n + 1):
        acc = 0.0
        for p, w in exp_inv_weights(k):
            sign = -1.0 if (k + p) % 2 else 1.0
            acc += sign * w * math.pi**p * u ** (-(k + p))
        out.append(base * acc)
    return out


# ---------------------------------------------------------------------------
# batched (uncertified) evaluators used by the certification sweeps;
# cross-checked against the certified scalar path in the tests
# ---------------------------------------------------------------------------


def ratio_batch(t: float, xi: np.ndarray, eps: float = 1e-14) -> np.ndarray:
    """theta_t(xi)/theta_t(0) over an array of one-dimensional frequencies."""
    t = _check_scale(t)
    xi = reduce_torus(np.asarray(xi, dtype=np.float64))
    if t >= 1.0:
        n = _radius_any(t, eps, 100_000)
        return backend.gauss_ratio_batch(t, np.ascontiguousarray(xi), n - 1)
    s = 1.0 / t
    n = _radius_any(s, eps, 100_000)
    return backend.cosine_ratio_batch(s, np.ascontiguousarray(xi), n - 1)


def multiplier_batch(t: float, xi: np.ndarray, eps: float = 1e-14) -> np.ndarray:
    """Multiplier over an (M, d) array of frequencies (product across columns)."""
    xi = np.atleast_2d(np.asarray(xi, dtype=np.float64))
    out = np.ones(xi.shape[0])
    for c in range(xi.shape[1]):
        out *= ratio_batch(t, xi[:, c], eps)
    return out


def one_minus_ratio_batch(t: float, xi: np.ndarray, eps: float = 1e-14) -> np.ndarray:
    """1 - theta_t(xi)/theta_t(0) by its positive-term dual series.

    At small scales the ratio itself rounds to 1 in double precision; this
    series represents the gap with full relative accuracy at any scale:

        1 - r = 2 sum_{j>=1} e^{-pi j^2/t} (1 - cos(2 pi j xi)) / theta_{1/t}(0).
    """
    t = _check_scale(t)
    xi = reduce_torus(np.asarray(xi, dtype=np.float64))
    s = 1.0 / t
    n = _radius_any(s, eps, 100_000)
    j = np.arange(1, max(n, 2), dtype=np.float64)
    w = np.exp(-math.pi * s * j * j)
    den = 1.0 + 2.0 * float(w.sum())
    # 1 - cos(2 pi j xi) = 2 sin^2(pi j xi), evaluated in the stable form
    gaps = 2.0 * np.sin(math.pi * np.multiply.outer(xi, j)) ** 2
    return (2.0 * (gaps @ w)) / den


def one_minus_multiplier_batch(t: float, xi: np.ndarray, eps: float = 1e-14) -> np.ndarray:
    """1 - multiplier over (M, d) frequencies, cancellation-free.

    Expands 1 - prod_j r_j = sum_j (1 - r_j) prod_{i<j} r_i with every factor
    nonnegative, so the result keeps relative accuracy even when the product
    is within double round-off of 1.
    """
    xi = np.atleast_2d(np.asarray(xi, dtype=np.float64))
    acc = np.zeros(xi.shape[0])
    prefix = np.ones(xi.shape[0])
    for c in range(xi.shape[1]):
        q = one_minus_ratio_batch(t, xi[:, c], eps)
        acc += prefix * q
        prefix *= 1.0 - q
    return acc


def _theta_deriv_sums_batch(t: float, xi: np.ndarray, n: int, eps: float):
    """[sum_j (-pi (j-xi)^2)^k e^{-pi t (j-xi)^2}]_{k=0..n} over an xi array."""
    coeff = (1.0 if n == 0 else (2.0 * n / math.e) ** n) * t ** (-n)
    nrad = 1
    while coeff * tail_bound(t / 2.0, nrad) > eps:
        nrad += 1
        if nrad > 100_000:
            raise RuntimeError("derivative radius runaway")
    k = np.arange(-nrad + 1, nrad, dtype=np.float64)
    out = np.empty((n + 1, xi.size))
    for lo in range(0, xi.size, 4096):
        blk = xi[lo : lo + 4096, None]
        q = (k[None, :] - blk) ** 2
        e = np.exp(-math.pi * t * q)
        mq = -math.pi * q
        acc = e
        out[0, lo : lo + 4096] = acc.sum(axis=1)
        for kk in range(1, n + 1):
            acc = acc * mq
            out[kk, lo : lo + 4096] = acc.sum(axis=1)
    return out


def ratio_derivs_batch(t: float, xi: np.ndarray, n: int, eps: float = 1e-13) -> np.ndarray:
    """(n+1, M) array of d^k/dt^k (theta_t(xi)/theta_t(0)) over an xi array."""
    t = _check_scale(t)
    xi = reduce_torus(np.asarray(xi, dtype=np.float64))
    if t >= 1.0:
        num = _theta_deriv_sums_batch(t, xi, n, eps)
        den = _theta_deriv_sums_batch(t, np.zeros(1), n, eps)[:, 0]
        out = np.empty_like(num)
        out[0] = num[0] / den[0]
        for k in range(1, n + 1):
            acc = num[k].copy()
            for i in range(k):
                acc -= math.comb(k, i) * out[i] * den[k - i]
            out[k] = acc / den[0]
        return out

    nrad = _radius_any(1.0 / (2.0 * t), min(eps * 1e-8, 1e-24), 100_000)
    ell = np.arange(1, nrad + 1, dtype=np.float64)
    a = math.pi * ell * ell
    ea = np.exp(-a / t)
    cosm1 = np.cos(2.0 * math.pi * np.multiply.outer(xi, ell)) - 1.0
    nmom = np.array([(a**p * ea).sum() for p in range(n + 1)])
    jmom = np.stack([cosm1 @ (a**p * ea) for p in range(n + 1)])
    bder = np.empty(n + 1)
    jder = np.empty((n + 1, xi.size))
    bder[0] = 1.0 + 2.0 * nmom[0]
    jder[0] = 2.0 * jmom[0]
    for k in range(1, n + 1):
        bacc = 0.0
        jacc = np.zeros(xi.size)
        for p, w in exp_inv_weights(k):
            sign = -1.0 if (k + p) % 2 else 1.0
            scale = sign * w * t ** (-(k + p))
            bacc += scale * nmom[p]
            jacc += scale * jmom[p]
        bder[k] = 2.0 * bacc
        jder[k] = 2.0 * jacc
    out = np.empty((n + 1, xi.size))
    cstack = np.empty((n + 1, xi.size))
    cstack[0] = jder[0] / bder[0]
    for k in range(1, n + 1):
        acc = jder[k].copy()
        for i in range(k):
            acc -= math.comb(k, i) * cstack[i] * bder[k - i]
        cstack[k] = acc / bder[0]
    out[0] = 1.0 + cstack[0]
    out[1:] = cstack[1:]
    return out


def multiplier_derivs_batch(t: float, xi: np.ndarray, n: int, eps: float = 1e-13) -> np.ndarray:
    """(n+1, M) derivative stack of the multiplier over (M, d) frequencies."""
    xi = np.atleast_2d(np.asarray(xi, dtype=np.float64))
    cur = ratio_derivs_batch(t, xi[:, 0], n, eps)
    for c in range(1, xi.shape[1]):
        nxt = ratio_derivs_batch(t, xi[:, c], n, eps)
        new = np.zeros_like(cur)
        for k in range(n + 1):
            for i in range(k + 1):
                new[k] += math.comb(k, i) * cur[i] * nxt[k - i]
        cur = new
    return cur


def _ratio_derivs_tvec_large(ts: np.ndarray, zeta: float, n: int, eps: float) -> np.ndarray:
    tmin = float(ts.min())
    coeff = (1.0 if n == 0 else (2.0 * n / math.e) ** n) * tmin ** (-n)
    nrad = 1
    while coeff * tail_bound(tmin / 2.0, nrad) > eps:
        nrad += 1
    k = np.arange(-nrad, nrad + 1, dtype=np.float64)
    q = (k - zeta) ** 2
    q0 = k**2

    def stacks(qq):
        e = np.exp(-math.pi * np.multiply.outer(ts, qq))
        out = np.empty((n + 1, ts.size))
        acc = e
        out[0] = acc.sum(axis=1)
        for kk in range(1, n + 1):
            acc = acc * (-math.pi * qq)[None, :]
            out[kk] = acc.sum(axis=1)
        return out

    num = stacks(q)
    den = stacks(q0)
    out = np.empty((n + 1, ts.size))
    out[0] = num[0] / den[0]
    for kk in range(1, n + 1):
        acc = num[kk].copy()
        for i in range(kk):
            acc -= math.comb(kk, i) * out[i] * den[kk - i]
        out[kk] = acc / den[0]
    return out


def _ratio_derivs_tvec_small(ts: np.ndarray, zeta: float, n: int, eps: float) -> np.ndarray:
    tmin = float(ts.min())
    nrad = _radius_any(1.0 / (2.0 * tmin), min(eps * 1e-8, 1e-24), 100_000)
    ell = np.arange(1, nrad + 1, dtype=np.float64)
    a = math.pi * ell * ell
    ea = np.exp(-np.multiply.outer(1.0 / ts, a))
    cosm1 = np.cos(2.0 * math.pi * ell * zeta) - 1.0
    nmom = np.stack([(a**p * ea).sum(axis=1) for p in range(n + 1)])
    jmom = np.stack([(a**p * cosm1 * ea).sum(axis=1) for p in range(n + 1)])
    bder = np.empty((n + 1, ts.size))
    jder = np.empty((n + 1, ts.size))
    bder[0] = 1.0 + 2.0 * nmom[0]
    jder[0] = 2.0 * jmom[0]
    for kk in range(1, n + 1):
        bacc = np.zeros(ts.size)
        jacc = np.zeros(ts.size)
        for p, w in exp_inv_weights(kk):
            sign = -1.0 if (kk + p) % 2 else 1.0
            scale = sign * w * ts ** (-(kk + p))
            bacc += scale * nmom[p]
            jacc += scale * jmom[p]
        bder[kk] = 2.0 * bacc
        jder[kk] = 2.0 * jacc
    cstack = np.empty((n + 1, ts.size))
    cstack[0] = jder[0] / bder[0]
    for kk in range(1, n + 1):
        acc = jder[kk].copy()
        for i in range(kk):
            acc -= math.comb(kk, i) * cstack[i] * bder[kk - i]
        cstack[kk] = acc / bder[0]
    out = cstack
    out[0] = 1.0 + out[0]
    return out


def ratio_derivs_tvec(ts: np.ndarray, zeta: float, n: int, eps: float = 1e-13) -> np.ndarray:
    """(n+1, T) ratio derivative stack over an array of scales at fixed zeta."""
    ts = np.asarray(ts, dtype=np.float64)
    z = float(reduce_torus(zeta))
    out = np.empty((n + 1, ts.size))
    large = ts >= 1.0
    if large.any():
        out[:, large] = _ratio_derivs_tvec_large(ts[large], z, n, eps)
    if (~large).any():
        out[:, ~large] = _ratio_derivs_tvec_small(ts[~large], z, n, eps)
    return out


def multiplier_derivs_tvec(ts: np.ndarray, xi, n: int, eps: float = 1e-13) -> np.ndarray:
    """(n+1, T) multiplier derivative stack over an array of scales."""
    pt = as_torus_point(xi)
    cur = ratio_derivs_tvec(ts, pt.coords[0], n, eps)
    for c in pt.coords[1:]:
        nxt = ratio_derivs_tvec(ts, c, n, eps)
        new = np.zeros_like(cur)
        for k in range(n + 1):
            for i in range(k + 1):
                new[k] += math.comb(k, i) * cur[i] * nxt[k - i]
        cur = new
    return cur


@dataclass(frozen=True)
class GaussMultiplierFamily:
    """Vectorized-in-scale handle for the Gaussian multiplier family.

    Satisfies the family protocol of the fractional module: ``values(ts, xi)``
    and ``deriv_stack(ts, xi, n)`` with ts an array of scales.
    """

    eps: float = 1e-13

    def values(self, ts, xi) -> np.ndarray:
        return self.deriv_stack(ts, xi, 0)[0]

    def deriv_stack(self, ts, xi, n: int) -> np.ndarray:
        return multiplier_derivs_tvec(np.asarray(ts, dtype=np.float64), xi, n, self.eps)


@dataclass(frozen=True)
class ConstantMultiplierFamily:
    """m_t == 1; the closed-form end of the fractional-multiplier identities."""

    def values(self, ts, xi) -> np.ndarray:
        return np.ones_like(np.asarray(ts, dtype=np.float64))

    def deriv_stack(self, ts, xi, n: int) -> np.ndarray:
        ts = np.asarray(ts, dtype=np.float64)
        out = np.zeros((n + 1, ts.size))
        out[0] = 1.0
        return out
