"""Certified evaluation of the one- and d-dimensional theta functions.

The one-dimensional object is the Gaussian periodization

    theta_t(zeta) = sum_k exp(-pi (k - zeta)^2 t),   t > 0,  zeta in [-1/2, 1/2),

its d-dimensional variant is the product over coordinates.  Every evaluation
returns a :class:`CertifiedValue` carrying a rigorous bound on the discarded
series tail.  Two representations are available:

* the *direct* series above, geometrically convergent for t >= 1,
* the *dual* (Poisson-summed) cosine series
  ``t^{-1/2} * (1 + 2 sum_n exp(-pi n^2 / t) cos(2 pi n zeta))``,
  geometrically convergent for t <= 1.

The default entry points switch representation at t = 1 so the effective
series parameter max(t, 1/t) is always >= 1 and roughly five terms reach
eps = 1e-15.  Both pinned paths stay public because the certification suite
cross-validates them against each other.

Tail bound: for the series at effective parameter ``s`` with shift in
[-1/2, 1/2), the terms with |k| >= N are dominated by
``exp(-pi s (N - 1/2)^2) * exp(-pi s (k - N))``, so

    tail(N) = 2 exp(-pi s (N - 1/2)^2) / (1 - exp(-pi s)).

Round-off is not tracked; reports budget a separate 1e-13 slack for it.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .errors import (
    DerivativeOrderTooLarge,
    DimensionMismatch,
    NonPositiveScale,
    TruncationBudgetExceeded,
)

DERIVATIVE_ORDER_CAP = 8

__all__ = [
    "CertifiedValue",
    "ScaleParam",
    "TorusPoint",
    "TruncationPolicy",
    "DEFAULT_POLICY",
    "reduce_torus",
    "theta1",
    "theta1_direct",
    "theta1_poisson",
    "theta_d",
    "theta1_time_derivative",
    "truncation_radius",
]


def reduce_torus(x) -> np.ndarray:
    """Reduce coordinates mod 1 into [-1/2, 1/2)."""
    x = np.asarray(x, dtype=np.float64)
    return x - np.floor(x + 0.5)


@dataclass(frozen=True)
class ScaleParam:
    """A strictly positive scale parameter."""

    t: float

    def __post_init__(self):
        if not self.t > 0:
            raise NonPositiveScale(f"scale must be > 0, got {self.t}")


@dataclass(frozen=True)
class TorusPoint:
    """A frequency in T^d, stored with coordinates reduced into [-1/2, 1/2)."""

    coords: tuple[float, ...]

    def __init__(self, coords: Sequence[float]):
        arr = reduce_torus(np.atleast_1d(np.asarray(coords, dtype=np.float64)))
        if arr.ndim != 1 or arr.size < 1:
            raise DimensionMismatch("TorusPoint needs at least one coordinate")
        object.__setattr__(self, "coords", tuple(float(c) for c in arr))

    @property
    def dim(self) -> int:
        return len(self.coords)

    def norm_sq(self) -> float:
        return float(sum(c * c for c in self.coords))


def as_torus_point(xi, dim: int | None = None) -> TorusPoint:
    """Coerce a scalar / sequence / TorusPoint, checking the dimension."""
    pt = xi if isinstance(xi, TorusPoint) else TorusPoint(np.atleast_1d(xi))
    if dim is not None and pt.dim != dim:
        raise DimensionMismatch(f"expected dimension {dim}, got {pt.dim}")
    return pt


@dataclass(frozen=True)
class TruncationPolicy:
    """Target absolute truncation error and a hard cap on series length."""

    eps: float = 1e-14
    max_terms: int = 10_000

    def __post_init__(self):
        if not self.eps > 0:
            raise ValueError("eps must be positive")
        if self.max_terms < 3:
            raise ValueError("max_terms must be >= 3")


DEFAULT_POLICY = TruncationPolicy()


@dataclass(frozen=True)
class CertifiedValue:
    """A numeric result with a rigorous absolute truncation-error bound.

    The true mathematical value lies in [value - tail_bound, value + tail_bound].
    """

    value: float
    tail_bound: float

    def __post_init__(self):
        if self.tail_bound < 0:
            raise ValueError("tail_bound must be nonnegative")


def _check_scale(t: float) -> float:
    t = t.t if isinstance(t, ScaleParam) else float(t)
    if not t > 0 or math.isnan(t):
        raise NonPositiveScale(f"scale must be > 0, got {t}")
    return t


def tail_bound(t_eff: float, n_first_excluded: int) -> float:
    """Certified bound on the series tail over |k| >= N for shift in [-1/2,1/2)."""
    x = math.pi * t_eff
    return 2.0 * math.exp(-x * (n_first_excluded - 0.5) ** 2) / (-math.expm1(-x))


def _radius_any(t_eff: float, eps: float, max_terms: int) -> int:
    """Smallest N with tail_bound(t_eff, N) <= eps, for any t_eff > 0."""
    n = 1
    while tail_bound(t_eff, n) > eps:
        n += 1
        if n > max_terms:
            raise TruncationBudgetExceeded(
                f"no N <= {max_terms} certifies tail <= {eps} at t_eff={t_eff}"
            )
    return n


def truncation_radius(t_eff: float, eps: float, max_terms: int = 10_000) -> int:
    """Smallest truncation radius certifying a tail <= eps.

    The caller is expected to have applied representation switching already,
    so ``t_eff >= 1`` and at most a handful of terms survive.
    """
    t_eff = _check_scale(t_eff)
    if t_eff < 1.0:
        raise ValueError("truncation_radius expects t_eff >= 1 (switch representations first)")
    return _radius_any(t_eff, eps, max_terms)


def theta1_direct(t, zeta: float, pol: TruncationPolicy = DEFAULT_POLICY) -> CertifiedValue:
    """theta_t(zeta) by the direct Gaussian series (pinned representation)."""
    t = _check_scale(t)
    z = float(reduce_torus(zeta))
    n = _radius_any(t, pol.eps, pol.max_terms)
    k = np.arange(-n + 1, n, dtype=np.float64)
    val = float(np.exp(-math.pi * t * (k - z) ** 2).sum())
    return CertifiedValue(val, tail_bound(t, n))


def theta1_poisson(t, zeta: float, pol: TruncationPolicy = DEFAULT_POLICY) -> CertifiedValue:
    """theta_t(zeta) by the Poisson-summed cosine series (pinned representation).

    Identity used:  theta_t(zeta) = t^{-1/2} sum_n exp(-pi n^2 / t) cos(2 pi n zeta).
    """
    t = _check_scale(t)
    z = float(reduce_torus(zeta))
    s = 1.0 / t
    pref = math.sqrt(s)
    n = _radius_any(s, pol.eps / pref, pol.max_terms)
    j = np.arange(1, n, dtype=np.float64)
    series = 1.0 + 2.0 * float((np.exp(-math.pi * s * j * j) * np.cos(2.0 * math.pi * j * z)).sum())
    return CertifiedValue(pref * series, pref * tail_bound(s, n))


def theta1(t, zeta: float, pol: TruncationPolicy = DEFAULT_POLICY) -> CertifiedValue:
    """theta_t(zeta), switching representation at t = 1 (effective parameter >= 1)."""
    t = _check_scale(t)
    if t >= 1.0:
        return theta1_direct(t, zeta, pol)
    return theta1_poisson(t, zeta, pol)


def product_certified(factors: Sequence[CertifiedValue]) -> CertifiedValue:
    """Product of certified factors with first-order error accumulation.

    The attached bound is sum_j tail_j * prod_{i != j} (|v_i| + tail_i), an
    upper bound on the interval product's half-width for small tails.
    """
    val = 1.0
    for f in factors:
        val *= f.value
    tail = 0.0
    for j, fj in enumerate(factors):
        part = fj.tail_bound
        for i, fi in enumerate(factors):
            if i != j:
                part *= abs(fi.value) + fi.tail_bound
        tail += part
    return CertifiedValue(val, tail)


def theta_d(t, xi, pol: TruncationPolicy = DEFAULT_POLICY) -> CertifiedValue:
    """Theta_t(xi) = prod_j theta_t(xi_j) with multiplicative tail propagation."""
    t = _check_scale(t)
    pt = as_torus_point(xi)
    return product_certified([theta1(t, c, pol) for c in pt.coords])


def _deriv_coeff(n: int) -> float:
    """c_n in the domination x^n e^{-x} <= c_n e^{-x/2} for x > 0 (c_n = (2n/e)^n)."""
    return 1.0 if n == 0 else (2.0 * n / math.e) ** n


def theta1_time_derivative(
    n: int, t, zeta: float, pol: TruncationPolicy = DEFAULT_POLICY
) -> CertifiedValue:
    """n-th t-derivative of theta_t(zeta) by term-wise differentiation.

    Terms are (-pi (j - zeta)^2)^n exp(-pi t (j - zeta)^2); they share one
    sign, so the sum has no cancellation across j.  The tail uses
    x^n e^{-x} <= (2n/e)^n e^{-x/2} to reduce to the plain theta tail at t/2.
    """
    if n < 0:
        raise DerivativeOrderTooLarge("derivative order must be >= 0")
    if n > DERIVATIVE_ORDER_CAP:
        raise DerivativeOrderTooLarge(f"order {n} exceeds cap {DERIVATIVE_ORDER_CAP}")
    t = _check_scale(t)
    if n == 0:
        return theta1(t, zeta, pol)
    z = float(reduce_torus(zeta))
    coeff = _deriv_coeff(n) * t ** (-n)

    def _tail(nn: int) -> float:
        return coeff * tail_bound(t / 2.0, nn)

    nrad = 1
    while _tail(nrad) > pol.eps:
        nrad += 1
        if nrad > pol.max_terms:
            raise TruncationBudgetExceeded(
                f"derivative tail does not reach eps={pol.eps} within {pol.max_terms} terms"
            )
    j = np.arange(-nrad + 1, nrad, dtype=np.float64)
    q = (j - z) ** 2
    val = float(((-math.pi * q) ** n * np.exp(-math.pi * t * q)).sum())
    return CertifiedValue(val, _tail(nrad))
