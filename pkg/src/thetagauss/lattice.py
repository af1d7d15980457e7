"""Finitely supported signals on Z^d and the convolution operators on them.

Signals are canonical sparse maps from integer tuples to complex values.
Convolution with the discrete Gaussian kernel g_t runs on two independent
paths:

* ``direct``: the kernel is truncated to an l^infinity box whose certified
  discarded l^1 mass is below the policy eps, and the convolution is summed
  literally (backend hot kernel),
* ``spectral``: the signal is embedded in a periodic L^d grid and multiplied
  on the Fourier side by the multiplier sampled at grid frequencies, which is
  exactly circular convolution with the periodized kernel; the wraparound
  error is certified from the kernel's spatial decay.

The semigroup Q_t and the dyadic band operators S_j use the same spectral
pipeline with the exact symbol.  Ball averages support the pointwise
domination check of the maximal function by maximal ball averages.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace

import numpy as np

from . import backend
from .errors import (
    GridTooSmall,
    InvalidExponent,
    NonPositiveScale,
    TruncationBudgetExceeded,
)
from .theta import (
    DEFAULT_POLICY,
    CertifiedValue,
    TruncationPolicy,
    _check_scale,
    tail_bound,
    theta1,
)
from .multipliers import ratio_batch

__all__ = [
    "LatticeSignal",
    "EmbeddingGrid",
    "ConvolutionPlan",
    "gauss_kernel_value",
    "kernel_radius",
    "convolve_gauss",
    "convolve_semigroup",
    "littlewood_paley_apply",
    "lp_norm",
    "ball_average",
    "ball_offsets",
    "maximal_over_times",
    "wraparound_bound",
    "read_signal",
    "write_signal",
]


@dataclass(frozen=True)
class LatticeSignal:
    """Finitely supported complex signal on Z^d (no explicit zero entries)."""

    dim: int
    entries: dict

    def __init__(self, dim: int, entries):
        if dim < 1:
            raise ValueError("dim must be >= 1")
        clean = {}
        for key, val in dict(entries).items():
            k = tuple(int(c) for c in key)
            if len(k) != dim:
                raise ValueError(f"key {k} does not have {dim} coordinates")
            v = complex(val)
            if v != 0:
                clean[k] = v
        object.__setattr__(self, "dim", int(dim))
        object.__setattr__(self, "entries", clean)

    @property
    def support_radius(self) -> int:
        if not self.entries:
            return 0
        return max(max(abs(c) for c in k) for k in self.entries)

    def __len__(self) -> int:
        return len(self.entries)

    def __add__(self, other: "LatticeSignal") -> "LatticeSignal":
        if other.dim != self.dim:
            raise ValueError("dimension mismatch")
        acc = dict(self.entries)
        for k, v in other.entries.items():
            acc[k] = acc.get(k, 0.0) + v
        return LatticeSignal(self.dim, acc)

    def __sub__(self, other: "LatticeSignal") -> "LatticeSignal":
        return self + other.scale(-1.0)

    def scale(self, c: complex) -> "LatticeSignal":
        return LatticeSignal(self.dim, {k: c * v for k, v in self.entries.items()})

    def is_real(self, tol: float = 0.0) -> bool:
        return all(abs(v.imag) <= tol for v in self.entries.values())

    @classmethod
    def delta(cls, dim: int) -> "LatticeSignal":
        return cls(dim, {(0,) * dim: 1.0})

    def to_dense(self, pad: int = 0):
        """Dense box holding the support (plus pad); returns (array, lo_corner)."""
        if not self.entries:
            lo = (0,) * self.dim
            return np.zeros((1 + 2 * pad,) * self.dim, dtype=np.complex128), tuple(
                c - pad for c in lo
            )
        keys = np.array(list(self.entries), dtype=np.int64).reshape(len(self.entries), self.dim)
        lo = keys.min(axis=0) - pad
        hi = keys.max(axis=0) + pad
        arr = np.zeros(tuple(hi - lo + 1), dtype=np.complex128)
        idx = (keys - lo).T
        arr[tuple(idx)] = list(self.entries.values())
        return arr, tuple(int(c) for c in lo)

    @classmethod
    def from_dense(cls, arr: np.ndarray, lo, dim: int | None = None) -> "LatticeSignal":
        arr = np.asarray(arr)
        d = dim if dim is not None else arr.ndim
        ent = {}
        for idx in np.argwhere(arr != 0):
            ent[tuple(int(i + l) for i, l in zip(idx, lo))] = complex(arr[tuple(idx)])
        return cls(d, ent)


@dataclass(frozen=True)
class EmbeddingGrid:
    """Periodization carrier for the spectral path: an even L^d grid."""

    side: int
    dim: int

    def __post_init__(self):
        if self.side < 2 or self.side % 2:
            raise ValueError("grid side must be a positive even integer")
        if self.dim < 1:
            raise ValueError("dim must be >= 1")

    def check_fits(self, f: LatticeSignal):
        if f.dim != self.dim:
            raise GridTooSmall("grid dimension does not match the signal")
        if self.side < 2 * f.support_radius + 2:
            raise GridTooSmall(
                f"side {self.side} < 2*support_radius+2 = {2 * f.support_radius + 2}"
            )


@dataclass(frozen=True)
class ConvolutionPlan:
    """How to apply G_t: direct truncated kernel or spectral on a grid."""

    method: str
    t: float
    pol: TruncationPolicy = DEFAULT_POLICY
    kernel_radius: int | None = None
    grid: EmbeddingGrid | None = None

    def __post_init__(self):
        if self.method not in ("direct_truncated", "spectral"):
            raise ValueError("method must be direct_truncated or spectral")
        if not self.t > 0:
            raise NonPositiveScale(f"scale must be > 0, got {self.t}")
        if self.method == "spectral" and self.grid is None:
            raise ValueError("spectral plan needs an EmbeddingGrid")

    @classmethod
    def direct(cls, t, pol: TruncationPolicy = DEFAULT_POLICY, kernel_radius=None):
        return cls("direct_truncated", float(t), pol, kernel_radius, None)

    @classmethod
    def spectral(cls, t, grid: EmbeddingGrid, pol: TruncationPolicy = DEFAULT_POLICY):
        return cls("spectral", float(t), pol, None, grid)

    def with_t(self, t) -> "ConvolutionPlan":
        return replace(self, t=float(t))


# ---------------------------------------------------------------------------
# kernel values and truncation radii
# ---------------------------------------------------------------------------


def gauss_kernel_value(t, n, pol: TruncationPolicy = DEFAULT_POLICY) -> CertifiedValue:
    """g_t(n) = exp(-pi |n|^2 / t) / Theta_{1/t}(0), certified."""
    t = _check_scale(t)
    n = np.atleast_1d(np.asarray(n, dtype=np.int64))
    th = theta1(1.0 / t, 0.0, pol)
    den_val = th.value**n.size
    den_tail = n.size * (th.value + th.tail_bound) ** (n.size - 1) * th.tail_bound
    num = math.exp(-math.pi * float(n @ n) / t)
    val = num / den_val
    lower = max(den_val - den_tail, 1e-300)
    return CertifiedValue(val, num * den_tail / (den_val * lower))


def _mass_tail_1d(t: float, radius: int) -> float:
    """Certified bound on the one-dimensional kernel mass at |m| > radius."""
    return tail_bound(1.0 / t, radius + 1)  # theta_{1/t}(0) >= 1 absorbed


def kernel_radius(t: float, dim: int, eps: float, cap: int = 100_000) -> int:
    """Smallest box radius with certified discarded l^1 mass d*tail <= eps."""
    t = _check_scale(t)
    r = 0
    while dim * _mass_tail_1d(t, r) > eps:
        r += 1
        if r > cap:
            raise TruncationBudgetExceeded(
                f"no radius <= {cap} certifies kernel mass <= {eps} at t={t}"
            )
    return r


def _kernel_box(t: float, dim: int, radius: int, pol: TruncationPolicy):
    """Offsets (K, d) and values (K,) of the truncated product kernel."""
    th = theta1(1.0 / t, 0.0, pol).value
    m = np.arange(-radius, radius + 1, dtype=np.int64)
    w1 = np.exp(-math.pi * m.astype(np.float64) ** 2 / t) / th
    grids = np.meshgrid(*([m] * dim), indexing="ij")
    koff = np.stack([g.ravel() for g in grids], axis=1)
    kval = np.ones(koff.shape[0])
    for a in range(dim):
        kval *= w1[koff[:, a] + radius]
    return koff, kval


# ---------------------------------------------------------------------------
# spectral pipeline
# ---------------------------------------------------------------------------


def embed_to_grid(f: LatticeSignal, grid: EmbeddingGrid) -> np.ndarray:
    grid.check_fits(f)
    arr = np.zeros((grid.side,) * grid.dim, dtype=np.complex128)
    for k, v in f.entries.items():
        arr[tuple(c % grid.side for c in k)] += v
    return arr


def grid_to_signal(arr: np.ndarray, dim: int) -> LatticeSignal:
    side = arr.shape[0]
    ent = {}
    for idx in np.argwhere(arr != 0):
        key = tuple(int(c) - side if c >= side // 2 else int(c) for c in idx)
        ent[key] = complex(arr[tuple(idx)])
    return LatticeSignal(dim, ent)


def _apply_axis_symbol(f_grid: np.ndarray, axis_factors) -> np.ndarray:
    """Multiply the FFT of f_grid by an outer product of per-axis factors."""
    spec = np.fft.fftn(f_grid)
    for a, fac in enumerate(axis_factors):
        shape = [1] * f_grid.ndim
        shape[a] = fac.size
        spec *= fac.reshape(shape)
    return np.fft.ifftn(spec)


def gauss_symbol_axis(t: float, side: int, eps: float) -> np.ndarray:
    """One-dimensional multiplier sampled at the grid frequencies k/L."""
    freqs = np.fft.fftfreq(side)  # already in [-1/2, 1/2)
    return ratio_batch(t, freqs, eps)


def semigroup_symbol_axis(t: float, side: int) -> np.ndarray:
    freqs = np.fft.fftfreq(side)
    return np.exp(-t * np.sin(math.pi * freqs) ** 2)


def wraparound_bound(f: LatticeSignal, plan: ConvolutionPlan) -> float:
    """Certified l^1 kernel mass outside the safe box radius L/2 - support."""
    if plan.method != "spectral":
        return 0.0
    margin = plan.grid.side // 2 - f.support_radius
    if margin <= 0:
        return 1.0
    return min(1.0, f.dim * _mass_tail_1d(plan.t, margin - 1))


# ---------------------------------------------------------------------------
# public operators
# ---------------------------------------------------------------------------


def convolve_gauss(f: LatticeSignal, plan: ConvolutionPlan) -> LatticeSignal:
    """G_t f = g_t * f along the plan's path."""
    t = plan.t
    if plan.method == "direct_truncated":
        radius = plan.kernel_radius or kernel_radius(t, f.dim, plan.pol.eps)
        if not f.entries:
            return LatticeSignal(f.dim, {})
        koff, kval = _kernel_box(t, f.dim, radius, plan.pol)
        dense, lo = f.to_dense()
        out = backend.direct_convolve(dense, koff, kval)
        out_lo = tuple(c - radius for c in lo)
        return LatticeSignal.from_dense(out, out_lo, f.dim)
    grid = plan.grid
    f_grid = embed_to_grid(f, grid)
    axes = [gauss_symbol_axis(t, grid.side, plan.pol.eps) for _ in range(f.dim)]
    out = _apply_axis_symbol(f_grid, axes)
    if f.is_real():
        out = out.real.astype(np.complex128)
    return grid_to_signal(out, f.dim)


def convolve_semigroup(f: LatticeSignal, t, grid: EmbeddingGrid) -> LatticeSignal:
    """Q_t f computed spectrally; the Z^d operator up to wraparound error."""
    t = _check_scale(t)
    f_grid = embed_to_grid(f, grid)
    axes = [semigroup_symbol_axis(t, grid.side) for _ in range(f.dim)]
    out = _apply_axis_symbol(f_grid, axes)
    if f.is_real():
        out = out.real.astype(np.complex128)
    return grid_to_signal(out, f.dim)


def littlewood_paley_apply(f: LatticeSignal, j: int, grid: EmbeddingGrid) -> LatticeSignal:
    """S_j f = Q_{2^{j-1}} f - Q_{2^j} f (one spectral round trip)."""
    f_grid = embed_to_grid(f, grid)
    # the band symbol is a difference of products, so it is not separable:
    # build it on the full grid from the additive sin^2 exponent
    spec = np.fft.fftn(f_grid)
    freqs = np.fft.fftfreq(grid.side)
    sin2 = np.sin(math.pi * freqs) ** 2
    total = np.zeros((grid.side,) * f.dim)
    for a in range(f.dim):
        shape = [1] * f.dim
        shape[a] = grid.side
        total = total + sin2.reshape(shape)
    symbol = np.exp(-(2.0 ** (j - 1)) * total) - np.exp(-(2.0**j) * total)
    out = np.fft.ifftn(spec * symbol)
    if f.is_real():
        out = out.real.astype(np.complex128)
    return grid_to_signal(out, f.dim)


def lp_norm(f: LatticeSignal, p: float) -> float:
    """l^p norm of the signal; p in [1, inf]."""
    if p != math.inf and not p >= 1:
        raise InvalidExponent(f"p must be >= 1 or inf, got {p}")
    if not f.entries:
        return 0.0
    mags = np.abs(np.fromiter(f.entries.values(), dtype=np.complex128, count=len(f.entries)))
    if p == math.inf:
        return float(mags.max())
    return float((mags**p).sum() ** (1.0 / p))


def ball_offsets(dim: int, r: float) -> np.ndarray:
    """Lattice points of the Euclidean ball |y|_2 <= r, as an (K, d) array."""
    rad = int(math.floor(r))
    m = np.arange(-rad, rad + 1, dtype=np.int64)
    grids = np.meshgrid(*([m] * dim), indexing="ij")
    pts = np.stack([g.ravel() for g in grids], axis=1)
    keep = (pts.astype(np.float64) ** 2).sum(axis=1) <= r * r + 1e-12
    return pts[keep]

def ball_average(f: LatticeSignal, r: float) -> LatticeSignal:
    """Average of f over the Euclidean ball of radius r around each point."""
    if not r > 0:
        raise ValueError("radius must be positive")
    if not f.is_real(1e-15):
        raise ValueError("ball_average expects a real-valued signal")
    offs = ball_offsets(f.dim, r)
    if not f.entries:
        return LatticeSignal(f.dim, {})
    dense, lo = f.to_dense()
    out = backend.direct_convolve(dense, offs, np.full(offs.shape[0], 1.0 / offs.shape[0]))
    rad = int(np.abs(offs).max()) if offs.size else 0
    return LatticeSignal.from_dense(out, tuple(c - rad for c in lo), f.dim)


def maximal_over_times(f: LatticeSignal, times, plan: ConvolutionPlan) -> LatticeSignal:
    """x -> max over the sampled times of |G_t f(x)| (plan reused per time)."""
    times = [float(t) for t in times]
    if not times:
        raise ValueError("times must be nonempty")
    if any(b <= a for a, b in zip(times, times[1:])):
        raise ValueError("times must be strictly increasing")
    acc: dict = {}
    for t in times:
        res = convolve_gauss(f, plan.with_t(t))
        for k, v in res.entries.items():
            m = abs(v)
            if m > acc.get(k, 0.0):
                acc[k] = m
    return LatticeSignal(f.dim, acc)


# ---------------------------------------------------------------------------
# signal file format
# ---------------------------------------------------------------------------


def _fmt_float(x: float) -> str:
    return repr(float(x))


def write_signal(f: LatticeSignal, path) -> None:
    """Line-oriented text format; lexicographic key order; lossless floats."""
    lines = [f"dim={f.dim}"]
    for key in sorted(f.entries):
        v = f.entries[key]
        coords = " ".join(str(c) for c in key)
        if v.imag == 0:
            lines.append(f"{coords} {_fmt_float(v.real)}")
        else:
            lines.append(f"{coords} {_fmt_float(v.real)} {_fmt_float(v.imag)}")
    with open(path, "w", encoding="ascii") as fh:
        fh.write("\n".join(lines) + "\n")


def read_signal(path) -> LatticeSignal:
    with open(path, "r", encoding="ascii") as fh:
        lines = [ln.strip() for ln in fh if ln.strip()]
    if not lines or not lines[0].startswith("dim="):
        raise ValueError("signal file must start with a dim=<d> header")
    dim = int(lines[0][4:])
    ent = {}
    for ln in lines[1:]:
        parts = ln.split()
        if len(parts) not in (dim + 1, dim + 2):
            raise ValueError(f"malformed entry line: {ln!r}")
        key = tuple(int(p) for p in parts[:dim])
        re = float(parts[dim])
        im = float(parts[dim + 1]) if len(parts) == dim + 2 else 0.0
        ent[key] = complex(re, im)
    return LatticeSignal(dim, ent)
