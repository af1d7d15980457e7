"""Variation, jump and oscillation seminorms of finite sampled families.

All three are computed exactly on the sampled grid:

* r-variation: supremum over increasing subsequences of the l^r norm of
  consecutive gaps, by O(J^2) dynamic programming on the r-th power
  objective ``best(i) = max_{j<i} best(j) + |a_i - a_j|^r``,
* lambda-jump count: largest number of consecutive moves of modulus >= lambda
  along an increasing subsequence, by the analogous pairwise dynamic program,
* r-oscillation: partition-windowed deviations from each window's reference
  value, with the empty-window supremum equal to zero.

Complex-valued families are supported (gaps are moduli).  Both dynamic
programs are certified against exhaustive subset enumeration in the tests.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import backend
from .errors import InvalidExponent, InvalidPartition, InvalidThreshold

__all__ = [
    "SampledFamily",
    "Partition",
    "variation",
    "jump_count",
    "oscillation",
    "variation_brute",
    "jump_count_brute",
    "variation_batch",
    "jump_count_batch",
]

_BRUTE_CAP = 20


@dataclass(frozen=True)
class SampledFamily:
    """A family sampled on a strictly increasing finite time grid."""

    times: tuple[float, ...]
    values: tuple[complex, ...]

    def __init__(self, times, values):
        t = np.asarray(times, dtype=np.float64)
        v = np.asarray(values, dtype=np.complex128)
        if t.ndim != 1 or v.ndim != 1 or t.size != v.size or t.size < 1:
            raise ValueError("times and values must be equal-length 1-d sequences")
        if t.size > 1 and not np.all(np.diff(t) > 0):
            raise ValueError("times must be strictly increasing")
        object.__setattr__(self, "times", tuple(float(x) for x in t))
        object.__setattr__(self, "values", tuple(complex(x) for x in v))

    def __len__(self) -> int:
        return len(self.times)

    def value_array(self) -> np.ndarray:
        return np.asarray(self.values, dtype=np.complex128)


@dataclass(frozen=True)
class Partition:
    """Strictly increasing window boundaries I_0 < ... < I_J (J >= 1)."""

    boundaries: tuple[float, ...]

    def __init__(self, boundaries):
        b = np.asarray(boundaries, dtype=np.float64)
        if b.ndim != 1 or b.size < 2:
            raise InvalidPartition("a partition needs at least two boundaries")
        if not np.all(np.diff(b) > 0):
            raise InvalidPartition("boundaries must be strictly increasing")
        object.__setattr__(self, "boundaries", tuple(float(x) for x in b))


def _as_values(fam) -> np.ndarray:
    if isinstance(fam, SampledFamily):
        return fam.value_array()
    return np.asarray(fam, dtype=np.complex128)


def variation(fam, r: float) -> float:
    """r-variation seminorm V^r of the sampled family."""
    if not r >= 1:
        raise InvalidExponent(f"variation exponent must be >= 1, got {r}")
    vals = _as_values(fam)
    if vals.size < 2:
        return 0.0
    power = backend.variation_dp_batch(vals[None, :], float(r))[0]
    return float(power ** (1.0 / r))


def variation_batch(values: np.ndarray, r: float) -> np.ndarray:
    """V^r for a (families, samples) matrix of values sharing one time grid."""
    if not r >= 1:
        raise InvalidExponent(f"variation exponent must be >= 1, got {r}")
    vals = np.ascontiguousarray(np.atleast_2d(values), dtype=np.complex128)
    if vals.shape[1] < 2:
        return np.zeros(vals.shape[0])
    return backend.variation_dp_batch(vals, float(r)) ** (1.0 / r)


def jump_count(fam, lam: float) -> int:
    """lambda-jump counting function N_lambda of the sampled family."""
    if not lam > 0:
        raise InvalidThreshold(f"lambda must be > 0, got {lam}")
    vals = _as_values(fam)
    if vals.size < 2:
        return 0
    return int(backend.jump_count_batch(vals[None, :], float(lam))[0])


def jump_count_batch(values: np.ndarray, lam: float) -> np.ndarray:
    """N_lambda for a (families, samples) matrix of values."""
    if not lam > 0:
        raise InvalidThreshold(f"lambda must be > 0, got {lam}")
    vals = np.ascontiguousarray(np.atleast_2d(values), dtype=np.complex128)
    if vals.shape[1] < 2:
        return np.zeros(vals.shape[0], dtype=np.int64)
    return backend.jump_count_batch(vals, float(lam))


def oscillation(fam: SampledFamily, part: Partition, r: float) -> float:
    """r-oscillation seminorm over the given partition windows.

    Window j collects sample times in [I_j, I_{j+1}); its contribution is the
    supremum of |a_t - a_ref|^r with the reference taken at I_j when I_j is a
    sample time, otherwise at the first sample time inside the window.  An
    empty window contributes zero.
    """
    if not r >= 1:
        raise InvalidExponent(f"oscillation exponent must be >= 1, got {r}")
    if not isinstance(part, Partition):
        part = Partition(part)
    times = np.asarray(fam.times)
    vals = fam.value_array()
    total = 0.0
    bounds = part.boundaries
    for j in range(len(bounds) - 1):
        lo, hi = bounds[j], bounds[j + 1]
        inside = np.nonzero((times >= lo) & (times < hi))[0]
        if inside.size == 0:
            continue
        exact = np.nonzero(times == lo)[0]
        ref = vals[exact[0]] if exact.size else vals[inside[0]]
        total += float(np.max(np.abs(vals[inside] - ref)) ** r)
    return total ** (1.0 / r)


def variation_brute(fam, r: float) -> float:
    """Exhaustive-subsequence oracle for V^r (lengths <= 20 only)."""
    if not r >= 1:
        raise InvalidExponent(f"variation exponent must be >= 1, got {r}")
    vals = _as_values(fam)
    if vals.size < 2:
        return 0.0
    if vals.size > _BRUTE_CAP:
        raise ValueError(f"brute force limited to {_BRUTE_CAP} samples")
    power = backend.variation_brute_batch(vals[None, :], float(r))[0]
    return float(power ** (1.0 / r))


def jump_count_brute(fam, lam: float) -> int:
    """Exhaustive-subsequence oracle for N_lambda (lengths <= 20 only)."""
    if not lam > 0:
        raise InvalidThreshold(f"lambda must be > 0, got {lam}")
    vals = _as_values(fam)
    if vals.size < 2:
        return 0
    if vals.size > _BRUTE_CAP:
        raise ValueError(f"brute force limited to {_BRUTE_CAP} samples")
    return int(backend.jump_brute_batch(vals[None, :], float(lam))[0])
