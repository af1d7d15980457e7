"""Numba-jitted implementations of the hot kernels.

Signatures match ``_kernels_numpy`` exactly; ``backend`` picks one of the two
at import time based on the ``THETAGAUSS_BACKEND`` environment variable.

The seminorm kernels work on squared gap moduli: jump comparisons against
lambda^2 avoid square roots entirely, and the common variation exponents
r = 1, 2, 3 avoid float pow.
"""

import numpy as np
from numba import njit

BACKEND_NAME = "numba"


@njit(cache=True, inline="always")
def _gap_sq(a, b):
    d = a - b
    return d.real * d.real + d.imag * d.imag


@njit(cache=True, inline="always")
def _pow_half(d2, rexp):
    # d2^(rexp/2) with fast paths for the exponents the suite sweeps
    if rexp == 2.0:
        return d2
    if rexp == 1.0:
        return np.sqrt(d2)
    if rexp == 3.0:
        s = np.sqrt(d2)
        return s * s * s
    if rexp == 4.0:
        return d2 * d2
    return d2 ** (0.5 * rexp)


@njit(cache=True)
def _variation_dp_one(vals, rexp):
    npts = vals.shape[0]
    best = np.zeros(npts)
    out = 0.0
    for i in range(1, npts):
        bi = 0.0
        vi = vals[i]
        for j in range(i):
            g = _pow_half(_gap_sq(vi, vals[j]), rexp) + best[j]
            if g > bi:
                bi = g
        best[i] = bi
        if bi > out:
            out = bi
    return out


@njit(cache=True)
def variation_dp_batch(vals, rexp):
    nfam = vals.shape[0]
    out = np.empty(nfam)
    for f in range(nfam):
        out[f] = _variation_dp_one(vals[f], rexp)
    return out


@njit(cache=True)
def _jump_count_one(vals, lam2):
    npts = vals.shape[0]
    best = np.zeros(npts, dtype=np.int64)
    out = 0
    for i in range(1, npts):
        bi = 0
        vi = vals[i]
        for j in range(i):
            if _gap_sq(vi, vals[j]) >= lam2:
                c = best[j] + 1
                if c > bi:
                    bi = c
        best[i] = bi
        if bi > out:
            out = bi
    return out


@njit(cache=True)
def jump_count_batch(vals, lam):
    nfam = vals.shape[0]
    lam2 = lam * lam
    out = np.empty(nfam, dtype=np.int64)
    for f in range(nfam):
        out[f] = _jump_count_one(vals[f], lam2)
    return out


@njit(cache=True)
def _mask_table(npts):
    total = 1 << npts
    lens = np.empty(total, dtype=np.int64)
    table = np.empty((total, npts), dtype=np.int64)
    for mask in range(total):
        m = 0
        for i in range(npts):
            if mask >> i & 1:
                table[mask, m] = i
                m += 1
        lens[mask] = m
    return table, lens


@njit(cache=True)
def variation_brute_batch(vals, rexp):
    nfam, npts = vals.shape
    table, lens = _mask_table(npts)
    out = np.zeros(nfam)
    for f in range(nfam):
        best = 0.0
        for mask in range(1, 1 << npts):
            m = lens[mask]
            if m < 2:
                continue
            s = 0.0
            for l in range(m - 1):
                s += _pow_half(
                    _gap_sq(vals[f, table[mask, l + 1]], vals[f, table[mask, l]]), rexp
                )
            if s > best:
                best = s
        out[f] = best
    return out


@njit(cache=True)
def jump_brute_batch(vals, lam):
    nfam, npts = vals.shape
    table, lens = _mask_table(npts)
    lam2 = lam * lam
    out = np.zeros(nfam, dtype=np.int64)
    for f in range(nfam):
        best = 0
        for mask in range(1, 1 << npts):
            m = lens[mask]
            if m - 1 <= best:
                continue
            ok = True
            for l in range(m - 1):
                if _gap_sq(vals[f, table[mask, l + 1]], vals[f, table[mask, l]]) < lam2:
                    ok = False
                    break
            if ok:
                best = m - 1
        out[f] = best
    return out


@njit(cache=True)
def gauss_ratio_batch(t, xi, kmax):
    den = 0.0
    for k in range(-kmax, kmax + 1):
        den += np.exp(-np.pi * t * k * k)
    out = np.empty(xi.shape[0])
    for i in range(xi.shape[0]):
        s = 0.0
        for k in range(-kmax, kmax + 1):
            d = k - xi[i]
            s += np.exp(-np.pi * t * d * d)
        out[i] = s / den
    return out


@njit(cache=True)
def cosine_ratio_batch(s, xi, nmax):
    den = 1.0
    for n in range(1, nmax + 1):
        den += 2.0 * np.exp(-np.pi * s * n * n)
    out = np.empty(xi.shape[0])
    for i in range(xi.shape[0]):
        acc = 1.0
        for n in range(1, nmax + 1):
            acc += 2.0 * np.exp(-np.pi * s * n * n) * np.cos(2.0 * np.pi * n * xi[i])
        out[i] = acc / den
    return out


@njit(cache=True)
def _direct_convolve_flat(in_flat, in_shape, koff, kval, rad):
    ndim = in_shape.shape[0]
    out_shape = np.empty(ndim, dtype=np.int64)
    for a in range(ndim):
        out_shape[a] = in_shape[a] + 2 * rad
    in_strides = np.empty(ndim, dtype=np.int64)
    out_strides = np.empty(ndim, dtype=np.int64)
    si = 1
    so = 1
    for a in range(ndim - 1, -1, -1):
        in_strides[a] = si
        out_strides[a] = so
        si *= in_shape[a]
        so *= out_shape[a]
    out = np.zeros(so, dtype=np.complex128)
    nin = in_flat.shape[0]
    idx = np.empty(ndim, dtype=np.int64)
    for i in range(nin):
        v = in_flat[i]
        if v == 0:
            continue
        rem = i
        for a in range(ndim):
            idx[a] = rem // in_strides[a]
            rem = rem % in_strides[a]
        for k in range(koff.shape[0]):
            o = 0
            for a in range(ndim):
                o += (idx[a] + koff[k, a] + rad) * out_strides[a]
            out[o] += kval[k] * v
    return out, out_shape


def direct_convolve(in_arr, koff, kval):
    """Dense truncated convolution (same contract as the numpy variant)."""
    in_arr = np.ascontiguousarray(in_arr, dtype=np.complex128)
    koff = np.ascontiguousarray(koff, dtype=np.int64)
    kval = np.ascontiguousarray(kval, dtype=np.float64)
    rad = int(np.abs(koff).max()) if koff.size else 0
    flat, out_shape = _direct_convolve_flat(
        in_arr.ravel(), np.asarray(in_arr.shape, dtype=np.int64), koff, kval, rad
    )
    return flat.reshape(tuple(out_shape))
