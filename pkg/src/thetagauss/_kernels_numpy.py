"""Pure-numpy implementations of the hot kernels.

Same call signatures as ``_kernels_numba``; selected via the
``THETAGAUSS_BACKEND`` environment variable (see ``backend``).
"""

import numpy as np

BACKEND_NAME = "numpy"

_BLOCK = 8192  # chunk size for broadcasted series sums


def variation_dp_batch(vals: np.ndarray, rexp: float) -> np.ndarray:
    """Max over increasing subsequences of sum |consecutive gap|^r.

    ``vals`` is (F, J) complex; returns the r-th *power* optimum per family
    (root taken by the caller).
    """
    vals = np.asarray(vals, dtype=np.complex128)
    nfam, npts = vals.shape
    best = np.zeros((nfam, npts))
    for i in range(1, npts):
        gaps = np.abs(vals[:, i : i + 1] - vals[:, :i]) ** rexp
        best[:, i] = (best[:, :i] + gaps).max(axis=1)
    return best.max(axis=1)


def jump_count_batch(vals: np.ndarray, lam: float) -> np.ndarray:
    """Max number of consecutive moves of size >= lam along a subsequence."""
    vals = np.asarray(vals, dtype=np.complex128)
    nfam, npts = vals.shape
    best = np.zeros((nfam, npts), dtype=np.int64)
    for i in range(1, npts):
        gaps = np.abs(vals[:, i : i + 1] - vals[:, :i])
        cand = np.where(gaps >= lam, best[:, :i] + 1, 0)
        best[:, i] = cand.max(axis=1)
    return best.max(axis=1)


def _masks(npts: int):
    for mask in range(1, 1 << npts):
        idx = [i for i in range(npts) if mask >> i & 1]
        if len(idx) >= 2:
            yield np.asarray(idx)


def variation_brute_batch(vals: np.ndarray, rexp: float) -> np.ndarray:
    """Exhaustive subset enumeration oracle for the variation power optimum."""
    vals = np.asarray(vals, dtype=np.complex128)
    out = np.zeros(vals.shape[0])
    for idx in _masks(vals.shape[1]):
        gaps = np.abs(vals[:, idx[1:]] - vals[:, idx[:-1]]) ** rexp
        np.maximum(out, gaps.sum(axis=1), out=out)
    return out


def jump_brute_batch(vals: np.ndarray, lam: float) -> np.ndarray:
    """Exhaustive subset enumeration oracle for the jump count."""
    vals = np.asarray(vals, dtype=np.complex128)
    out = np.zeros(vals.shape[0], dtype=np.int64)
    for idx in _masks(vals.shape[1]):
        gaps = np.abs(vals[:, idx[1:]] - vals[:, idx[:-1]])
        ok = (gaps >= lam).all(axis=1)
        np.maximum(out, np.where(ok, len(idx) - 1, 0), out=out)
    return out


def gauss_ratio_batch(t: float, xi: np.ndarray, kmax: int) -> np.ndarray:
    """theta_t(xi)/theta_t(0) by the direct series truncated at |k| <= kmax."""
    xi = np.asarray(xi, dtype=np.float64)
    k = np.arange(-kmax, kmax + 1, dtype=np.float64)
    den = np.exp(-np.pi * t * k * k).sum()
    out = np.empty_like(xi)
    for lo in range(0, xi.size, _BLOCK):
        blk = xi[lo : lo + _BLOCK, None]
        out[lo : lo + _BLOCK] = np.exp(-np.pi * t * (k[None, :] - blk) ** 2).sum(axis=1)
    return out / den


def cosine_ratio_batch(s: float, xi: np.ndarray, nmax: int) -> np.ndarray:
    """Dual representation ratio: cosine series at Gaussian weight exp(-pi s n^2)."""
    xi = np.asarray(xi, dtype=np.float64)
    n = np.arange(1, nmax + 1, dtype=np.float64)
    w = np.exp(-np.pi * s * n * n)
    den = 1.0 + 2.0 * w.sum()
    out = np.empty_like(xi)
    for lo in range(0, xi.size, _BLOCK):
        blk = xi[lo : lo + _BLOCK, None]
        out[lo : lo + _BLOCK] = 1.0 + 2.0 * (w[None, :] * np.cos(2.0 * np.pi * n[None, :] * blk)).sum(axis=1)
    return out / den


def direct_convolve(in_arr: np.ndarray, koff: np.ndarray, kval: np.ndarray) -> np.ndarray:
    """Dense truncated convolution: out = sum_k kval[k] * shift(in, koff[k]).

    Output box is the input box dilated by R = max|koff| per axis; offset
    ``y`` writes input cell ``i`` into output cell ``i + y + R``.
    """
    in_arr = np.asarray(in_arr, dtype=np.complex128)
    koff = np.asarray(koff, dtype=np.int64)
    rad = int(np.abs(koff).max()) if koff.size else 0
    out_shape = tuple(n + 2 * rad for n in in_arr.shape)
    out = np.zeros(out_shape, dtype=np.complex128)
    for y, v in zip(koff, kval):
        sl = tuple(slice(int(yj) + rad, int(yj) + rad + n) for yj, n in zip(y, in_arr.shape))
        out[sl] += v * in_arr
    return out
