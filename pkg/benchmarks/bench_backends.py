#!/usr/bin/env python3
"""Benchmark the numba-jitted hot kernels against the pure-numpy fallback.

Both implementations sit behind one interface selected by the
THETAGAUSS_BACKEND environment variable; this script imports them directly so
a single run times both.  The jitted path pays a one-time compile cost, which
is excluded by a warmup call.

Usage:  python benchmarks/bench_backends.py [--quick]
"""

import argparse
import time

import numpy as np

from thetagauss import _kernels_numba as knb
from thetagauss import _kernels_numpy as knp


def timeit(fn, *args, repeats=5):
    best = float("inf")
    for _ in range(repeats):
        t0 = time.perf_counter()
        fn(*args)
        best = min(best, time.perf_counter() - t0)
    return best


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--quick", action="store_true", help="smaller workloads")
    args = ap.parse_args()
    scale = 4 if args.quick else 1

    rng = np.random.default_rng(20260809)

    fams = rng.standard_normal((4000 // scale, 16)) + 1j * rng.standard_normal((4000 // scale, 16))
    fams = np.ascontiguousarray(fams)
    small = np.ascontiguousarray(fams[: 600 // scale, :12])

    xi = np.ascontiguousarray(rng.uniform(-0.5, 0.5, 200_000 // scale))

    sig = np.zeros((9, 9, 9), dtype=np.complex128)
    sig[2:7, 2:7, 2:7] = rng.standard_normal((5, 5, 5))
    m = np.arange(-4, 5)
    g = np.stack(np.meshgrid(m, m, m, indexing="ij"), axis=-1).reshape(-1, 3)
    kval = np.exp(-(g**2).sum(1) / 6.0)
    kval /= kval.sum()

    cases = [
        ("variation_dp (4k fams x 16)", "variation_dp_batch", (fams, 2.0)),
        ("jump_count   (4k fams x 16)", "jump_count_batch", (fams, 0.5)),
        ("variation_brute (600 x 12)", "variation_brute_batch", (small, 2.0)),
        ("jump_brute      (600 x 12)", "jump_brute_batch", (small, 0.5)),
        ("theta ratio  (200k points)", "gauss_ratio_batch", (4.0, xi, 3)),
        ("cosine ratio (200k points)", "cosine_ratio_batch", (4.0, xi, 3)),
        ("direct conv  (9^3 * 9^3)", "direct_convolve", (sig, g, kval)),
    ]

    print(f"{'kernel':30s} {'numpy':>10s} {'numba':>10s} {'speedup':>9s}")
    for name, attr, cargs in cases:
        f_np = getattr(knp, attr)
        f_nb = getattr(knb, attr)
        f_nb(*cargs)  # JIT warmup
        t_np = timeit(f_np, *cargs)
        t_nb = timeit(f_nb, *cargs)
        a = np.asarray(f_np(*cargs))
        b = np.asarray(f_nb(*cargs))
        assert np.allclose(a, b, rtol=1e-12, atol=1e-12), f"backend mismatch in {name}"
        print(f"{name:30s} {t_np*1e3:9.2f}ms {t_nb*1e3:9.2f}ms {t_np/t_nb:8.1f}x")


if __name__ == "__main__":
    main()
