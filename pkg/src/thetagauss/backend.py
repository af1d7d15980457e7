"""Hot-kernel backend selection.

``THETAGAUSS_BACKEND`` controls which implementation backs the inner loops:

* ``auto`` (default): numba if importable, else pure numpy,
* ``numba``: require the jitted kernels,
* ``numpy``: force the pure-numpy fallback.

Both implementations share one set of signatures; results agree to float
round-off and are exercised against each other in the test suite and in
``benchmarks/bench_backends.py``.
"""

import os

_choice = os.environ.get("THETAGAUSS_BACKEND", "auto").strip().lower()

if _choice not in ("auto", "numba", "numpy"):
    raise ValueError(f"THETAGAUSS_BACKEND must be auto|numba|numpy, got {_choice!r}")

if _choice == "numpy":
    from . import _kernels_numpy as kernels
else:
    try:
        from . import _kernels_numba as kernels
    except ImportError:
        if _choice == "numba":
            raise
        from . import _kernels_numpy as kernels

BACKEND = kernels.BACKEND_NAME

variation_dp_batch = kernels.variation_dp_batch
jump_count_batch = kernels.jump_count_batch
variation_brute_batch = kernels.variation_brute_batch
jump_brute_batch = kernels.jump_brute_batch
gauss_ratio_batch = kernels.gauss_ratio_batch
cosine_ratio_batch = kernels.cosine_ratio_batch
direct_convolve = kernels.direct_convolve
