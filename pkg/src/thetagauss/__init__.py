"""Certified discrete-Gaussian / theta-function numerics on Z^d.

Submodules:

* ``theta``: certified theta evaluation with dual-representation switching,
* ``multipliers``: the kernel's Fourier multiplier, heat kernel, semigroup
  and dyadic band symbols, scale-change bijection,
* ``lattice``: sparse signals on Z^d, truncated and spectral convolution,
  ball averages, maximal functions,
* ``seminorms``: exact r-variation / lambda-jump / r-oscillation seminorms,
* ``fractional``: fractional derivative, reconstruction, averaging kernel,
  derived multipliers, derivative combinatorics,
* ``certify``: the named-inequality certification registry and reports,
* ``cli``: the ``thetagauss`` command-line front end.
"""

from .theta import (
    CertifiedValue,
    ScaleParam,
    TorusPoint,
    TruncationPolicy,
    theta1,
    theta_d,
    theta1_time_derivative,
    truncation_radius,
)
from .multipliers import (
    MultiplierQuery,
    PsiValue,
    gauss_multiplier,
    gauss_multiplier_dual,
    gauss_multiplier_derivative,
    heat_kernel_torus,
    littlewood_paley_symbol,
    psi,
    psi_inv,
    semigroup_symbol,
)
from .lattice import (
    ConvolutionPlan,
    EmbeddingGrid,
    LatticeSignal,
    ball_average,
    convolve_gauss,
    convolve_semigroup,
    gauss_kernel_value,
    littlewood_paley_apply,
    lp_norm,
    maximal_over_times,
    read_signal,
    write_signal,
)
from .seminorms import Partition, SampledFamily, jump_count, oscillation, variation
from .fractional import (
    FracParams,
    TimeFunction,
    compose_derivative,
    faa_di_bruno_tuples,
    frac_derivative,
    frac_reconstruct,
    inverse_derivative,
    inverse_tuples,
    kernel_A,
    p_multiplier,
)

__version__ = "0.1.0"
