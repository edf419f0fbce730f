"""Laguerre-Angelesco multiple orthogonal polynomials on the r-star."""

from ._core import (  # noqa: F401
    __version__,
    alpha,
    cdf_type1,
    density_type1,
    density_type2_per_ray,
    jacobi_kernel_coeffs,
    kernel_coeffs,
    kernel_coeffs_str,
    ks_distance,
    precision,
    real_zeros,
    set_precision,
    type1_above_coeffs,
    type1_below_coeffs,
    type1_diagonal_coeffs,
    type1_limit_error,
    type2_above_coeffs,
    type2_diagonal_coeffs,
    verify,
    w_equation_residual,
    zero_bound,
)
