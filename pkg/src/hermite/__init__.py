"""Hermite functions, GUE(n, 1/n) spectral density and covariance kernel"""

from .functions import HermiteEvaluator, HermiteLadder, hermite_phi, hermite_table
from .density import (
    density_arrays,
    density_bundle,
    density_on_rule,
    whole_line_integral,
)
from .kernel import (
    cd_kernel,
    rho_n,
    rho_n_grid,
    rho_limit,
    kernel_field,
    kernel_integral,
    kernel_moment,
    limit_kernel_integral,
    limit_kernel_moment,
)
from .models import DensityArrays, DensityBundle, KernelField

__all__ = [
    "HermiteEvaluator",
    "HermiteLadder",
    "hermite_phi",
    "hermite_table",
    "density_arrays",
    "density_bundle",
    "density_on_rule",
    "whole_line_integral",
    "cd_kernel",
    "rho_n",
    "rho_n_grid",
    "rho_limit",
    "kernel_field",
    "kernel_integral",
    "kernel_moment",
    "limit_kernel_integral",
    "limit_kernel_moment",
    "DensityArrays",
    "DensityBundle",
    "KernelField",
]
