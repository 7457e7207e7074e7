"""Cauchy transforms, trace covariances and the Gamma/Upsilon expansions"""

from .resolvent import check_conditioning, resolvent_set
from .divided_difference import divided_difference, divided_difference_grid
from .engine import (
    cov_estimate,
    cov_trace,
    g2_exact,
    g2_expansion,
    kernel_characteristic,
    leading_term_literature,
    limit_characteristic,
    limit_covariance,
    partial_integration_gap,
    variance_clt_limit,
)
from .models import Cov2Report, CovarianceEstimate, ResolventSet

__all__ = [
    "check_conditioning",
    "resolvent_set",
    "divided_difference",
    "divided_difference_grid",
    "cov_estimate",
    "cov_trace",
    "g2_exact",
    "g2_expansion",
    "kernel_characteristic",
    "leading_term_literature",
    "limit_characteristic",
    "limit_covariance",
    "partial_integration_gap",
    "variance_clt_limit",
    "Cov2Report",
    "CovarianceEstimate",
    "ResolventSet",
]
