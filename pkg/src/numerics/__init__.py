"""Shared numerical support: quadrature rules and rate fits"""

from .quadrature import (
    gauss_legendre,
    gauss_jacobi_sqrt,
    semicircle_rule,
    arcsine_rule,
    arcsine_angles,
    box_radius,
    resolved_nodes,
    whole_line_rule,
)
from .rate_fit import RateEstimator, RateFit

__all__ = [
    "gauss_legendre",
    "gauss_jacobi_sqrt",
    "semicircle_rule",
    "arcsine_rule",
    "arcsine_angles",
    "box_radius",
    "resolved_nodes",
    "whole_line_rule",
    "RateEstimator",
    "RateFit",
]
