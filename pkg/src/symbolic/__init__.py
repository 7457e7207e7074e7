"""Exact rational algebra for the Cauchy transform expansion coefficients"""

from .semicircle_expr import SemicircleExpr, branch_root
from .tables import (
    cjr_table,
    differentiate,
    eta,
    eta_ode_residual,
    evaluate,
    exact_expression,
)
from .bivariate import (
    BivariateExpr,
    gamma_l,
    gamma_one_display,
    gamma_zero_closed_form,
    upsilon_l,
)
from .models import CjrTable, CoefficientTerm, ExactExpression

__all__ = [
    "SemicircleExpr",
    "branch_root",
    "cjr_table",
    "differentiate",
    "eta",
    "eta_ode_residual",
    "evaluate",
    "exact_expression",
    "BivariateExpr",
    "gamma_l",
    "gamma_one_display",
    "gamma_zero_closed_form",
    "upsilon_l",
    "CjrTable",
    "CoefficientTerm",
    "ExactExpression",
]
