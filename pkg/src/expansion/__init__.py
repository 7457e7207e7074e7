"""The operators S and T, expansion coefficients alpha_j and the 1/n^2 expansion"""

from .grid_function import GridFunction
from .smooth_input import SmoothInput
from .operator import (
    TransferOperator,
    apply_T,
    operator_identity_gap,
    semicircle_average,
    solve_S,
)
from .coefficients import (
    alpha_estimate,
    alpha_j,
    chebyshev_functional,
    chebyshev_moment,
    exact_chebyshev_moment,
    expand_expectation,
)
from .models import AlphaEstimate, ExpansionReport

__all__ = [
    "GridFunction",
    "SmoothInput",
    "TransferOperator",
    "apply_T",
    "operator_identity_gap",
    "semicircle_average",
    "solve_S",
    "alpha_estimate",
    "alpha_j",
    "chebyshev_functional",
    "chebyshev_moment",
    "exact_chebyshev_moment",
    "expand_expectation",
    "AlphaEstimate",
    "ExpansionReport",
]
