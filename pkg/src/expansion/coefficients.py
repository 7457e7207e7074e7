"""
Expansion coefficients alpha_j of E{tr_n g(X_n)}

E{tr_n g(X_n)} = sum_{j=0}^{k} alpha_j(g) n^-2j + O(n^(-2k-2)).

Two independent paths:
    iterated:     alpha_j(g) = (1/2pi) integral T^j g(t) sqrt(4 - t^2) dt
    distribution: alpha_j(g) = sum_{k=2j}^{3j-1} C_{j,k} k!/(2k)! E_k(g),
                  E_k(g) = (1/pi) integral g^(k)(x) T_k(x/2) / sqrt(4 - x^2) dx.
The distribution path is the primary value.
"""

import logging
import math
from fractions import Fraction
from typing import List, Literal, Sequence

import numpy as np

from config.settings import get_settings

from ..errors import DomainError
from ..hermite.density import whole_line_integral
from ..numerics.quadrature import arcsine_angles, arcsine_rule
from ..numerics.rate_fit import RateEstimator
from ..symbolic.tables import cjr_table
from .models import AlphaEstimate, ExpansionReport
from .operator import apply_T, semicircle_average
from .smooth_input import SmoothInput

logger = logging.getLogger(__name__)

AlphaPath = Literal["distribution", "iterated"]

# domain of the intermediate T^i g when iterating
ITERATION_HALF_WIDTH = 2.5


def chebyshev_moment(p: int, k: int, nodes: int = None) -> float:
    """(1/pi) integral x^p T_k(x/2) / sqrt(4 - x^2) dx by Gauss-Chebyshev"""
    nodes = nodes or get_settings().chebyshev_moment_nodes
    x, w = arcsine_rule(nodes)
    return float(np.sum(w * x ** p * np.cos(k * arcsine_angles(nodes))))


def exact_chebyshev_moment(p: int, k: int) -> int:
    """binom(p, (p-k)/2) when p - k is even and non-negative, else 0"""
    if p < k or (p - k) % 2:
        return 0
    return math.comb(p, (p - k) // 2)


def chebyshev_functional(g: SmoothInput, k: int, nodes: int = None):
    """E_k(g) = (1/pi) integral g^(k)(x) T_k(x/2) / sqrt(4 - x^2) dx"""
    nodes = nodes or get_settings().chebyshev_moment_nodes
    x, w = arcsine_rule(nodes)
    vals = np.asarray(g.derivative(k, x)) * np.cos(k * arcsine_angles(nodes))
    result = np.sum(w * vals)
    return complex(result) if np.iscomplexobj(result) else float(result)


def _alpha_distribution(g: SmoothInput, j: int):
    if j == 0:
        return semicircle_average(g)
    g.require_order(3 * j - 1)
    row = cjr_table(j).row(j)
    total = 0.0
    for k, c in row.items():
        weight = Fraction(math.factorial(k), math.factorial(2 * k)) * c
        total = total + float(weight) * chebyshev_functional(g, k)
    return total


def _alpha_iterated(g: SmoothInput, j: int):
    current = g
    for i in range(j):
        last = i == j - 1
        grid = apply_T(current, half_width=2.0 if last else ITERATION_HALF_WIDTH)
        if last:
            return grid.semicircle_pairing()
        current = SmoothInput.sampled_from(grid, name=f"T^{i + 1}({g.name})")
    return semicircle_average(g)


def alpha_j(g: SmoothInput, j: int, path: AlphaPath = "distribution"):
    """
    j-th expansion coefficient of E{tr_n g(X_n)}

    Args:
        g: Input function
        j: Order, >= 0
        path: "distribution" (primary) or "iterated"

    Returns:
        alpha_j(g), float or complex

    Raises:
        CapabilityError: If g lacks derivatives up to order 3j - 1 (distribution)
                         or 2 (iterated)
    """
    if j < 0 or int(j) != j:
        raise DomainError(f"Coefficient index must be a non-negative integer, got {j}")
    if path == "distribution":
        return _alpha_distribution(g, int(j))
    if path == "iterated":
        return _alpha_iterated(g, int(j))
    raise ValueError(f"Unknown alpha path: {path}")


def alpha_estimate(g: SmoothInput, j: int, iterated: bool = True) -> AlphaEstimate:
    """alpha_j by the distribution path, cross-checked by the iterated path"""
    primary = alpha_j(g, j)
    second = alpha_j(g, j, path="iterated") if iterated and j >= 1 else None
    gap = abs(second - primary) if second is not None else None
    if gap is not None:
        logger.info(f"alpha_{j}({g.name}): paths differ by {gap:.2e}")
    return AlphaEstimate(g=g.name, j=j, distribution=primary, iterated=second, gap=gap)


def _partial_sums(alphas: Sequence, n: int) -> List:
    sums, total = [], 0.0
    for j, a in enumerate(alphas):
        total = total + a * float(n) ** (-2 * j)
        sums.append(total)
    return sums


def expand_expectation(
    g: SmoothInput,
    n: int,
    k: int,
    ladder: Sequence[int] = None,
) -> ExpansionReport:
    """
    Expansion of E{tr_n g(X_n)} to order k with remainder diagnostics

    Args:
        g: Input function
        n: Matrix size for the reported remainder
        k: Truncation order
        ladder: Matrix sizes for the log-log remainder fit (None to skip)

    Returns:
        ExpansionReport
    """
    if k < 0:
        raise DomainError(f"Truncation order must be non-negative, got {k}")
    alphas = [alpha_j(g, j) for j in range(k + 1)]
    partial = _partial_sums(alphas, n)
    exact = whole_line_integral(g.value, n)

    ladder = list(ladder or [])
    remainders = [whole_line_integral(g.value, m) - _partial_sums(alphas, m)[-1] for m in ladder]
    rate = RateEstimator().fit(ladder, remainders) if ladder else None

    logger.info(f"Expanded E tr_{n} {g.name} to order {k}: remainder {abs(exact - partial[-1]):.3e}")
    return ExpansionReport(
        g=g.name,
        n=n,
        k=k,
        alphas=alphas,
        partial_sums=partial,
        exact=exact,
        remainder=exact - partial[-1],
        ladder=ladder,
        ladder_remainders=remainders,
        rate=rate,
    )
