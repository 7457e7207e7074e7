"""
C_{j,r} recursion and the coefficients eta_j of the Cauchy transform

E{tr_n (lambda - X_n)^-1} = sum_j eta_j(lambda) n^(-2j) + O(n^(-2k-2)),
eta_0 = lambda/2 - (lambda^2 - 4)^(1/2)/2,
eta_j = sum_{r=2j}^{3j-1} C_{j,r} (lambda^2 - 4)^(-r-1/2) for j >= 1.
"""

import logging
from fractions import Fraction
from functools import lru_cache
from typing import Tuple

from ..errors import DomainError
from .models import CjrTable, CoefficientTerm, ExactExpression
from .semicircle_expr import ComplexLike, SemicircleExpr

logger = logging.getLogger(__name__)


@lru_cache(maxsize=None)
def _cjr_rows(max_j: int) -> Tuple[Tuple[Tuple[int, int], Fraction], ...]:
    if max_j == 1:
        return (((1, 2), Fraction(1)),)
    previous = dict(_cjr_rows(max_j - 1))
    j = max_j - 1

    def c(r: int) -> Fraction:
        # C_{j,2j-1} = 0 = C_{j,3j}, and zero beyond
        return previous.get((j, r), Fraction(0))

    new = {}
    for r in range(2 * max_j, 3 * max_j):
        factor = Fraction((2 * r - 3) * (2 * r - 1), r + 1)
        new[(max_j, r)] = factor * ((r - 1) * c(r - 2) + (4 * r - 10) * c(r - 3))
    return tuple(sorted({**previous, **new}.items()))


def cjr_table(max_j: int) -> CjrTable:
    """
    Build the exact C_{j,r} table up to max_j

    C_{j+1,r} = ((2r-3)(2r-1)/(r+1)) ((r-1) C_{j,r-2} + (4r-10) C_{j,r-3}),
    seeded with C_{1,2} = 1.

    Args:
        max_j: Largest j, >= 1

    Returns:
        CjrTable
    """
    if max_j < 1 or int(max_j) != max_j:
        raise DomainError(f"max_j must be a positive integer, got {max_j}")
    return CjrTable(max_j=int(max_j), entries=dict(_cjr_rows(int(max_j))))


@lru_cache(maxsize=None)
def eta(j: int) -> SemicircleExpr:
    """Exact eta_j as a member of the semicircle family"""
    if j < 0 or int(j) != j:
        raise DomainError(f"eta index must be a non-negative integer, got {j}")
    if j == 0:
        return SemicircleExpr({(1, 0): Fraction(1, 2), (0, 1): Fraction(-1, 2)})
    row = cjr_table(j).row(j)
    return SemicircleExpr({(0, -2 * r - 1): c for r, c in row.items()})


def differentiate(e: SemicircleExpr, order: int = 1) -> SemicircleExpr:
    """order-th lambda-derivative, exact"""
    if order < 0 or int(order) != order:
        raise DomainError(f"Derivative order must be a non-negative integer, got {order}")
    return e.differentiate(int(order))


def evaluate(e: SemicircleExpr, lam: ComplexLike) -> ComplexLike:
    """Evaluate under the branch (lambda^2 - 4)^(1/2) = lambda sqrt(1 - 4/lambda^2)"""
    return e.evaluate(lam)


def eta_ode_residual(j: int) -> SemicircleExpr:
    """
    Exact residual of the recursive ODE system

    j = 0: (4 - lambda^2) eta_0' + lambda eta_0 - 2
    j >= 1: (lambda^2 - 4) eta_j' - lambda eta_j - eta_{j-1}'''
    Both vanish identically.
    """
    w2 = SemicircleExpr.power(2)
    lam = SemicircleExpr.lam()
    if j == 0:
        e0 = eta(0)
        return -w2 * e0.derivative() + lam * e0 - 2
    ej = eta(j)
    return w2 * ej.derivative() - lam * ej - eta(j - 1).differentiate(3)


def exact_expression(e: SemicircleExpr) -> ExactExpression:
    """Serialisable dump of an expression (exact rationals as strings)"""
    terms = [
        CoefficientTerm(coefficient=str(c), lambda_power=k[0], root_power=k[1])
        for k, c in e.items()
    ]
    return ExactExpression(text=e.to_text(), terms=terms)
