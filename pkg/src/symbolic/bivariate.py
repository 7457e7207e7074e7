"""
Separable two-variable expressions and the coefficients Gamma_l, Upsilon_l

Cov{Tr (lambda - X_n)^-1, Tr (mu - X_n)^-1}
    = (1/(2(lambda - mu)^2)) sum_l Gamma_l(lambda, mu) n^(-2l) + ...
and on the diagonal
Var{Tr (lambda - X_n)^-1} = (1/4) sum_l Upsilon_l(lambda) n^(-2l) + ...
Gamma_l is kept as a sum of products a(lambda) b(mu) of family members;
it is never expanded into a single rational function.
"""

import logging
from fractions import Fraction
from functools import lru_cache
from typing import Dict, Mapping, Tuple

import numpy as np

from ..errors import DomainError
from .semicircle_expr import ComplexLike, Key, Scalar, SemicircleExpr, branch_root
from .tables import eta

logger = logging.getLogger(__name__)

PairKey = Tuple[Key, Key]


class BivariateExpr:
    """Immutable exact sum of c * basis(lambda) * basis(mu)"""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[PairKey, Scalar] = None):
        self._terms: Dict[PairKey, Fraction] = {
            k: Fraction(v) for k, v in (terms or {}).items() if v != 0
        }

    @classmethod
    def outer(cls, a: SemicircleExpr, b: SemicircleExpr) -> "BivariateExpr":
        """a(lambda) * b(mu)"""
        return cls({(ka, kb): ca * cb for ka, ca in a.items() for kb, cb in b.items()})

    @classmethod
    def constant(cls, c: Scalar) -> "BivariateExpr":
        return cls({((0, 0), (0, 0)): c})

    @property
    def terms(self) -> Dict[PairKey, Fraction]:
        return dict(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def __add__(self, other: "BivariateExpr") -> "BivariateExpr":
        merged = dict(self._terms)
        for k, v in other._terms.items():
            merged[k] = merged.get(k, Fraction(0)) + v
        return BivariateExpr(merged)

    def __neg__(self) -> "BivariateExpr":
        return BivariateExpr({k: -v for k, v in self._terms.items()})

    def __sub__(self, other: "BivariateExpr") -> "BivariateExpr":
        return self + (-other)

    def __mul__(self, c: Scalar) -> "BivariateExpr":
        return BivariateExpr({k: v * c for k, v in self._terms.items()})

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if not isinstance(other, BivariateExpr):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    def swap(self) -> "BivariateExpr":
        """The expression with lambda and mu exchanged"""
        return BivariateExpr({(kb, ka): c for (ka, kb), c in self._terms.items()})

    def is_symmetric(self) -> bool:
        return self == self.swap()

    def diagonal(self) -> SemicircleExpr:
        """Restriction to lambda = mu as a univariate expression"""
        total = SemicircleExpr.zero()
        for ((e1, p1), (e2, p2)), c in self._terms.items():
            total = total + SemicircleExpr({(e1 + e2, p1 + p2): c})
        return total

    def evaluate(self, lam: ComplexLike, mu: ComplexLike) -> ComplexLike:
        """Complex value at (lambda, mu); both must be off the cut [-2, 2]"""
        zl = np.asarray(lam, dtype=complex)
        zm = np.asarray(mu, dtype=complex)
        wl = np.asarray(branch_root(zl), dtype=complex)
        wm = np.asarray(branch_root(zm), dtype=complex)
        total = np.zeros(np.broadcast(zl, zm).shape, dtype=complex)
        for ((e1, p1), (e2, p2)), c in self._terms.items():
            total = total + float(c) * (zl ** e1 * wl ** p1) * (zm ** e2 * wm ** p2)
        return complex(total) if total.ndim == 0 else total

    __call__ = evaluate

    def __repr__(self) -> str:
        return f"BivariateExpr({len(self._terms)} terms)"


def _shifted_derivative(l: int) -> SemicircleExpr:
    """2 eta_0' - 1 for l = 0, 2 eta_l' otherwise"""
    d = eta(l).derivative() * 2
    return d - 1 if l == 0 else d


@lru_cache(maxsize=None)
def gamma_l(l: int) -> BivariateExpr:
    """
    Exact Gamma_l(lambda, mu)

    Gamma_0 = (2eta_0'-1)(x)(2eta_0'-1) - eta~_0 (x) eta~_0 - 1
    Gamma_l = 2eta_l' (x) (2eta_0'-1) + (2eta_0'-1) (x) 2eta_l'
              + 4 sum_{j=1}^{l-1} eta_j' (x) eta_{l-j}'
              + sum_{j=0}^{l-1} eta_j'' (x) eta_{l-1-j}''
              - sum_{j=0}^{l} eta~_j (x) eta~_{l-j}
    The middle sum is empty for l = 1.
    """
    if l < 0 or int(l) != l:
        raise DomainError(f"Gamma index must be a non-negative integer, got {l}")
    outer = BivariateExpr.outer
    base = _shifted_derivative(0)

    if l == 0:
        t0 = eta(0).tilde()
        return outer(base, base) - outer(t0, t0) - BivariateExpr.constant(1)

    shifted = _shifted_derivative(l)
    total = outer(shifted, base) + outer(base, shifted)
    for j in range(1, l):
        total = total + outer(eta(j).derivative(), eta(l - j).derivative()) * 4
    for j in range(l):
        total = total + outer(eta(j).differentiate(2), eta(l - 1 - j).differentiate(2))
    for j in range(l + 1):
        total = total - outer(eta(j).tilde(), eta(l - j).tilde())
    logger.debug(f"Gamma_{l} built with {len(total.terms)} separable terms")
    return total


@lru_cache(maxsize=None)
def upsilon_l(l: int) -> SemicircleExpr:
    """
    Exact Upsilon_l(lambda)

    Upsilon_l = (lambda^2 - 4) sum_{j=0}^{l} eta_j'' eta_{l-j}''
                - sum_{j=0}^{l-1} eta_j''' eta_{l-1-j}'''
    """
    if l < 0 or int(l) != l:
        raise DomainError(f"Upsilon index must be a non-negative integer, got {l}")
    second = SemicircleExpr.zero()
    for j in range(l + 1):
        second = second + eta(j).differentiate(2) * eta(l - j).differentiate(2)
    third = SemicircleExpr.zero()
    for j in range(l):
        third = third + eta(j).differentiate(3) * eta(l - 1 - j).differentiate(3)
    return SemicircleExpr.power(2) * second - third


def gamma_zero_closed_form(lam: ComplexLike, mu: ComplexLike) -> ComplexLike:
    """(lambda mu - 4) / ((lambda^2 - 4)^(1/2) (mu^2 - 4)^(1/2)) - 1"""
    return (np.asarray(lam) * np.asarray(mu) - 4.0) / (branch_root(lam) * branch_root(mu)) - 1.0


# Coefficients of the rational display of Gamma_1 as (lambda power, mu power): c
_GAMMA_ONE_DISPLAY = {
    (1, 5): 5, (2, 4): 4, (0, 4): 4, (1, 3): -52, (3, 3): 3, (0, 2): -16,
    (4, 2): 4, (2, 2): -52, (1, 1): 208, (5, 1): 5, (3, 1): -52, (2, 0): -16,
    (0, 0): 320, (4, 0): 4,
}


def gamma_one_display(lam: complex, mu: complex) -> complex:
    """
    (lambda - mu)^2 P(lambda, mu) / ((lambda^2 - 4)^(7/2) (mu^2 - 4)^(7/2))

    The rational form of Gamma_1 as usually displayed in the literature.
    It equals gamma_l(1) / 2: only the doubled form has the diagonal limit
    Upsilon_1 / 4 = (21 lambda^2 + 20) (lambda^2 - 4)^(-5).
    """
    poly = sum(c * lam ** a * mu ** b for (a, b), c in _GAMMA_ONE_DISPLAY.items())
    return (lam - mu) ** 2 * poly / (branch_root(lam) * branch_root(mu)) ** 7
