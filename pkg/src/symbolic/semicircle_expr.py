"""
Exact algebra on span{lambda^e (lambda^2 - 4)^(p/2) : e in {0, 1}, p integer}

Every coefficient of the one- and two-dimensional Cauchy transform
expansions lives in this family. Terms are keyed by (e, p) with
w = (lambda^2 - 4)^(1/2), so a key (e, p) stands for lambda^e w^p.
Products are reduced with lambda^2 = w^2 + 4, which keeps e in {0, 1}.
"""

import logging
from fractions import Fraction
from typing import Dict, Iterator, Mapping, Tuple, Union

import numpy as np

from ..errors import BranchCutError

logger = logging.getLogger(__name__)

Key = Tuple[int, int]
Scalar = Union[int, Fraction]
ComplexLike = Union[complex, np.ndarray]


def branch_root(lam: ComplexLike) -> ComplexLike:
    """
    (lambda^2 - 4)^(1/2) := lambda * sqrt(1 - 4/lambda^2), principal sqrt

    Holomorphic on C minus [-2, 2] and behaves like lambda at infinity.

    Raises:
        BranchCutError: If any lambda lies on the cut [-2, 2]
    """
    z = np.asarray(lam, dtype=complex)
    on_cut = (z.imag == 0.0) & (np.abs(z.real) <= 2.0)
    if np.any(on_cut):
        raise BranchCutError(f"lambda on the branch cut [-2, 2]: {z[on_cut] if z.ndim else z}")
    w = z * np.sqrt(1.0 - 4.0 / (z * z))
    return complex(w) if w.ndim == 0 else w


class SemicircleExpr:
    """
    Immutable exact linear combination of lambda^e (lambda^2 - 4)^(p/2)

    The canonical form carries no zero coefficients and only e in {0, 1};
    two expressions are equal exactly when their term maps are equal.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[Key, Scalar] = None):
        canonical: Dict[Key, Fraction] = {}
        for (e, p), c in (terms or {}).items():
            _accumulate(canonical, e, p, Fraction(c))
        self._terms = {k: v for k, v in canonical.items() if v != 0}

    # Constructors

    @classmethod
    def zero(cls) -> "SemicircleExpr":
        return cls()

    @classmethod
    def constant(cls, c: Scalar) -> "SemicircleExpr":
        return cls({(0, 0): c})

    @classmethod
    def lam(cls) -> "SemicircleExpr":
        """The expression lambda"""
        return cls({(1, 0): 1})

    @classmethod
    def power(cls, p: int, coeff: Scalar = 1) -> "SemicircleExpr":
        """coeff * (lambda^2 - 4)^(p/2)"""
        return cls({(0, int(p)): coeff})

    # Access

    @property
    def terms(self) -> Dict[Key, Fraction]:
        return dict(self._terms)

    def items(self) -> Iterator[Tuple[Key, Fraction]]:
        return iter(sorted(self._terms.items(), key=lambda kv: (-kv[0][1], -kv[0][0])))

    def is_zero(self) -> bool:
        return not self._terms

    def coefficient(self, e: int, p: int) -> Fraction:
        return self._terms.get((e, p), Fraction(0))

    # Arithmetic

    def __add__(self, other) -> "SemicircleExpr":
        other = _coerce(other)
        merged = dict(self._terms)
        for k, v in other._terms.items():
            merged[k] = merged.get(k, Fraction(0)) + v
        return SemicircleExpr(merged)

    __radd__ = __add__

    def __neg__(self) -> "SemicircleExpr":
        return SemicircleExpr({k: -v for k, v in self._terms.items()})

    def __sub__(self, other) -> "SemicircleExpr":
        return self + (-_coerce(other))

    def __rsub__(self, other) -> "SemicircleExpr":
        return _coerce(other) - self

    def __mul__(self, other) -> "SemicircleExpr":
        if isinstance(other, (int, Fraction)):
            return SemicircleExpr({k: v * other for k, v in self._terms.items()})
        other = _coerce(other)
        out: Dict[Key, Fraction] = {}
        for (e1, p1), c1 in self._terms.items():
            for (e2, p2), c2 in other._terms.items():
                _accumulate(out, e1 + e2, p1 + p2, c1 * c2)
        return SemicircleExpr(out)

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = SemicircleExpr.constant(other)
        if not isinstance(other, SemicircleExpr):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    # Calculus

    def derivative(self) -> "SemicircleExpr":
        """
        d/dlambda, using dw/dlambda = lambda / w:
            d[w^p]        = p lambda w^(p-2)
            d[lambda w^p] = (1 + p) w^p + 4p w^(p-2)
        """
        out: Dict[Key, Fraction] = {}
        for (e, p), c in self._terms.items():
            if e == 0:
                _accumulate(out, 1, p - 2, c * p)
            else:
                _accumulate(out, 0, p, c * (1 + p))
                _accumulate(out, 0, p - 2, c * 4 * p)
        return SemicircleExpr(out)

    def differentiate(self, order: int = 1) -> "SemicircleExpr":
        expr = self
        for _ in range(order):
            expr = expr.derivative()
        return expr

    def tilde(self) -> "SemicircleExpr":
        """e~ = e - lambda e'"""
        return self - SemicircleExpr.lam() * self.derivative()

    # Evaluation and text

    def evaluate(self, lam: ComplexLike) -> ComplexLike:
        """Complex value at lambda (scalar or array) under the branch of branch_root"""
        z = np.asarray(lam, dtype=complex)
        w = np.asarray(branch_root(z), dtype=complex)
        total = np.zeros_like(z)
        for (e, p), c in self._terms.items():
            term = float(c) * w ** p
            if e:
                term = term * z
            total = total + term
        return complex(total) if total.ndim == 0 else total

    __call__ = evaluate

    def to_text(self, ascii_only: bool = False) -> str:
        """
        Canonical text: terms "c·λ^e·(λ²−4)^(p/2)" by decreasing power of w

        Example: "21·(λ²−4)^(−9/2) + 105·(λ²−4)^(−11/2)"
        """
        if not self._terms:
            return "0"
        lam_sym, base, minus, dot = ("lam", "(lam^2-4)", "-", "*") if ascii_only else ("λ", "(λ²−4)", "−", "·")
        parts = []
        for i, ((e, p), c) in enumerate(self.items()):
            factors = []
            if e:
                factors.append(lam_sym)
            if p:
                factors.append(f"{base}^({_exponent(p, minus)})")
            mag = abs(c)
            if factors and mag == 1:
                body = dot.join(factors)
            else:
                body = dot.join([str(mag)] + factors)
            if i == 0:
                parts.append(f"{minus}{body}" if c < 0 else body)
            else:
                parts.append(f" {minus} {body}" if c < 0 else f" + {body}")
        return "".join(parts)

    def __repr__(self) -> str:
        return f"SemicircleExpr({self.to_text(ascii_only=True)})"


def _exponent(p: int, minus: str) -> str:
    sign = minus if p < 0 else ""
    if p % 2 == 0:
        return f"{sign}{abs(p) // 2}"
    return f"{sign}{abs(p)}/2"


def _accumulate(out: Dict[Key, Fraction], e: int, p: int, c: Fraction) -> None:
    """Add c lambda^e w^p to out, reducing lambda^2 = w^2 + 4"""
    if c == 0:
        return
    while e >= 2:
        _accumulate(out, e - 2, p + 2, c)
        c = 4 * c
        e -= 2
    out[(e, p)] = out.get((e, p), Fraction(0)) + c


def _coerce(value) -> SemicircleExpr:
    if isinstance(value, SemicircleExpr):
        return value
    if isinstance(value, (int, Fraction)):
        return SemicircleExpr.constant(value)
    raise TypeError(f"Cannot combine SemicircleExpr with {type(value).__name__}")
