"""
Test functions g for the expansion of E{tr_n g(X_n)}

A SmoothInput carries the values of g and, in analytic mode, closed-form
derivatives up to a declared order. In sampled mode g is a GridFunction and
derivatives come from spectral differentiation.
"""

import logging
import math
from typing import Callable, Dict, Optional, Sequence

import numpy as np
from numpy.polynomial import Polynomial
from numpy.polynomial.hermite import hermval

from ..errors import CapabilityError, DomainError, InputError
from .grid_function import GridFunction

logger = logging.getLogger(__name__)

Evaluator = Callable[[np.ndarray], np.ndarray]
DerivativeEvaluator = Callable[[int, np.ndarray], np.ndarray]

UNLIMITED = 10 ** 6


class SmoothInput:
    """
    A smooth (possibly complex-valued) function with derivative access

    Analytic mode: derivative(k, x) calls a closed form for k <= max_order.
    Sampled mode: derivative(k, x) differentiates the stored GridFunction.
    """

    def __init__(
        self,
        name: str,
        value: Evaluator,
        derivative: Optional[DerivativeEvaluator] = None,
        max_order: int = 0,
        grid: Optional[GridFunction] = None,
    ):
        """
        Initialize input

        Args:
            name: Label used in reports
            value: x -> g(x), vectorised
            derivative: (k, x) -> g^(k)(x) for 1 <= k <= max_order
            max_order: Highest available derivative order
            grid: GridFunction for sampled mode
        """
        self.name = name
        self._value = value
        self._derivative = derivative
        self.max_order = max_order
        self.grid = grid
        self._grid_derivatives: Dict[int, GridFunction] = {}

    @property
    def sampled(self) -> bool:
        return self.grid is not None

    def __call__(self, x):
        return self.value(x)

    def __repr__(self) -> str:
        mode = "sampled" if self.sampled else f"analytic, order {self.max_order}"
        return f"SmoothInput({self.name}, {mode})"

    def value(self, x):
        return self._value(np.asarray(x, dtype=float))

    def derivative(self, k: int, x):
        """k-th derivative at x"""
        if k == 0:
            return self.value(x)
        x = np.asarray(x, dtype=float)
        if self.sampled:
            if k not in self._grid_derivatives:
                self._grid_derivatives[k] = self.grid.derivative(k)
            return self._grid_derivatives[k](x)
        if k > self.max_order or self._derivative is None:
            raise CapabilityError(
                f"{self.name} supplies derivatives up to order {self.max_order}, {k} requested"
            )
        return self._derivative(k, x)

    def require_order(self, k: int) -> None:
        """Raise CapabilityError unless derivatives up to k are accessible"""
        if not self.sampled and k > self.max_order:
            raise CapabilityError(
                f"{self.name} supplies derivatives up to order {self.max_order}, {k} needed"
            )

    def is_complex(self) -> bool:
        return bool(np.iscomplexobj(self.value(np.array([0.0, 1.0]))))

    # Catalog

    @classmethod
    def polynomial(cls, coeffs: Sequence[float], name: str = None) -> "SmoothInput":
        """sum_i coeffs[i] x^i (increasing powers)"""
        if len(coeffs) == 0:
            raise InputError("Polynomial needs at least one coefficient")
        poly = Polynomial(np.asarray(coeffs, dtype=float))
        return cls(
            name=name or f"poly:{','.join(f'{c:g}' for c in coeffs)}",
            value=poly,
            derivative=lambda k, x: poly.deriv(k)(x),
            max_order=UNLIMITED,
        )

    @classmethod
    def monomial(cls, p: int) -> "SmoothInput":
        return cls.polynomial([0.0] * p + [1.0], name=f"x^{p}")

    @classmethod
    def gaussian(cls) -> "SmoothInput":
        """e^(-x^2); d^k/dx^k = (-1)^k H_k(x) e^(-x^2)"""

        def deriv(k, x):
            coeffs = np.zeros(k + 1)
            coeffs[k] = (-1.0) ** k
            return hermval(x, coeffs) * np.exp(-x * x)

        return cls(name="gauss", value=lambda x: np.exp(-x * x), derivative=deriv, max_order=UNLIMITED)

    @classmethod
    def cosine(cls) -> "SmoothInput":
        return cls(
            name="cos",
            value=np.cos,
            derivative=lambda k, x: np.cos(x + k * math.pi / 2.0),
            max_order=UNLIMITED,
        )

    @classmethod
    def resolvent(cls, lam: complex) -> "SmoothInput":
        """g_lambda(x) = 1/(lambda - x); g^(k) = k!/(lambda - x)^(k+1)"""
        lam = complex(lam)
        if lam.imag == 0.0 and abs(lam.real) <= 2.0:
            raise DomainError(f"Resolvent parameter {lam} lies on [-2, 2]")

        return cls(
            name=f"resolvent:{lam}",
            value=lambda x: 1.0 / (lam - x),
            derivative=lambda k, x: math.factorial(k) / (lam - x) ** (k + 1),
            max_order=UNLIMITED,
        )

    @classmethod
    def fourier(cls, z: float) -> "SmoothInput":
        """e^(izx)"""
        z = float(z)
        return cls(
            name=f"fourier:{z:g}",
            value=lambda x: np.exp(1j * z * x),
            derivative=lambda k, x: (1j * z) ** k * np.exp(1j * z * x),
            max_order=UNLIMITED,
        )

    @classmethod
    def from_callable(
        cls,
        func: Evaluator,
        derivatives: Sequence[Evaluator] = (),
        name: str = "custom",
    ) -> "SmoothInput":
        """User function with derivatives[k-1] = g^(k)"""
        derivs = list(derivatives)
        return cls(
            name=name,
            value=func,
            derivative=lambda k, x: derivs[k - 1](x),
            max_order=len(derivs),
        )

    @classmethod
    def sampled_from(cls, grid: GridFunction, name: str = "sampled") -> "SmoothInput":
        return cls(name=name, value=grid, grid=grid)

    def real_part(self) -> "SmoothInput":
        return self._mapped(np.real, f"re({self.name})")

    def imag_part(self) -> "SmoothInput":
        return self._mapped(np.imag, f"im({self.name})")

    def _mapped(self, op: Callable, name: str) -> "SmoothInput":
        if self.sampled:
            return SmoothInput.sampled_from(
                GridFunction(
                    series=self.grid.series.__class__(op(self.grid.coeffs), domain=self.grid.series.domain),
                    degree=self.grid.degree,
                    tail=self.grid.tail,
                ),
                name=name,
            )
        return SmoothInput(
            name=name,
            value=lambda x: op(self.value(x)),
            derivative=lambda k, x: op(self.derivative(k, x)),
            max_order=self.max_order,
        )
