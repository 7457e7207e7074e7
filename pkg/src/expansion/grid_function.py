"""
Chebyshev representation of smooth functions on [-L, L]
"""

import logging
from dataclasses import dataclass, field, replace
from typing import Callable, Dict, Optional, Tuple

import numpy as np
from numpy.polynomial import Chebyshev
from numpy.polynomial.chebyshev import chebpts2

from config.settings import get_settings

from ..errors import InputError
from ..numerics.quadrature import semicircle_rule

logger = logging.getLogger(__name__)

# relative size below which trailing coefficients are dropped before differentiation
CHOP_TOL = 1e-14


@dataclass(frozen=True)
class GridFunction:
    """
    Smooth function on [-L, L] as a Chebyshev interpolant

    Attributes:
        series: Chebyshev series with domain [-L, L]
        degree: Interpolation degree N
        tail: |c_N| of the interpolant, the truncation diagnostic
        endpoint_derivatives: k -> (f^(k)(-2), f^(k)(2)) where known exactly
    """

    series: Chebyshev
    degree: int
    tail: float
    endpoint_derivatives: Dict[int, Tuple[complex, complex]] = field(default_factory=dict)

    @classmethod
    def from_function(
        cls,
        func: Callable[[np.ndarray], np.ndarray],
        degree: int = None,
        half_width: float = 2.0,
        endpoint_derivatives: Optional[Dict[int, Tuple[complex, complex]]] = None,
    ) -> "GridFunction":
        """
        Interpolate func at the Chebyshev points of [-L, L]

        Args:
            func: Vectorised function (real or complex valued)
            degree: Interpolation degree (defaults to GUE_EXPAND_CHEBYSHEV_DEGREE)
            half_width: L >= 2

        Raises:
            InputError: If func returns non-finite values at the nodes
        """
        if half_width < 2.0:
            raise InputError(f"GridFunction domain must contain [-2, 2], got L={half_width}")
        degree = degree or get_settings().chebyshev_degree

        def checked(x):
            y = np.asarray(func(x))
            if not np.all(np.isfinite(y)):
                raise InputError("Function is not finite at the interpolation nodes")
            return y

        series = Chebyshev.interpolate(checked, degree, domain=[-half_width, half_width])
        return cls(
            series=series,
            degree=degree,
            tail=float(abs(series.coef[-1])),
            endpoint_derivatives=dict(endpoint_derivatives or {}),
        )

    @property
    def half_width(self) -> float:
        return float(self.series.domain[1])

    @property
    def coeffs(self) -> np.ndarray:
        return self.series.coef

    @property
    def is_complex(self) -> bool:
        return np.iscomplexobj(self.series.coef)

    def __call__(self, t):
        return self.series(t)

    def chopped(self) -> Chebyshev:
        """Series with trailing coefficients below CHOP_TOL * max|c| removed"""
        scale = float(np.max(np.abs(self.series.coef))) if self.series.coef.size else 0.0
        if scale == 0.0:
            return self.series
        return self.series.trim(CHOP_TOL * scale)

    def derivative(self, order: int = 1) -> "GridFunction":
        """Spectral derivative of the chopped interpolant"""
        series = self.chopped().deriv(order) if order else self.series
        shifted = {
            k - order: v for k, v in self.endpoint_derivatives.items() if k >= order
        }
        return replace(self, series=series, endpoint_derivatives=shifted)

    def interpolation_residual(self, func: Callable[[np.ndarray], np.ndarray]) -> float:
        """max |func - interpolant| at nodes staggered between the interpolation nodes"""
        L = self.half_width
        x = L * chebpts2(self.degree + 2)[1:-1]
        return float(np.max(np.abs(np.asarray(func(x)) - self.series(x))))

    def semicircle_pairing(self, nodes: int = None):
        """(1/2pi) integral_{-2}^{2} f(t) sqrt(4 - t^2) dt"""
        x, w = semicircle_rule(nodes or get_settings().semicircle_nodes)
        result = np.sum(w * self.series(x))
        return complex(result) if np.iscomplexobj(result) else float(result)

    def max_abs(self) -> float:
        x = self.half_width * chebpts2(self.degree + 1)
        return float(np.max(np.abs(self.series(x))))
