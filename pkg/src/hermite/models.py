"""
Data models for the Hermite / density layer
"""

from dataclasses import dataclass

import numpy as np
from pydantic import BaseModel, Field


class DensityBundle(BaseModel):
    """GUE(n, 1/n) spectral density and its derivatives at one point"""

    n: int = Field(..., ge=1, description="Matrix size")
    x: float
    h: float = Field(..., description="Density h_n(x)")
    h1: float = Field(..., description="First derivative h_n'(x)")
    h2: float = Field(..., description="Second derivative h_n''(x)")
    h3: float = Field(..., description="Third derivative, solved from the ODE")
    h3_direct: float = Field(..., description="Third derivative from Hermite ladder identities")
    h_tilde: float = Field(..., description="h_n(x) - x h_n'(x)")
    ode_residual: float = Field(
        ..., description="|h3_direct/n^2 + (4 - x^2) h1 + x h|"
    )

    def ode_scale(self) -> float:
        """Scale used by the residual tolerance: max(1, |h3|/n^2)"""
        return max(1.0, abs(self.h3_direct) / self.n ** 2)


@dataclass(frozen=True)
class DensityArrays:
    """Vectorised counterpart of DensityBundle on an array of points"""

    n: int
    x: np.ndarray
    h: np.ndarray
    h1: np.ndarray
    h2: np.ndarray
    h3: np.ndarray
    h3_direct: np.ndarray

    @property
    def h_tilde(self) -> np.ndarray:
        return self.h - self.x * self.h1

    @property
    def ode_residual(self) -> np.ndarray:
        return np.abs(
            self.h3_direct / self.n ** 2 + (4.0 - self.x ** 2) * self.h1 + self.x * self.h
        )

    def bundle(self, i: int) -> DensityBundle:
        return DensityBundle(
            n=self.n,
            x=float(self.x[i]),
            h=float(self.h[i]),
            h1=float(self.h1[i]),
            h2=float(self.h2[i]),
            h3=float(self.h3[i]),
            h3_direct=float(self.h3_direct[i]),
            h_tilde=float(self.h_tilde[i]),
            ode_residual=float(self.ode_residual[i]),
        )


@dataclass(frozen=True)
class KernelField:
    """rho_n on a tensor Gauss-Legendre grid of the truncation box"""

    n: int
    grid_x: np.ndarray
    grid_y: np.ndarray
    weights_x: np.ndarray
    weights_y: np.ndarray
    values: np.ndarray

    def integrate(self, integrand: np.ndarray = None) -> complex:
        """Quadrature of integrand * rho_n over the box (integrand on the grid)"""
        field = self.values if integrand is None else integrand * self.values
        result = self.weights_x @ field @ self.weights_y
        return complex(result) if np.iscomplexobj(result) else float(result)

    def total_mass(self) -> float:
        return float(self.integrate())

    def is_symmetric(self, atol: float = 1e-14) -> bool:
        """rho_n(x,y) = rho_n(y,x) and rho_n(x,y) = rho_n(-x,-y) on a symmetric grid"""
        v = self.values
        scale = atol * max(1.0, float(np.max(np.abs(v))))
        return bool(
            np.allclose(v, v.T, atol=scale, rtol=0)
            and np.allclose(v, v[::-1, ::-1], atol=scale, rtol=0)
        )
