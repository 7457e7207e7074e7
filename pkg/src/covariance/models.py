"""
Data models for Cauchy transforms and covariance reports
"""

from typing import List, Optional, Union

from pydantic import BaseModel, Field

from ..numerics.rate_fit import RateFit

Number = Union[float, complex]


class ResolventSet(BaseModel):
    """G_n and its first three lambda-derivatives at one point"""

    n: int = Field(..., ge=1)
    lam: complex = Field(..., description="Spectral parameter")
    G: complex = Field(..., description="integral h_n(t) / (lambda - t) dt")
    G1: complex
    G2: complex
    G3: complex
    G_tilde: complex = Field(..., description="G - lambda G1")
    nodes: int = Field(..., description="Quadrature nodes used")
    radius: float = Field(..., description="Truncation radius used")

    @property
    def ode_residual(self) -> float:
        """|n^-2 G''' + (4 - lambda^2) G' + lambda G - 2|"""
        lam = self.lam
        return abs(self.G3 / self.n ** 2 + (4 - lam * lam) * self.G1 + lam * self.G - 2)

    @property
    def nonlinear_residual(self) -> float:
        """|G~^2 - 4 G'^2 + 4 G' - n^-2 G''^2|"""
        return abs(self.G_tilde ** 2 - 4 * self.G1 ** 2 + 4 * self.G1 - self.G2 ** 2 / self.n ** 2)


class Cov2Report(BaseModel):
    """Cov{Tr (lambda - X_n)^-1, Tr (mu - X_n)^-1} with its 1/n^2 expansion"""

    n: int = Field(..., ge=1)
    lam: complex
    mu: complex
    k: int = Field(..., ge=0)
    diagonal: bool = Field(..., description="True when the diagonal formulas were used")
    exact: complex = Field(..., description="Closed form in terms of G_n")
    expansion_partials: List[complex] = Field(..., description="Partial sums through order 0..k")
    remainder: complex
    ladder: List[int] = Field(default_factory=list)
    ladder_remainders: List[complex] = Field(default_factory=list)
    rate: Optional[RateFit] = None

    @property
    def slope_diagnostic(self) -> Optional[float]:
        return self.rate.slope if self.rate else None


class CovarianceEstimate(BaseModel):
    """Cov{Tr_n f(X_n), Tr_n g(X_n)} by kernel quadrature"""

    f: str
    g: str
    n: Optional[int] = Field(None, description="None for the n -> infinity limit")
    value: Number
    nodes: int
    radius: Optional[float] = None
