"""
Data models for expansion reports
"""

from typing import List, Optional, Union

from pydantic import BaseModel, Field

from ..numerics.rate_fit import RateFit

Number = Union[float, complex]


class AlphaEstimate(BaseModel):
    """alpha_j(g) by both computation paths"""

    g: str
    j: int = Field(..., ge=0)
    distribution: Number = Field(..., description="Chebyshev distribution form (primary)")
    iterated: Optional[Number] = Field(None, description="Iterated-T form, None if not computed")
    gap: Optional[float] = Field(None, description="|iterated - distribution|")


class ExpansionReport(BaseModel):
    """Expansion of E{tr_n g(X_n)} in powers of n^-2"""

    g: str = Field(..., description="Input label")
    n: int = Field(..., ge=1)
    k: int = Field(..., ge=0, description="Truncation order")
    alphas: List[Number] = Field(..., description="alpha_0 .. alpha_k")
    partial_sums: List[Number] = Field(..., description="sum_{j<=m} alpha_j n^-2j for m = 0..k")
    exact: Number = Field(..., description="integral g h_n by whole-line quadrature")
    remainder: Number = Field(..., description="exact - partial_sums[k]")
    ladder: List[int] = Field(default_factory=list)
    ladder_remainders: List[Number] = Field(default_factory=list)
    rate: Optional[RateFit] = Field(None, description="log-log fit of |remainder| over the ladder")

    @property
    def slope(self) -> Optional[float]:
        return self.rate.slope if self.rate else None
