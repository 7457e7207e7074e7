"""
Data models for Monte Carlo estimates
"""

from typing import Optional, Union

from pydantic import BaseModel, Field

Number = Union[float, complex]


class EmpiricalStatistics(BaseModel):
    """Monte Carlo estimates of E{tr_n f} and Cov{Tr_n f, Tr_n g}"""

    n: int = Field(..., ge=1)
    sigma2: float
    seed: int
    draws: int = Field(..., ge=1)
    blocks: int = Field(..., ge=2, description="Jackknife blocks")
    f: str
    g: str
    mean_f: Number = Field(..., description="Estimate of E{tr_n f(X_n)}")
    mean_f_stderr: float
    mean_g: Number
    cov_fg: Number = Field(..., description="Estimate of Cov{Tr_n f, Tr_n g}")
    cov_stderr: float

    def within(self, expected_mean: Optional[Number] = None, expected_cov: Optional[Number] = None,
               sigmas: float = 4.0) -> bool:
        """True when the given reference values lie within `sigmas` standard errors"""
        ok = True
        if expected_mean is not None:
            ok &= abs(self.mean_f - expected_mean) <= sigmas * self.mean_f_stderr
        if expected_cov is not None:
            ok &= abs(self.cov_fg - expected_cov) <= sigmas * self.cov_stderr
        return bool(ok)
