"""
Data models for the coefficient algebra
"""

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Tuple

from pydantic import BaseModel, Field


@dataclass(frozen=True)
class CjrTable:
    """
    Exact coefficients C_{j,r}, 2j <= r <= 3j-1, for j = 1..max_j

    eta_j(lambda) = sum_r C_{j,r} (lambda^2 - 4)^(-r-1/2)
    """

    max_j: int
    entries: Dict[Tuple[int, int], Fraction] = field(default_factory=dict)

    def get(self, j: int, r: int) -> Fraction:
        """C_{j,r}, zero outside 2j <= r <= 3j-1"""
        if j < 1 or j > self.max_j:
            raise KeyError(f"j={j} outside table range 1..{self.max_j}")
        return self.entries.get((j, r), Fraction(0))

    def row(self, j: int) -> Dict[int, Fraction]:
        return {r: self.get(j, r) for r in range(2 * j, 3 * j)}

    def all_positive(self) -> bool:
        return all(c > 0 for c in self.entries.values())


class CoefficientTerm(BaseModel):
    """One exact term c * lambda^e * (lambda^2 - 4)^(p/2), for serialisation"""

    coefficient: str = Field(..., description="Exact rational as 'a' or 'a/b'")
    lambda_power: int = Field(..., ge=0, le=1)
    root_power: int = Field(..., description="p in (lambda^2 - 4)^(p/2)")


class ExactExpression(BaseModel):
    """Serialisable form of a SemicircleExpr"""

    text: str
    terms: List[CoefficientTerm]
