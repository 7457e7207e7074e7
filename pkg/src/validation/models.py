"""
Data models for validation suites
"""

from typing import List, Optional

from pydantic import BaseModel, Field


class CheckResult(BaseModel):
    """Outcome of one numerical or exact check"""

    name: str
    passed: bool
    value: Optional[float] = Field(None, description="Measured error, slope or statistic")
    tolerance: Optional[float] = Field(None, description="Bound the value was compared with")
    detail: str = ""


class SuiteReport(BaseModel):
    """All checks of one suite"""

    suite: str
    checks: List[CheckResult] = Field(default_factory=list)
    elapsed: float = Field(0.0, description="Wall time in seconds")

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    @property
    def failures(self) -> List[CheckResult]:
        return [c for c in self.checks if not c.passed]
