"""Acceptance suites run by the validate command"""

from .suites import SUITES, run_suite
from .models import CheckResult, SuiteReport

__all__ = [
    "SUITES",
    "run_suite",
    "CheckResult",
    "SuiteReport",
]
