"""
Exception hierarchy shared by all modules
"""


class GueExpandError(Exception):
    """Base class for every error raised by this package"""


class DomainError(GueExpandError, ValueError):
    """An argument lies outside the domain of the operation"""


class BranchCutError(DomainError):
    """Evaluation requested on the cut [-2, 2] of (lambda^2 - 4)^(1/2)"""


class InputError(GueExpandError, ValueError):
    """A function input cannot be evaluated where it is needed"""


class CapabilityError(GueExpandError):
    """A function input does not supply enough derivatives"""


class NumericError(GueExpandError, ArithmeticError):
    """A numerical procedure failed to produce a trustworthy value"""

    def __init__(self, message: str, diagnostics: dict = None):
        super().__init__(message)
        self.diagnostics = diagnostics or {}


class ConditioningError(NumericError):
    """The spectral parameter is too close to the spectrum for quadrature"""
