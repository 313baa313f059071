"""Domain Exceptions.

This module defines all domain-specific exceptions.
These exceptions represent invalid arguments, exceeded limits and
contract violations raised by the analysis, encoding and search layers.
"""


class DomainException(Exception):
    """Base exception for all domain errors."""

    def __init__(self, message: str) -> None:
        self.message = message
        super().__init__(self.message)


class DomainValidationError(DomainException):
    """Raised when an argument violates an operation's precondition."""

    pass


class CapacityError(DomainException):
    """Raised when a requested size exceeds a configured limit."""

    def __init__(self, what: str, n: int, limit: int) -> None:
        self.what = what
        self.n = n
        self.limit = limit
        super().__init__(f"{what} with n={n} exceeds the configured limit n<={limit}")


class DecodeError(DomainException):
    """Raised when a solver model or a stored record cannot be decoded."""

    pass


class SolverConfigurationError(DomainException):
    """Raised when the external solver is missing or misconfigured."""

    pass


class SolverProtocolError(DomainException):
    """Raised when solver output does not follow the SAT-competition conventions."""

    def __init__(self, message: str, output: str = "") -> None:
        self.output = output
        super().__init__(message)


class ConsistencyError(DomainException):
    """Raised when a decoded model fails re-verification.

    This always signals an encoder bug and is never downgraded to a verdict.
    """

    pass
