"""Exception hierarchy shared by every package.

Library code raises; only the CLI translates these into exit statuses.
"""

from __future__ import annotations


class NoisyGateError(RuntimeError):
    """Base class for all errors raised by this repository."""
    pass


class DomainError(NoisyGateError, ValueError):
    """Raised when an input lies outside the domain of an operation."""
    pass


class InvalidAngleError(DomainError):
    """Raised for rotation angles outside the open interval (0, 2π).

    θ = 0 (equivalently 2π) is where the QFI is discontinuous, so the
    Cramér-Rao bound does not hold there.
    """
    pass


class UnboundedOptimumError(DomainError):
    """Raised when the optimal step count is requested for a noiseless gate."""
    pass


class NoInformationError(DomainError):
    """Raised when the optimal step count is requested for a fully random angle (k = 0)."""
    pass


class UndefinedFisherInformationError(DomainError):
    """Raised when a projective outcome is deterministic but its probability still moves with θ."""
    pass


class RegimeMismatchError(DomainError):
    """Raised when a closed-form QFI is requested outside the regime it describes."""
    pass


class ConfigError(DomainError):
    """Raised for malformed command-line or config-file input."""

    def __init__(self, field: str, message: str):
        self.field = field
        super().__init__(f"{field}: {message}")


class NumericalError(NoisyGateError):
    """Raised when a numerical procedure fails to converge or would overflow."""
    pass
