"""Exceptions package."""

from inexact_euler.exceptions.base import InexactEulerError
from inexact_euler.exceptions.solver_exceptions import (
    BoundViolationError,
    ConfigurationError,
    ContractError,
    DimensionError,
    DivergenceError,
    DomainError,
    NonConvergenceError,
    PreconditionError,
    ReferenceAccuracyError,
    SingularityError,
)

__all__ = [
    "InexactEulerError",
    "BoundViolationError",
    "ConfigurationError",
    "ContractError",
    "DimensionError",
    "DivergenceError",
    "DomainError",
    "NonConvergenceError",
    "PreconditionError",
    "ReferenceAccuracyError",
    "SingularityError",
]
