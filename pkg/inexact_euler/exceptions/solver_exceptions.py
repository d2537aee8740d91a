"""Concrete exceptions raised by the solver library and CLI."""

import traceback
from typing import Any, Optional

from inexact_euler.error_codes.common import CommonErrorCodes
from inexact_euler.exceptions.base import InexactEulerError


class DimensionError(InexactEulerError, ValueError):
    """Empty or mismatched vector dimensions."""

    def __init__(self, reason: str, data: Optional[Any] = None):
        super().__init__(
            error_code=CommonErrorCodes.DIMENSION_ERROR,
            message_params={"reason": reason},
            data=data
        )


class DomainError(InexactEulerError, ValueError):
    """An argument lies outside the set the operation is defined on."""

    def __init__(self, reason: str, data: Optional[Any] = None):
        super().__init__(
            error_code=CommonErrorCodes.DOMAIN_ERROR,
            message_params={"reason": reason},
            data=data
        )


class ConfigurationError(InexactEulerError):
    """Experiment configuration rejected before any computation."""

    def __init__(self, reason: str, data: Optional[Any] = None):
        super().__init__(
            error_code=CommonErrorCodes.CONFIGURATION_ERROR,
            message_params={"reason": reason},
            data=data
        )


class PreconditionError(InexactEulerError):
    """Step-size conditions of a scheme are not met by the declared constants."""

    def __init__(self, reason: str, data: Optional[Any] = None):
        super().__init__(
            error_code=CommonErrorCodes.PRECONDITION_ERROR,
            message_params={"reason": reason},
            data=data
        )


class DivergenceError(InexactEulerError):
    """A scheme produced a non-finite state."""

    def __init__(self, step: int, path: Optional[int] = None, include_trace: bool = False):
        self.step = step
        self.path = path
        data = {"step": step}
        if path is not None:
            data["path"] = path
        super().__init__(
            error_code=CommonErrorCodes.DIVERGENCE_ERROR,
            message_params={"step": step},
            data=data,
            stack_trace=traceback.format_exc() if include_trace else None
        )

    def on_path(self, path: int) -> "DivergenceError":
        """Copy of this error tagged with the ensemble path index."""
        return DivergenceError(step=self.step, path=path)


class NonConvergenceError(InexactEulerError):
    """The implicit fixed-point iteration exhausted its iteration budget."""

    def __init__(self, step: int, max_iterations: int, residual: float):
        self.step = step
        super().__init__(
            error_code=CommonErrorCodes.NONCONVERGENCE_ERROR,
            message_params={"step": step, "max_iterations": max_iterations},
            data={"step": step, "residual": residual}
        )


class SingularityError(InexactEulerError):
    """An implicit step factor has a vanishing denominator."""

    def __init__(self, reason: str, data: Optional[Any] = None):
        super().__init__(
            error_code=CommonErrorCodes.SINGULARITY_ERROR,
            message_params={"reason": reason},
            data=data
        )


class ReferenceAccuracyError(InexactEulerError):
    """Doubling the reference mesh changed the reference solution too much."""

    def __init__(self, difference: float, tolerance: float):
        super().__init__(
            error_code=CommonErrorCodes.REFERENCE_ACCURACY_ERROR,
            message_params={"difference": difference, "tolerance": tolerance},
            data={"difference": difference, "tolerance": tolerance}
        )


class BoundViolationError(InexactEulerError):
    """An observed quantity exceeded a proven a priori bound."""

    def __init__(self, bounds: str, data: Optional[Any] = None):
        super().__init__(
            error_code=CommonErrorCodes.BOUND_VIOLATION,
            message_params={"bounds": bounds},
            data=data
        )


class ContractError(InexactEulerError):
    """A built-in component broke its own documented contract."""

    def __init__(self, reason: str, data: Optional[Any] = None, include_trace: bool = True):
        super().__init__(
            error_code=CommonErrorCodes.CONTRACT_ERROR,
            message_params={"reason": reason},
            data=data,
            stack_trace=traceback.format_exc() if include_trace else None
        )
