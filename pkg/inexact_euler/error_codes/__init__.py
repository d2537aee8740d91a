"""Error codes package."""

from inexact_euler.error_codes.base import (
    EXIT_BOUND_VIOLATION,
    EXIT_CONFIG,
    EXIT_INTERNAL,
    EXIT_PRECONDITION,
    ErrorCode,
)
from inexact_euler.error_codes.common import CommonErrorCodes

__all__ = [
    "ErrorCode",
    "CommonErrorCodes",
    "EXIT_INTERNAL",
    "EXIT_CONFIG",
    "EXIT_PRECONDITION",
    "EXIT_BOUND_VIOLATION",
]
