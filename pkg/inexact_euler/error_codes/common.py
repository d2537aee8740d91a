"""Error code catalogue."""

from inexact_euler.error_codes.base import ErrorCode
from inexact_euler.enums import ErrorSeverity


class CommonErrorCodes:
    """Every failure the library and CLI can report."""

    # Input domain
    DIMENSION_ERROR = ErrorCode(
        code="EUL100001",
        severity=ErrorSeverity.ERROR,
        message_template="Dimension error: {reason}",
    )

    DOMAIN_ERROR = ErrorCode(
        code="EUL100002",
        severity=ErrorSeverity.ERROR,
        message_template="Value outside its domain: {reason}",
    )

    # Configuration
    CONFIGURATION_ERROR = ErrorCode(
        code="EUL200001",
        severity=ErrorSeverity.ERROR,
        message_template="Invalid configuration: {reason}",
    )

    # Numerical preconditions and runtime failures
    PRECONDITION_ERROR = ErrorCode(
        code="EUL300001",
        severity=ErrorSeverity.ERROR,
        message_template="Numerical precondition violated: {reason}",
    )

    DIVERGENCE_ERROR = ErrorCode(
        code="EUL300002",
        severity=ErrorSeverity.ERROR,
        message_template="Non-finite state at step {step}",
    )

    NONCONVERGENCE_ERROR = ErrorCode(
        code="EUL300003",
        severity=ErrorSeverity.ERROR,
        message_template="Fixed-point iteration did not converge at step {step} within {max_iterations} iterations",
    )

    SINGULARITY_ERROR = ErrorCode(
        code="EUL300004",
        severity=ErrorSeverity.ERROR,
        message_template="Singular step factor: {reason}",
    )

    REFERENCE_ACCURACY_ERROR = ErrorCode(
        code="EUL300005",
        severity=ErrorSeverity.ERROR,
        message_template="Reference solution failed its self-check: difference {difference:.3e} exceeds {tolerance:.1e}",
    )

    # A priori bounds
    BOUND_VIOLATION = ErrorCode(
        code="EUL400001",
        severity=ErrorSeverity.FATAL,
        message_template="A priori bound violated: {bounds}",
    )

    # Internal contracts
    CONTRACT_ERROR = ErrorCode(
        code="EUL900001",
        severity=ErrorSeverity.FATAL,
        message_template="Internal contract violated: {reason}",
    )
