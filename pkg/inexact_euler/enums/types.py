"""Enumeration types shared across the solver library."""

from enum import Enum


class ErrorSeverity(Enum):
    """Error severity levels."""
    INFO = "INFO"
    WARNING = "WARNING"
    ERROR = "ERROR"
    FATAL = "FATAL"


class SchemeTag(Enum):
    """One-step Euler schemes that can produce a trajectory."""
    EXPLICIT_RAND = "explicit"
    IMPLICIT_RAND = "implicit"
    EXPLICIT_DET = "explicit-det"
    IMPLICIT_DET = "implicit-det"

    @property
    def is_implicit(self) -> bool:
        return self in (SchemeTag.IMPLICIT_RAND, SchemeTag.IMPLICIT_DET)


class DeterministicVariant(Enum):
    """Classical Euler variants obtained by pinning the evaluation point."""
    EXPLICIT_LEFT_NODE = "explicit-left-node"
    IMPLICIT_RIGHT_NODE = "implicit-right-node"


class Predictor(Enum):
    """Starting guess for the implicit fixed-point iteration."""
    PREVIOUS_NODE = "previous-node"
    EXPLICIT_EULER = "explicit-euler"


class NoiseClass(Enum):
    """Corrupting-function classes: K1 bounds growth, K2 also bounds the state-Lipschitz constant."""
    K1 = "K1"
    K2 = "K2"


class NoiseKind(Enum):
    """Built-in corrupting functions."""
    ZERO = "zero"
    CONSTANT_DIRECTION = "constant-direction"
    LINEAR_IN_STATE = "linear-in-state"
    STATE_SCALED_SINE = "state-scaled-sine"
    ADVERSARIAL_SIGN = "adversarial-sign"


class StreamPurpose(Enum):
    """What a random stream is used for; part of the stream identity."""
    TAU_DRAWS = 0
    NOISE_DRAWS = 1


class Verdict(Enum):
    """Finite-horizon stability verdict."""
    STABLE = "stable"
    UNSTABLE = "unstable"
    INCONCLUSIVE = "inconclusive"


class StabilityMode(Enum):
    """Recurrence simulated by the stability laboratory."""
    EXPLICIT = "explicit"
    IMPLICIT = "implicit"
    EXPLICIT_DET = "explicit-det"
    IMPLICIT_DET = "implicit-det"

    @property
    def is_implicit(self) -> bool:
        return self in (StabilityMode.IMPLICIT, StabilityMode.IMPLICIT_DET)

    @property
    def is_deterministic(self) -> bool:
        return self in (StabilityMode.EXPLICIT_DET, StabilityMode.IMPLICIT_DET)

    @property
    def deterministic_counterpart(self) -> "StabilityMode":
        if self.is_implicit:
            return StabilityMode.IMPLICIT_DET
        return StabilityMode.EXPLICIT_DET


class Plane(Enum):
    """Coordinates in which a stability raster is laid out."""
    LAMBDA = "lambda"
    H2LAMBDA = "h2lambda"
