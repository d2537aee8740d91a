"""Enumeration module for inexact-euler."""

from inexact_euler.enums.types import (
    DeterministicVariant,
    ErrorSeverity,
    NoiseClass,
    NoiseKind,
    Plane,
    Predictor,
    SchemeTag,
    StabilityMode,
    StreamPurpose,
    Verdict,
)

__all__ = [
    "DeterministicVariant",
    "ErrorSeverity",
    "NoiseClass",
    "NoiseKind",
    "Plane",
    "Predictor",
    "SchemeTag",
    "StabilityMode",
    "StreamPurpose",
    "Verdict",
]
