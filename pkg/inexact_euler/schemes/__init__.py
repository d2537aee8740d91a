"""Randomized and deterministic Euler integrators."""

from inexact_euler.schemes.config import ImplicitSolverConfig, StepReport
from inexact_euler.schemes.deterministic import deterministic_variants
from inexact_euler.schemes.dispatch import integrate
from inexact_euler.schemes.explicit import explicit_rand_euler
from inexact_euler.schemes.implicit import check_implicit_preconditions, implicit_rand_euler

__all__ = [
    "ImplicitSolverConfig",
    "StepReport",
    "check_implicit_preconditions",
    "deterministic_variants",
    "explicit_rand_euler",
    "implicit_rand_euler",
    "integrate",
]
