"""Fixture library of initial-value problems."""

from inexact_euler.problems.fixtures import (
    adversarial_pair,
    holder_time_probe,
    linear_autonomous,
    lipschitz_state_probe,
    stability_problem,
)
from inexact_euler.problems.registry import FIXTURE_NAMES, parse_fixture_name, resolve_fixture

__all__ = [
    "FIXTURE_NAMES",
    "adversarial_pair",
    "holder_time_probe",
    "linear_autonomous",
    "lipschitz_state_probe",
    "parse_fixture_name",
    "resolve_fixture",
    "stability_problem",
]
