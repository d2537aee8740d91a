"""Noise classes K1 / K2 and perturbed information."""

from inexact_euler.noise.builder import NoiseModelBuilder
from inexact_euler.noise.membership import NoiseClassReport, verify_class_membership
from inexact_euler.noise.models import NoiseModel, PerturbedProblem, corrupt, zero_noise

__all__ = [
    "NoiseClassReport",
    "NoiseModel",
    "NoiseModelBuilder",
    "PerturbedProblem",
    "corrupt",
    "verify_class_membership",
    "zero_noise",
]
