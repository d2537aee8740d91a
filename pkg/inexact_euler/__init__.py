"""
inexact-euler
~~~~~~~~~~~~~

Randomized explicit and implicit Euler schemes for initial-value problems
whose right-hand side and initial value are only known up to noise, with a
Monte-Carlo error harness, a-priori bound checks and a stability laboratory.

:license: MIT
"""

from inexact_euler.core import (
    ClassConstants,
    ProblemSpec,
    ProblemSpecBuilder,
    ProblemValidator,
    RandomMesh,
    Trajectory,
    compute_class_constants,
    eval_dense,
    make_mesh,
)
from inexact_euler.enums import NoiseClass, NoiseKind, SchemeTag, StabilityMode, Verdict
from inexact_euler.error_codes import CommonErrorCodes, ErrorCode
from inexact_euler.exceptions import InexactEulerError
from inexact_euler.noise import NoiseModel, NoiseModelBuilder, PerturbedProblem, corrupt
from inexact_euler.randomization import StreamSpec, draw_uniforms, split_for_path
from inexact_euler.schemes import (
    ImplicitSolverConfig,
    deterministic_variants,
    explicit_rand_euler,
    implicit_rand_euler,
)

__version__ = "0.1.0"
__all__ = [
    "ClassConstants",
    "CommonErrorCodes",
    "ErrorCode",
    "ImplicitSolverConfig",
    "InexactEulerError",
    "NoiseClass",
    "NoiseKind",
    "NoiseModel",
    "NoiseModelBuilder",
    "PerturbedProblem",
    "ProblemSpec",
    "ProblemSpecBuilder",
    "ProblemValidator",
    "RandomMesh",
    "SchemeTag",
    "StabilityMode",
    "StreamSpec",
    "Trajectory",
    "Verdict",
    "compute_class_constants",
    "corrupt",
    "deterministic_variants",
    "draw_uniforms",
    "eval_dense",
    "explicit_rand_euler",
    "implicit_rand_euler",
    "make_mesh",
    "split_for_path",
]
