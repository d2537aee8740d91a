"""Core domain types: problems, meshes, trajectories, norms and class constants."""

from inexact_euler.core.builder import ProblemSpecBuilder
from inexact_euler.core.mesh import RandomMesh, make_mesh
from inexact_euler.core.norms import one_norm, row_one_norms
from inexact_euler.core.sampling import sample_in_ball, sample_pairs, sample_times
from inexact_euler.core.problem import ClassConstants, ProblemSpec, compute_class_constants
from inexact_euler.core.trajectory import Trajectory, dense_grid, eval_dense
from inexact_euler.core.validator import ProblemValidator

__all__ = [
    "ClassConstants",
    "ProblemSpec",
    "ProblemSpecBuilder",
    "ProblemValidator",
    "RandomMesh",
    "Trajectory",
    "compute_class_constants",
    "dense_grid",
    "eval_dense",
    "make_mesh",
    "one_norm",
    "row_one_norms",
    "sample_in_ball",
    "sample_pairs",
    "sample_times",
]
