"""Classical Euler schemes: the randomized recurrences with pinned evaluation points."""

from typing import Optional

import numpy as np

from inexact_euler.core import RandomMesh, Trajectory
from inexact_euler.enums import DeterministicVariant, SchemeTag
from inexact_euler.noise import PerturbedProblem
from inexact_euler.schemes.config import ImplicitSolverConfig
from inexact_euler.schemes.explicit import run_explicit
from inexact_euler.schemes.implicit import run_implicit


def deterministic_variants(
    pp: PerturbedProblem,
    mesh: RandomMesh,
    which: DeterministicVariant,
    cfg: Optional[ImplicitSolverConfig] = None,
    noise_rng: Optional[np.random.Generator] = None,
) -> Trajectory:
    """
    Explicit Euler with theta_j = t_{j-1}, or implicit Euler with theta_j = t_j.

    Args:
        pp: Problem with its noise
        mesh: Mesh whose nodes are used; its draws are ignored
        which: Variant to run
        cfg: Fixed-point settings for the implicit variant
        noise_rng: NoiseDraws generator, needed by stream-driven noise only

    Returns:
        Trajectory tagged EXPLICIT_DET or IMPLICIT_DET
    """
    if which is DeterministicVariant.EXPLICIT_LEFT_NODE:
        return run_explicit(pp, mesh.pinned(at_right_node=False), SchemeTag.EXPLICIT_DET, noise_rng)
    traj, _ = run_implicit(
        pp, mesh.pinned(at_right_node=True), cfg or ImplicitSolverConfig(), SchemeTag.IMPLICIT_DET, noise_rng
    )
    return traj
