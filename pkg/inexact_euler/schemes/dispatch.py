"""Run any of the four Euler schemes by tag."""

from typing import Optional

import numpy as np

from inexact_euler.core import RandomMesh, Trajectory
from inexact_euler.enums import DeterministicVariant, SchemeTag
from inexact_euler.noise import PerturbedProblem
from inexact_euler.schemes.config import ImplicitSolverConfig
from inexact_euler.schemes.deterministic import deterministic_variants
from inexact_euler.schemes.explicit import explicit_rand_euler
from inexact_euler.schemes.implicit import implicit_rand_euler


def integrate(
    pp: PerturbedProblem,
    mesh: RandomMesh,
    scheme: SchemeTag,
    cfg: Optional[ImplicitSolverConfig] = None,
    noise_rng: Optional[np.random.Generator] = None,
) -> Trajectory:
    """Trajectory of `scheme` on `mesh`; implicit schemes use `cfg`."""
    if scheme is SchemeTag.EXPLICIT_RAND:
        return explicit_rand_euler(pp, mesh, noise_rng)
    if scheme is SchemeTag.IMPLICIT_RAND:
        traj, _ = implicit_rand_euler(pp, mesh, cfg, noise_rng)
        return traj
    if scheme is SchemeTag.EXPLICIT_DET:
        return deterministic_variants(pp, mesh, DeterministicVariant.EXPLICIT_LEFT_NODE, cfg, noise_rng)
    return deterministic_variants(pp, mesh, DeterministicVariant.IMPLICIT_RIGHT_NODE, cfg, noise_rng)
