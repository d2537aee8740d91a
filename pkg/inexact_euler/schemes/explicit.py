"""Explicit randomized Euler scheme."""

from typing import Optional

import numpy as np

from inexact_euler.core import RandomMesh, Trajectory
from inexact_euler.enums import SchemeTag
from inexact_euler.exceptions import DivergenceError
from inexact_euler.noise import PerturbedProblem


def run_explicit(
    pp: PerturbedProblem,
    mesh: RandomMesh,
    tag: SchemeTag,
    noise_rng: Optional[np.random.Generator] = None,
) -> Trajectory:
    """V^j = V^{j-1} + h f~(theta_j, V^{j-1}) on the mesh's evaluation points."""
    h = mesh.h
    values = np.empty((mesh.n + 1, pp.base.d))
    v = pp.eta_tilde
    values[0] = v
    for j in range(1, mesh.n + 1):
        v = v + h * pp.rhs_tilde(float(mesh.thetas[j - 1]), v, noise_rng)
        if not np.all(np.isfinite(v)):
            raise DivergenceError(step=j)
        values[j] = v
    return Trajectory(mesh=mesh, values=values, scheme_tag=tag, evaluations=mesh.n)


def explicit_rand_euler(
    pp: PerturbedProblem,
    mesh: RandomMesh,
    noise_rng: Optional[np.random.Generator] = None,
) -> Trajectory:
    """
    Explicit randomized Euler scheme.

    One perturbed right-hand-side evaluation per step, at (theta_j, V^{j-1}).

    Args:
        pp: Problem with its noise
        mesh: Random mesh on the problem's interval
        noise_rng: NoiseDraws generator, needed by stream-driven noise only

    Raises:
        DivergenceError: If a state becomes non-finite

    Returns:
        Trajectory tagged EXPLICIT_RAND
    """
    return run_explicit(pp, mesh, SchemeTag.EXPLICIT_RAND, noise_rng)
