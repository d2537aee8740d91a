"""Implicit randomized Euler scheme, each step solved by fixed-point iteration."""

import logging
from typing import Optional, Tuple

import numpy as np

from inexact_euler.core import RandomMesh, Trajectory
from inexact_euler.enums import NoiseClass, Predictor, SchemeTag
from inexact_euler.exceptions import (
    ConfigurationError,
    DivergenceError,
    NonConvergenceError,
    PreconditionError,
)
from inexact_euler.noise import PerturbedProblem
from inexact_euler.schemes.config import ImplicitSolverConfig, StepReport

logger = logging.getLogger(__name__)


def check_implicit_preconditions(pp: PerturbedProblem, h: float, cfg: ImplicitSolverConfig) -> None:
    """
    Check the step-size conditions h(L+1) < 1, h(K+1) <= 1/2 and the noise class.

    Raises:
        ConfigurationError: If the noise is not declared K2
        PreconditionError: If a step-size condition fails and cfg.force is off
    """
    if pp.noise.class_tag is not NoiseClass.K2:
        raise ConfigurationError("the implicit scheme accepts K2 noise only")

    K, L = pp.base.K, pp.base.L
    failures = []
    if not h * (L + 1.0) < 1.0:
        failures.append(f"h(L+1) = {h * (L + 1.0):.6g} is not < 1")
    if not h * (K + 1.0) <= 0.5:
        failures.append(f"h(K+1) = {h * (K + 1.0):.6g} is not <= 1/2")
    if not failures:
        return
    reason = "; ".join(failures)
    if cfg.force:
        logger.warning("implicit scheme on '%s' without its step-size guarantees: %s", pp.base.name, reason)
        return
    raise PreconditionError(reason, data={"h": h, "K": K, "L": L})


def run_implicit(
    pp: PerturbedProblem,
    mesh: RandomMesh,
    cfg: ImplicitSolverConfig,
    tag: SchemeTag,
    noise_rng: Optional[np.random.Generator] = None,
) -> Tuple[Trajectory, StepReport]:
    """U^j = U^{j-1} + h f~(theta_j, U^j), solved by x_{k+1} = U^{j-1} + h f~(theta_j, x_k)."""
    h = mesh.h
    check_implicit_preconditions(pp, h, cfg)

    values = np.empty((mesh.n + 1, pp.base.d))
    iterations = np.zeros(mesh.n, dtype=int)
    previous = pp.eta_tilde
    values[0] = previous
    evaluations = 0

    for j in range(1, mesh.n + 1):
        theta = float(mesh.thetas[j - 1])
        if cfg.predictor is Predictor.EXPLICIT_EULER:
            x = previous + h * pp.rhs_tilde(theta, previous, noise_rng)
            evaluations += 1
        else:
            x = previous

        gap = np.inf
        for k in range(1, cfg.max_iterations + 1):
            x_next = previous + h * pp.rhs_tilde(theta, x, noise_rng)
            evaluations += 1
            if not np.all(np.isfinite(x_next)):
                raise DivergenceError(step=j)
            gap = float(np.sum(np.abs(x_next - x)))
            x = x_next
            if gap <= cfg.fp_tolerance * (1.0 + float(np.sum(np.abs(x)))):
                iterations[j - 1] = k
                break
        else:
            raise NonConvergenceError(step=j, max_iterations=cfg.max_iterations, residual=gap)

        values[j] = x
        previous = x

    report = StepReport(fixed_point_iterations=iterations, contraction_factor_bound=h * (pp.base.L + 1.0))
    logger.debug(
        "implicit run on '%s': n=%d, %d fixed-point iterations", pp.base.name, mesh.n, report.total_iterations
    )
    return Trajectory(mesh=mesh, values=values, scheme_tag=tag, evaluations=evaluations), report


def implicit_rand_euler(
    pp: PerturbedProblem,
    mesh: RandomMesh,
    cfg: Optional[ImplicitSolverConfig] = None,
    noise_rng: Optional[np.random.Generator] = None,
) -> Tuple[Trajectory, StepReport]:
    """
    Implicit randomized Euler scheme.

    Args:
        pp: Problem with K2 noise
        mesh: Random mesh on the problem's interval
        cfg: Fixed-point settings (defaults if None)
        noise_rng: NoiseDraws generator, needed by stream-driven noise only

    Raises:
        ConfigurationError: If the noise is not K2
        PreconditionError: If h(L+1) < 1 or h(K+1) <= 1/2 fails and cfg.force is off
        NonConvergenceError: If a step exhausts cfg.max_iterations
        DivergenceError: If a state becomes non-finite

    Returns:
        (Trajectory tagged IMPLICIT_RAND, StepReport)
    """
    return run_implicit(pp, mesh, cfg or ImplicitSolverConfig(), SchemeTag.IMPLICIT_RAND, noise_rng)
