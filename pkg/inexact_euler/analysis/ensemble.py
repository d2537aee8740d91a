"""Monte-Carlo estimation of the L^p(Omega) sup-norm error."""

import logging
import math
from dataclasses import dataclass
from multiprocessing.pool import ThreadPool
from typing import Any, Callable, Dict, List, Optional, Tuple, TypeVar

import numpy as np

from inexact_euler.core import ProblemSpec, Trajectory, dense_grid, make_mesh, row_one_norms
from inexact_euler.enums import NoiseClass, SchemeTag
from inexact_euler.exceptions import ConfigurationError, DivergenceError, DomainError
from inexact_euler.noise import NoiseModel, PerturbedProblem
from inexact_euler.randomization import draw_uniforms, split_for_path
from inexact_euler.schemes import ImplicitSolverConfig, integrate
from inexact_euler.analysis.reference import ReferenceSolution

logger = logging.getLogger(__name__)

T = TypeVar("T")


def map_paths(fn: Callable[[int], T], paths: int, threads: int = 1) -> List[T]:
    """
    Apply fn to path indices 0 .. paths-1, results in path order.

    Every path derives its randomness from its own index, so the result does
    not depend on `threads`.
    """
    if threads <= 1 or paths <= 1:
        return [fn(m) for m in range(paths)]
    with ThreadPool(processes=threads) as pool:
        return pool.map(fn, range(paths))


def simulate_path(
    pp: PerturbedProblem,
    n: int,
    scheme: SchemeTag,
    seed: int,
    path_index: int,
    cfg: Optional[ImplicitSolverConfig] = None,
) -> Trajectory:
    """
    One path of a scheme: mesh from the path's tau stream, noise from its noise stream.

    Raises:
        DivergenceError: Tagged with the path index
    """
    tau_stream, noise_stream = split_for_path(seed, path_index)
    mesh = make_mesh(pp.base, n, draw_uniforms(tau_stream, n))
    noise_rng = noise_stream.generator() if pp.noise.needs_stream else None
    try:
        return integrate(pp, mesh, scheme, cfg, noise_rng)
    except DivergenceError as exc:
        raise exc.on_path(path_index) from exc


def check_scheme_noise(scheme: SchemeTag, noise: NoiseModel) -> None:
    """
    Implicit schemes need K2 noise.

    Raises:
        ConfigurationError: If an implicit scheme is paired with K1 noise
    """
    if scheme.is_implicit and noise.class_tag is not NoiseClass.K2:
        raise ConfigurationError(
            f"scheme '{scheme.value}' needs K2 noise, got {noise.kind.value} declared {noise.class_tag.value}"
        )


@dataclass(frozen=True)
class ErrorEstimate:
    """
    Monte-Carlo estimate of || sup_t ||z(t) - l(t)||_1 ||_{L^p(Omega)}.

    Attributes:
        p: L^p exponent, >= 2
        paths: Ensemble size M
        n: Step count
        delta: Noise precision
        value: Plug-in estimate ((1/M) sum sup^p)^(1/p)
        std_error: Delta-method standard error of value
        sup_refinement: Interior points per step of the supremum grid
    """
    p: float
    paths: int
    n: int
    delta: float
    value: float
    std_error: float
    sup_refinement: int

    def to_dict(self) -> Dict[str, Any]:
        """Convert to dictionary representation."""
        return {
            "p": self.p,
            "paths": self.paths,
            "n": self.n,
            "delta": self.delta,
            "value": self.value,
            "stdError": self.std_error,
            "supRefinement": self.sup_refinement,
        }


def lp_statistics(sups: np.ndarray, p_exponent: float) -> Tuple[float, float]:
    """Plug-in L^p norm of the path suprema and its delta-method standard error."""
    powers = sups**p_exponent
    moment = float(np.sum(powers) / powers.size)
    value = moment ** (1.0 / p_exponent)
    if moment == 0.0:
        return value, 0.0
    moment_se = math.sqrt(float(np.var(powers, ddof=1)) / powers.size)
    return value, (1.0 / p_exponent) * moment ** (1.0 / p_exponent - 1.0) * moment_se


def path_suprema(
    problem: ProblemSpec,
    noise: NoiseModel,
    scheme: SchemeTag,
    n: int,
    paths: int,
    seed: int,
    sup_refinement: int,
    reference: ReferenceSolution,
    cfg: Optional[ImplicitSolverConfig] = None,
    threads: int = 1,
) -> np.ndarray:
    """sup over the refined grid of ||z(t) - l(t)||_1, one entry per path."""
    pp = PerturbedProblem(problem, noise)

    def one_path(m: int) -> float:
        traj = simulate_path(pp, n, scheme, seed, m, cfg)
        ts, values = dense_grid(traj, sup_refinement)
        return float(np.max(row_one_norms(reference(ts) - values)))

    return np.array(map_paths(one_path, paths, threads))


def estimate_error(
    p: ProblemSpec,
    noise: NoiseModel,
    scheme: SchemeTag,
    n: int,
    M: int,
    p_exponent: float = 2.0,
    seed: int = 0,
    sup_refinement: int = 8,
    cfg: Optional[ImplicitSolverConfig] = None,
    threads: int = 1,
    reference: Optional[ReferenceSolution] = None,
) -> ErrorEstimate:
    """
    Estimate the L^p(Omega) sup-norm error of a scheme with M independent paths.

    Args:
        p: Problem
        noise: Noise corrupting the information
        scheme: Scheme to run
        n: Step count
        M: Number of paths, >= 2
        p_exponent: L^p exponent, >= 2
        seed: Master seed of the path streams
        sup_refinement: Interior points per step of the supremum grid, >= 1
        cfg: Implicit solver settings
        threads: Worker threads
        reference: Precomputed reference (built from p if None)

    Raises:
        DomainError: On out-of-range M, p_exponent or sup_refinement
        ConfigurationError: If an implicit scheme gets K1 noise
        DivergenceError: If a path blows up (carries the path index)

    Returns:
        ErrorEstimate
    """
    if M < 2:
        raise DomainError(f"need at least 2 paths, got {M}")
    if sup_refinement < 1:
        raise DomainError(f"sup_refinement must be at least 1, got {sup_refinement}")
    if p_exponent < 2.0:
        raise DomainError(f"L^p exponent must be >= 2, got {p_exponent}")
    check_scheme_noise(scheme, noise)

    reference = reference or ReferenceSolution(p, finest_n=n)
    sups = path_suprema(p, noise, scheme, n, M, seed, sup_refinement, reference, cfg, threads)
    value, std_error = lp_statistics(sups, p_exponent)
    logger.debug("%s on '%s', n=%d, delta=%g: error %.6e (se %.2e)", scheme.value, p.name, n, noise.delta, value, std_error)
    return ErrorEstimate(
        p=p_exponent,
        paths=M,
        n=n,
        delta=noise.delta,
        value=value,
        std_error=std_error,
        sup_refinement=sup_refinement,
    )
