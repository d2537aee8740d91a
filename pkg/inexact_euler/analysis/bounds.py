"""Pathwise checks of the a priori bounds of both schemes."""

import logging
from dataclasses import dataclass
from typing import Any, Dict, List, Optional, Tuple

import numpy as np

from inexact_euler.core import ProblemSpec, compute_class_constants, row_one_norms
from inexact_euler.enums import SchemeTag
from inexact_euler.noise import NoiseModel, PerturbedProblem
from inexact_euler.schemes import ImplicitSolverConfig
from inexact_euler.analysis.ensemble import check_scheme_noise, map_paths, simulate_path

logger = logging.getLogger(__name__)

IMPLICIT_SLACK = 1e-9


@dataclass(frozen=True)
class BoundCheck:
    """
    Worst observation of one bound over the ensemble.

    Attributes:
        name: Bound identifier
        observed: Worst observed quantity
        bound: Theoretical bound
        ratio: observed / bound
        slack: Absolute slack allowed on top of the bound
        passed: observed <= bound + slack
    """
    name: str
    observed: float
    bound: float
    ratio: float
    slack: float
    passed: bool

    def to_dict(self) -> Dict[str, Any]:
        """Convert to dictionary representation."""
        return {
            "name": self.name,
            "observed": self.observed,
            "bound": self.bound,
            "ratio": self.ratio,
            "slack": self.slack,
            "passed": self.passed,
        }


@dataclass(frozen=True)
class BoundsReport:
    """All bound checks of one (problem, noise, scheme) combination."""
    problem: str
    scheme: SchemeTag
    delta: float
    checks: Tuple[BoundCheck, ...]
    max_node_norm: float

    @property
    def passed(self) -> bool:
        return all(check.passed for check in self.checks)

    def to_dict(self) -> Dict[str, Any]:
        """Convert to dictionary representation."""
        return {
            "problem": self.problem,
            "scheme": self.scheme.value,
            "delta": self.delta,
            "maxNodeNorm": self.max_node_norm,
            "passed": self.passed,
            "checks": [check.to_dict() for check in self.checks],
        }


def _check(name: str, observed: float, bound: float, slack: float = 0.0) -> BoundCheck:
    if bound > 0.0:
        ratio = observed / bound
    else:
        ratio = 0.0 if observed == 0.0 else float("inf")
    return BoundCheck(
        name=name, observed=observed, bound=bound, ratio=ratio, slack=slack, passed=bool(observed <= bound + slack)
    )


def validate_bounds(
    p: ProblemSpec,
    noise: NoiseModel,
    scheme: SchemeTag,
    n: int,
    M: int,
    seed: int,
    cfg: Optional[ImplicitSolverConfig] = None,
    threads: int = 1,
) -> BoundsReport:
    """
    Run each path twice on the same draws, with exact and with noisy information.

    Checked over all paths: explicit iterates stay in B(eta, R1); implicit
    iterates stay below (K+2) e^{2(K+1)(b-a)} - 1; the two runs of a path
    stay within C delta of each other, C the explicit or implicit noise
    constant. Implicit checks allow 1e-9 absolute slack for the inexact
    fixed-point solves.

    Args:
        p: Problem
        noise: Noise of the perturbed runs
        scheme: Scheme to check
        n: Step count
        M: Number of paths
        seed: Master seed
        cfg: Implicit solver settings
        threads: Worker threads

    Returns:
        BoundsReport (report only; nothing is raised on violation)
    """
    check_scheme_noise(scheme, noise)
    constants = compute_class_constants(p)
    noisy = PerturbedProblem(p, noise)
    clean = noisy.clean()

    def one_path(m: int) -> Tuple[float, float, float, float]:
        exact = simulate_path(clean, n, scheme, seed, m, cfg).values
        perturbed = simulate_path(noisy, n, scheme, seed, m, cfg).values
        drift = max(
            float(np.max(row_one_norms(exact - p.eta))),
            float(np.max(row_one_norms(perturbed - p.eta))),
        )
        norm = max(float(np.max(row_one_norms(exact))), float(np.max(row_one_norms(perturbed))))
        exact_norm = float(np.max(row_one_norms(exact)))
        gap = float(np.max(row_one_norms(exact - perturbed)))
        return drift, norm, exact_norm, gap

    results = np.array(map_paths(one_path, M, threads))
    worst_drift, worst_norm, worst_exact_norm, worst_gap = (float(x) for x in results.max(axis=0))

    checks: List[BoundCheck] = []
    if scheme.is_implicit:
        checks.append(_check("implicit_iterate_bound", worst_norm, constants.implicit_iterate_bound, IMPLICIT_SLACK))
        checks.append(_check("implicit_perturbation", worst_gap, constants.implicit_noise_C * noise.delta, IMPLICIT_SLACK))
    else:
        checks.append(_check("explicit_ball_containment", worst_drift, constants.R1))
        checks.append(_check("explicit_perturbation", worst_gap, constants.explicit_noise_C * noise.delta))

    report = BoundsReport(
        problem=p.name,
        scheme=scheme,
        delta=noise.delta,
        checks=tuple(checks),
        max_node_norm=worst_exact_norm,
    )
    for check in checks:
        logger.debug("%s on '%s' (delta=%g): %s ratio %.4g", scheme.value, p.name, noise.delta, check.name, check.ratio)
    return report
