"""Sampled spot check of the class assumptions a problem declares."""

import logging
from dataclasses import dataclass
from typing import Any, Dict

import numpy as np

from inexact_euler.core import (
    ProblemSpec,
    compute_class_constants,
    one_norm,
    sample_in_ball,
    sample_pairs,
    sample_times,
)
from inexact_euler.core.sampling import finite_radius

logger = logging.getLogger(__name__)

RATIO_TOLERANCE = 1e-12


@dataclass(frozen=True)
class AssumptionReport:
    """
    Worst sampled ratios of the declared class conditions; each passes at <= 1.

    Attributes:
        problem: Problem name
        samples: Points (and pairs) per condition
        initial_ratio: ||eta|| / K
        growth_ratio: max ||f(t,y)|| / (K (1 + ||y||))
        holder_ratio: max ||f(t,x) - f(s,x)|| / (L |t-s|^rho)
        lipschitz_ratio: max ||f(t,x) - f(t,y)|| / (L ||x-y||) inside the Lipschitz ball
    """
    problem: str
    samples: int
    initial_ratio: float
    growth_ratio: float
    holder_ratio: float
    lipschitz_ratio: float

    @property
    def passed(self) -> bool:
        limit = 1.0 + RATIO_TOLERANCE
        return bool(max(self.initial_ratio, self.growth_ratio, self.holder_ratio, self.lipschitz_ratio) <= limit)

    def to_dict(self) -> Dict[str, Any]:
        """Convert to dictionary representation."""
        return {
            "problem": self.problem,
            "samples": self.samples,
            "initialRatio": self.initial_ratio,
            "growthRatio": self.growth_ratio,
            "holderRatio": self.holder_ratio,
            "lipschitzRatio": self.lipschitz_ratio,
            "passed": self.passed,
        }


def check_assumptions(p: ProblemSpec, samples: int = 10_000, seed: int = 0) -> AssumptionReport:
    """
    Spot-check growth, time-Hölder and state-Lipschitz conditions on [a, b] x B(eta, R0).

    Args:
        p: Problem with declared K, L, rho
        samples: Points and pairs per condition
        seed: Sampling seed

    Returns:
        AssumptionReport
    """
    rng = np.random.default_rng(seed)
    radius = compute_class_constants(p).R0

    growth = 0.0
    for t, y in zip(sample_times(rng, p.a, p.b, samples), sample_in_ball(rng, p.eta, radius, samples)):
        growth = max(growth, one_norm(p.f(float(t), y)) / (p.K * (1.0 + one_norm(y))))

    holder = 0.0
    ts = sample_times(rng, p.a, p.b, samples)
    ss = sample_times(rng, p.a, p.b, samples)
    for t, s, x in zip(ts, ss, sample_in_ball(rng, p.eta, radius, samples)):
        if t == s:
            continue
        change = one_norm(p.f(float(t), x) - p.f(float(s), x))
        holder = max(holder, change / (p.L * abs(t - s) ** p.rho))

    lipschitz = 0.0
    lipschitz_ball = min(finite_radius(p.lipschitz_radius, radius), radius)
    xs, ys = sample_pairs(rng, p.eta, lipschitz_ball, samples)
    for t, x, y in zip(sample_times(rng, p.a, p.b, samples), xs, ys):
        gap = one_norm(x - y)
        if gap == 0.0:
            continue
        lipschitz = max(lipschitz, one_norm(p.f(float(t), x) - p.f(float(t), y)) / (p.L * gap))

    report = AssumptionReport(
        problem=p.name,
        samples=samples,
        initial_ratio=one_norm(p.eta) / p.K,
        growth_ratio=growth,
        holder_ratio=holder,
        lipschitz_ratio=lipschitz,
    )
    logger.debug("assumption check on '%s': %s", p.name, report.to_dict())
    return report
