"""Sampled verification that a noise model belongs to its declared class."""

import logging
from dataclasses import dataclass
from typing import Any, Dict, Optional

import numpy as np

from inexact_euler.core import ProblemSpec, compute_class_constants, sample_in_ball, sample_pairs, sample_times
from inexact_euler.enums import NoiseClass
from inexact_euler.noise.models import NoiseModel, corrupt

logger = logging.getLogger(__name__)

RATIO_TOLERANCE = 1e-12


@dataclass(frozen=True)
class NoiseClassReport:
    """
    Worst observed class ratios over the sampled points.

    Attributes:
        class_tag: Class that was checked
        samples: Number of sampled points (and pairs)
        growth_ratio: max ||delta~(t,y)|| / (delta (1 + ||y||))
        lipschitz_ratio: max ||delta~(t,x) - delta~(t,y)|| / (delta ||x - y||), K2 only
        passed: True if every ratio is <= 1 + 1e-12
    """
    class_tag: NoiseClass
    samples: int
    growth_ratio: float
    lipschitz_ratio: Optional[float]
    passed: bool

    def to_dict(self) -> Dict[str, Any]:
        """Convert to dictionary representation."""
        return {
            "class": self.class_tag.value,
            "samples": self.samples,
            "growthRatio": self.growth_ratio,
            "lipschitzRatio": self.lipschitz_ratio,
            "passed": self.passed,
        }


def _ratio(numerator: float, denominator: float) -> float:
    if denominator > 0.0:
        return numerator / denominator
    return 0.0 if numerator == 0.0 else float("inf")


def verify_class_membership(m: NoiseModel, p: ProblemSpec, samples: int, seed: int) -> NoiseClassReport:
    """
    Check the class bounds of a noise model on random points of [a, b] x B(eta, R0).

    Args:
        m: Noise model
        p: Problem fixing the interval, eta and R0
        samples: Points (and, for K2, pairs) to sample
        seed: Sampling seed

    Returns:
        NoiseClassReport
    """
    rng = np.random.default_rng(seed)
    radius = compute_class_constants(p).R0
    ts = sample_times(rng, p.a, p.b, samples)
    ys = sample_in_ball(rng, p.eta, radius, samples)

    growth = 0.0
    for t, y in zip(ts, ys):
        value = corrupt(m, float(t), y, rng)
        bound = m.delta * (1.0 + float(np.sum(np.abs(y))))
        growth = max(growth, _ratio(float(np.sum(np.abs(value))), bound))

    lipschitz: Optional[float] = None
    if m.class_tag is NoiseClass.K2:
        lipschitz = 0.0
        pair_ts = sample_times(rng, p.a, p.b, samples)
        xs, zs = sample_pairs(rng, p.eta, radius, samples)
        for t, x, z in zip(pair_ts, xs, zs):
            gap = float(np.sum(np.abs(x - z)))
            if gap == 0.0:
                continue
            diff = corrupt(m, float(t), x, rng) - corrupt(m, float(t), z, rng)
            lipschitz = max(lipschitz, _ratio(float(np.sum(np.abs(diff))), m.delta * gap))

    limit = 1.0 + RATIO_TOLERANCE
    passed = growth <= limit and (lipschitz is None or lipschitz <= limit)
    logger.debug(
        "noise %s (%s, delta=%g): growth ratio %.6g, lipschitz ratio %s",
        m.kind.value, m.class_tag.value, m.delta, growth, lipschitz,
    )
    return NoiseClassReport(
        class_tag=m.class_tag,
        samples=samples,
        growth_ratio=growth,
        lipschitz_ratio=lipschitz,
        passed=passed,
    )
