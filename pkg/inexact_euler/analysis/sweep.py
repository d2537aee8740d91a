"""Error against the noise precision at a fixed, fine mesh."""

import logging
import math
from dataclasses import dataclass
from typing import Any, Dict, List, Optional, Sequence

from inexact_euler.core import ProblemSpec
from inexact_euler.enums import SchemeTag
from inexact_euler.noise import NoiseModel
from inexact_euler.schemes import ImplicitSolverConfig
from inexact_euler.analysis.ensemble import ErrorEstimate, estimate_error
from inexact_euler.analysis.reference import ReferenceSolution

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class NoiseFloorRow:
    """
    One precision of a noise sweep.

    Attributes:
        delta: Precision
        estimate: Error estimate at this precision
        error_over_delta: estimate.value / delta (nan at delta = 0)
        lower_bound: (b - a) delta, the worst-case error no algorithm can beat
    """
    delta: float
    estimate: ErrorEstimate
    error_over_delta: float
    lower_bound: float

    def to_dict(self) -> Dict[str, Any]:
        """Convert to dictionary representation."""
        return {
            "delta": self.delta,
            "error": self.estimate.value,
            "stdError": self.estimate.std_error,
            "errorOverDelta": self.error_over_delta,
            "lowerBound": self.lower_bound,
        }


def noise_floor_sweep(
    p: ProblemSpec,
    noise: NoiseModel,
    scheme: SchemeTag,
    n_fixed: int,
    deltas: Sequence[float],
    M: int,
    seed: int,
    p_exponent: float = 2.0,
    sup_refinement: int = 8,
    cfg: Optional[ImplicitSolverConfig] = None,
    threads: int = 1,
) -> List[NoiseFloorRow]:
    """
    Estimate the error for each precision, the noise kind fixed by `noise`.

    The same seed is used for every precision, so rows differ only in delta.

    Args:
        p: Problem
        noise: Template noise model; its delta is replaced row by row
        scheme: Scheme to run
        n_fixed: Step count, fine enough that discretisation error is below the smallest delta
        deltas: Precisions to test
        M: Paths per row
        seed: Master seed
        p_exponent: L^p exponent
        sup_refinement: Interior points per step of the supremum grid
        cfg: Implicit solver settings
        threads: Worker threads

    Returns:
        One NoiseFloorRow per delta, in input order
    """
    reference = ReferenceSolution(p, finest_n=n_fixed)
    rows = []
    for delta in deltas:
        estimate = estimate_error(
            p, noise.with_delta(delta), scheme, n_fixed, M, p_exponent, seed,
            sup_refinement, cfg, threads, reference,
        )
        ratio = estimate.value / delta if delta > 0.0 else math.nan
        logger.info("noise sweep delta=%g: error %.6e, error/delta %.4g", delta, estimate.value, ratio)
        rows.append(NoiseFloorRow(delta=delta, estimate=estimate, error_over_delta=ratio, lower_bound=p.length * delta))
    return rows
