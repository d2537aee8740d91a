"""
Finite-horizon stability classification for z' = 2 lambda t z, z(0) = eta.

Paths are simulated in log space: log|W^K / eta| is the sum of the log moduli
of the step factors, so the blow-up of the explicit scheme never overflows.
"""

import logging
import math
from dataclasses import dataclass, field
from typing import Any, Dict, Optional, Tuple

import numpy as np

from inexact_euler.enums import StabilityMode, Verdict
from inexact_euler.exceptions import ContractError, DomainError, SingularityError
from inexact_euler.randomization import draw_uniforms, split_for_path
from inexact_euler.stability.factors import (
    deterministic_log_moment,
    ms_moment_explicit,
    ms_moment_implicit,
)

logger = logging.getLogger(__name__)

DEFAULT_BLOWUP = 1e6
DEFAULT_DECAY = 1e-6
DEFAULT_STEPS = 5000
DEFAULT_PATHS = 1000
# SP thresholds on the fraction of decayed paths
SP_STABLE_FRACTION = 0.99
SP_UNSTABLE_FRACTION = 0.01

_ROW_CHUNK = 128
_TINY = np.finfo(float).tiny


@dataclass(frozen=True)
class StabilityQuery:
    """
    One stability question: does W^k decay for this (lambda, h, mode)?

    Attributes:
        lam: lambda of the test problem
        h: Step size
        steps: Horizon K
        paths: Number of simulated paths M
        blowup: Modulus ratio above which a path counts as blown up
        decay: Modulus ratio below which a path counts as decayed
        mode: Recurrence to simulate
    """
    lam: complex
    h: float
    steps: int = DEFAULT_STEPS
    paths: int = DEFAULT_PATHS
    blowup: float = DEFAULT_BLOWUP
    decay: float = DEFAULT_DECAY
    mode: StabilityMode = StabilityMode.EXPLICIT

    def __post_init__(self):
        if not self.h > 0.0:
            raise DomainError(f"step size must be positive, got {self.h}")
        if self.steps < 1:
            raise DomainError(f"horizon must be at least 1, got {self.steps}")
        if self.paths < 1:
            raise DomainError(f"path count must be at least 1, got {self.paths}")
        if not self.blowup > 1.0 > self.decay > 0.0:
            raise DomainError(f"thresholds need blowup > 1 > decay > 0, got blowup={self.blowup}, decay={self.decay}")

    @property
    def out_of_region(self) -> bool:
        """lambda on the nonnegative real axis with an implicit recurrence."""
        lam = complex(self.lam)
        return self.mode.is_implicit and lam.imag == 0.0 and lam.real >= 0.0

    def with_mode(self, mode: StabilityMode, paths: Optional[int] = None) -> "StabilityQuery":
        return StabilityQuery(
            lam=self.lam,
            h=self.h,
            steps=self.steps,
            paths=self.paths if paths is None else paths,
            blowup=self.blowup,
            decay=self.decay,
            mode=mode,
        )


@dataclass(frozen=True)
class StabilityEvidence:
    """Summary of the simulated log moduli log|W^K / eta|."""
    stable_fraction: float
    blowup_fraction: float
    mean_log_modulus: float
    min_log_modulus: float
    max_log_modulus: float
    singular_events: int = 0
    out_of_region: bool = False

    def to_dict(self) -> Dict[str, Any]:
        """Convert to dictionary representation."""
        return {
            "stableFraction": self.stable_fraction,
            "blowupFraction": self.blowup_fraction,
            "meanLogModulus": self.mean_log_modulus,
            "minLogModulus": self.min_log_modulus,
            "maxLogModulus": self.max_log_modulus,
            "singularEvents": self.singular_events,
            "outOfRegion": self.out_of_region,
        }


@dataclass(frozen=True)
class StabilityVerdict:
    """
    MS, AS and SP verdicts of one query.

    Attributes:
        ms_stable: From the analytic second moment at the horizon
        as_stable: From the fraction of decayed paths (all / none)
        sp_stable: From the fraction of decayed paths (0.99 / 0.01 cut-offs)
        ms_analytic_log_moment: log E|W^K / eta|^2; inf if a step factor is singular
        evidence: Path statistics
    """
    ms_stable: Verdict
    as_stable: Verdict
    sp_stable: Verdict
    ms_analytic_log_moment: float
    evidence: StabilityEvidence = field(compare=False)

    @property
    def triple(self) -> Tuple[Verdict, Verdict, Verdict]:
        return self.ms_stable, self.as_stable, self.sp_stable

    def to_dict(self) -> Dict[str, Any]:
        """Convert to dictionary representation."""
        return {
            "ms": self.ms_stable.value,
            "as": self.as_stable.value,
            "sp": self.sp_stable.value,
            "msAnalyticLogMoment": self.ms_analytic_log_moment,
            "evidence": self.evidence.to_dict(),
        }


def draw_stability_taus(seed: int, paths: int, steps: int) -> np.ndarray:
    """(paths, steps) matrix of tau draws; row m is the tau stream of path m."""
    return np.stack([draw_uniforms(split_for_path(seed, m)[0], steps) for m in range(paths)])


def _log_moduli(q: StabilityQuery, thetas: np.ndarray) -> Tuple[np.ndarray, int]:
    """log|W^K / eta| per row of thetas, plus the number of vanishing factors."""
    lam = complex(q.lam)
    out = np.empty(thetas.shape[0])
    singular = 0
    for start in range(0, thetas.shape[0], _ROW_CHUNK):
        block = thetas[start:start + _ROW_CHUNK]
        if q.mode.is_implicit:
            moduli = np.abs(1.0 - 2.0 * lam * q.h * block)
            sign = -1.0
        else:
            moduli = np.abs(1.0 + 2.0 * lam * q.h * block)
            sign = 1.0
        singular += int(np.count_nonzero(moduli == 0.0))
        # floored so the log-sum stays finite
        out[start:start + _ROW_CHUNK] = sign * np.sum(np.log(np.maximum(moduli, _TINY)), axis=1)
    if not np.all(np.isfinite(out)):
        raise ContractError(f"non-finite log modulus for lambda={lam}, h={q.h}, K={q.steps}", include_trace=False)
    return out, singular


def _thetas(q: StabilityQuery, seed: int, taus: Optional[np.ndarray]) -> np.ndarray:
    j = np.arange(q.steps, dtype=float)
    if q.mode is StabilityMode.EXPLICIT_DET:
        return (q.h * j)[np.newaxis, :]
    if q.mode is StabilityMode.IMPLICIT_DET:
        return (q.h * (j + 1.0))[np.newaxis, :]
    if taus is None:
        taus = draw_stability_taus(seed, q.paths, q.steps)
    elif taus.shape != (q.paths, q.steps):
        raise DomainError(f"tau matrix must have shape {(q.paths, q.steps)}, got {taus.shape}")
    return q.h * (j[np.newaxis, :] + taus)


def analytic_log_moment(q: StabilityQuery) -> float:
    """log E|W^K / eta|^2 for the query's mode; inf when a step factor is singular."""
    try:
        if q.mode is StabilityMode.EXPLICIT:
            return ms_moment_explicit(q.lam, q.h, q.steps)
        if q.mode is StabilityMode.IMPLICIT:
            return ms_moment_implicit(q.lam, q.h, q.steps)
        return deterministic_log_moment(q.lam, q.h, q.steps, implicit=q.mode.is_implicit)
    except SingularityError as exc:
        logger.warning("singular step factor, second moment taken as inf: %s", exc.message)
        return math.inf


def _threshold_verdict(value: float, decay: float, blowup: float) -> Verdict:
    if value < decay:
        return Verdict.STABLE
    if value > blowup:
        return Verdict.UNSTABLE
    return Verdict.INCONCLUSIVE


def classify(q: StabilityQuery, seed: int = 0, taus: Optional[np.ndarray] = None) -> StabilityVerdict:
    """
    Classify mean-square, almost-sure and in-probability stability at horizon K.

    Deterministic modes simulate a single path and replicate it M times.

    Args:
        q: Query
        seed: Master seed of the tau streams
        taus: Precomputed (M, K) tau matrix shared between queries (randomized modes)

    Returns:
        StabilityVerdict
    """
    log_decay, log_blowup = math.log(q.decay), math.log(q.blowup)
    ms_log = analytic_log_moment(q)

    if complex(q.lam) == 0:
        evidence = StabilityEvidence(0.0, 0.0, 0.0, 0.0, 0.0)
        return StabilityVerdict(Verdict.UNSTABLE, Verdict.UNSTABLE, Verdict.UNSTABLE, ms_log, evidence)

    finals, singular = _log_moduli(q, _thetas(q, seed, taus))
    if finals.size != q.paths:
        finals = np.repeat(finals, q.paths)
        singular *= q.paths

    decayed = float(np.count_nonzero(finals < log_decay)) / q.paths
    blown = float(np.count_nonzero(finals > log_blowup)) / q.paths
    evidence = StabilityEvidence(
        stable_fraction=decayed,
        blowup_fraction=blown,
        mean_log_modulus=float(np.mean(finals)),
        min_log_modulus=float(np.min(finals)),
        max_log_modulus=float(np.max(finals)),
        singular_events=singular,
        out_of_region=q.out_of_region,
    )
    if q.out_of_region:
        logger.debug("lambda=%s on the nonnegative real axis; reported unstable for %s", q.lam, q.mode.value)
        return StabilityVerdict(Verdict.UNSTABLE, Verdict.UNSTABLE, Verdict.UNSTABLE, ms_log, evidence)

    ms = _threshold_verdict(ms_log, log_decay, log_blowup)
    if decayed == 1.0:
        as_ = Verdict.STABLE
    elif decayed == 0.0 and blown == 1.0:
        as_ = Verdict.UNSTABLE
    else:
        as_ = Verdict.INCONCLUSIVE
    if decayed >= SP_STABLE_FRACTION:
        sp = Verdict.STABLE
    elif decayed <= SP_UNSTABLE_FRACTION:
        sp = Verdict.UNSTABLE
    else:
        sp = Verdict.INCONCLUSIVE
    return StabilityVerdict(ms, as_, sp, ms_log, evidence)
