"""Stability laboratory for the test problem z' = 2 lambda t z."""

from inexact_euler.stability.classify import (
    DEFAULT_BLOWUP,
    DEFAULT_DECAY,
    DEFAULT_PATHS,
    DEFAULT_STEPS,
    StabilityEvidence,
    StabilityQuery,
    StabilityVerdict,
    analytic_log_moment,
    classify,
    draw_stability_taus,
)
from inexact_euler.stability.factors import (
    deterministic_log_moment,
    explicit_crossover_index,
    explicit_step_factor,
    implicit_crossover_index,
    implicit_moment_factors,
    implicit_step_factor,
    ms_moment_explicit,
    ms_moment_implicit,
)
from inexact_euler.stability.raster import GridSpec, Raster, RasterCell, raster_region

__all__ = [
    "DEFAULT_BLOWUP",
    "DEFAULT_DECAY",
    "DEFAULT_PATHS",
    "DEFAULT_STEPS",
    "GridSpec",
    "Raster",
    "RasterCell",
    "StabilityEvidence",
    "StabilityQuery",
    "StabilityVerdict",
    "analytic_log_moment",
    "classify",
    "deterministic_log_moment",
    "draw_stability_taus",
    "explicit_crossover_index",
    "explicit_step_factor",
    "implicit_crossover_index",
    "implicit_moment_factors",
    "implicit_step_factor",
    "ms_moment_explicit",
    "ms_moment_implicit",
    "raster_region",
]
