"""Error estimation, order fitting, bound validation and assumption checks."""

from inexact_euler.analysis.assumptions import AssumptionReport, check_assumptions
from inexact_euler.analysis.bounds import BoundCheck, BoundsReport, validate_bounds
from inexact_euler.analysis.ensemble import (
    ErrorEstimate,
    check_scheme_noise,
    estimate_error,
    lp_statistics,
    map_paths,
    path_suprema,
    simulate_path,
)
from inexact_euler.analysis.order import OrderFit, fit_order, theoretical_order
from inexact_euler.analysis.reference import ReferenceSolution, reference_solution
from inexact_euler.analysis.sweep import NoiseFloorRow, noise_floor_sweep

__all__ = [
    "AssumptionReport",
    "BoundCheck",
    "BoundsReport",
    "ErrorEstimate",
    "NoiseFloorRow",
    "OrderFit",
    "ReferenceSolution",
    "check_assumptions",
    "check_scheme_noise",
    "estimate_error",
    "fit_order",
    "lp_statistics",
    "map_paths",
    "noise_floor_sweep",
    "path_suprema",
    "reference_solution",
    "simulate_path",
    "theoretical_order",
    "validate_bounds",
]
