"""Settings and per-run statistics of the implicit solver."""

from dataclasses import dataclass
from typing import Any, Dict

import numpy as np

from inexact_euler.enums import Predictor
from inexact_euler.exceptions import DomainError


@dataclass(frozen=True)
class ImplicitSolverConfig:
    """
    Settings of the fixed-point iteration solving each implicit step.

    Attributes:
        fp_tolerance: Stop when ||x_{k+1} - x_k||_1 <= fp_tolerance * (1 + ||x_{k+1}||_1)
        max_iterations: Iteration budget per step
        predictor: Starting guess of the iteration
        force: Downgrade step-size precondition failures to warnings
    """
    fp_tolerance: float = 1e-12
    max_iterations: int = 200
    predictor: Predictor = Predictor.EXPLICIT_EULER
    force: bool = False

    def __post_init__(self):
        if not self.fp_tolerance > 0.0:
            raise DomainError(f"fp_tolerance must be positive, got {self.fp_tolerance}")
        if self.max_iterations < 1:
            raise DomainError(f"max_iterations must be at least 1, got {self.max_iterations}")


@dataclass(frozen=True, eq=False)
class StepReport:
    """
    Fixed-point statistics of one implicit run.

    Attributes:
        fixed_point_iterations: Iterations spent on each step, length n
        contraction_factor_bound: h (L + 1), the contraction constant of the step map
    """
    fixed_point_iterations: np.ndarray
    contraction_factor_bound: float

    @property
    def total_iterations(self) -> int:
        return int(np.sum(self.fixed_point_iterations))

    def to_dict(self) -> Dict[str, Any]:
        """Convert to dictionary representation."""
        return {
            "totalIterations": self.total_iterations,
            "maxIterations": int(np.max(self.fixed_point_iterations)) if self.fixed_point_iterations.size else 0,
            "contractionFactorBound": self.contraction_factor_bound,
        }
