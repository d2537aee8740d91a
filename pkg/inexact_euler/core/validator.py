"""Validation utilities for initial-value problem components."""

import math
from typing import Callable, Optional

import numpy as np

from inexact_euler.core.norms import one_norm

ANALYTIC_START_TOLERANCE = 1e-12


class ProblemValidator:
    """Validator for the data of an initial-value problem."""

    @staticmethod
    def validate_interval(a: float, b: float) -> bool:
        """
        Validate the time interval.

        Args:
            a: Start time
            b: End time

        Returns:
            bool: True if both ends are finite and a < b
        """
        return math.isfinite(a) and math.isfinite(b) and a < b

    @staticmethod
    def validate_dimension(d: int, eta: np.ndarray) -> bool:
        """
        Validate the state dimension against the initial value.

        Args:
            d: State dimension
            eta: Initial value

        Returns:
            bool: True if d >= 1 and eta is a finite vector of length d
        """
        return d >= 1 and eta.shape == (d,) and bool(np.all(np.isfinite(eta)))

    @staticmethod
    def validate_rho(rho: float) -> bool:
        """Hölder exponent must lie in (0, 1]."""
        return 0.0 < rho <= 1.0

    @staticmethod
    def validate_constants(K: float, L: float) -> bool:
        """Growth and Lipschitz constants must be positive and finite."""
        return 0.0 < K < math.inf and 0.0 < L < math.inf

    @staticmethod
    def validate_lipschitz_radius(radius: float) -> bool:
        """Radius of the Lipschitz ball lies in [0, inf]."""
        return radius >= 0.0

    @staticmethod
    def validate_initial_value(eta: np.ndarray, K: float) -> bool:
        """
        Validate the initial-value bound ||eta||_1 <= K.

        Args:
            eta: Initial value
            K: Growth constant

        Returns:
            bool: True if the bound holds
        """
        return one_norm(eta) <= K

    @staticmethod
    def validate_analytic_start(
        analytic_solution: Optional[Callable[[np.ndarray], np.ndarray]],
        a: float,
        eta: np.ndarray,
    ) -> bool:
        """
        Validate that a supplied analytic solution starts at eta.

        Args:
            analytic_solution: Vectorised solution t -> z(t), or None
            a: Start time
            eta: Initial value

        Returns:
            bool: True if absent, or if z(a) equals eta to 1e-12 in one-norm
        """
        if analytic_solution is None:
            return True
        try:
            start = np.asarray(analytic_solution(np.array([a])), dtype=float)[0]
        except (TypeError, ValueError, IndexError):
            return False
        if start.shape != eta.shape:
            return False
        return one_norm(start - eta) <= ANALYTIC_START_TOLERANCE
