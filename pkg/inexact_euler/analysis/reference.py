"""Reference solutions: analytic when available, otherwise fine-mesh classical RK4."""

import logging
from typing import Optional, Tuple

import numpy as np
from numpy.typing import ArrayLike
from scipy.interpolate import CubicHermiteSpline

from inexact_euler.core import ProblemSpec, row_one_norms
from inexact_euler.exceptions import DomainError, ReferenceAccuracyError

logger = logging.getLogger(__name__)

REFINEMENT_FACTOR = 64
RICHARDSON_TOLERANCE = 1e-10


def _rk4(p: ProblemSpec, steps: int) -> Tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Classical RK4 with `steps` uniform steps; returns nodes, values and f at the nodes."""
    nodes = np.linspace(p.a, p.b, steps + 1)
    h = (p.b - p.a) / steps
    values = np.empty((steps + 1, p.d))
    slopes = np.empty((steps + 1, p.d))
    y = np.array(p.eta)
    values[0] = y
    for i in range(steps):
        t = nodes[i]
        k1 = p.f(t, y)
        k2 = p.f(t + 0.5 * h, y + 0.5 * h * k1)
        k3 = p.f(t + 0.5 * h, y + 0.5 * h * k2)
        k4 = p.f(t + h, y + h * k3)
        slopes[i] = k1
        y = y + (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4)
        values[i + 1] = y
    slopes[-1] = p.f(nodes[-1], y)
    return nodes, values, slopes


class ReferenceSolution:
    """
    Reusable stand-in for the exact solution of a problem.

    Problems without an analytic solution are integrated once with RK4 on a
    mesh `factor` times finer than `finest_n` steps and evaluated through a
    cubic Hermite interpolant of the RK4 nodes. The run is repeated with twice
    as many steps; the two must agree to `tolerance` in one-norm.
    """

    def __init__(
        self,
        p: ProblemSpec,
        finest_n: int = 2**13,
        factor: int = REFINEMENT_FACTOR,
        tolerance: float = RICHARDSON_TOLERANCE,
    ) -> None:
        if finest_n < 1 or factor < 1:
            raise DomainError(f"finest_n and factor must be positive, got {finest_n}, {factor}")
        self.problem = p
        self.steps: Optional[int] = None
        self.self_check_difference: float = 0.0
        self._interpolant: Optional[CubicHermiteSpline] = None
        if p.has_analytic:
            return

        steps = factor * finest_n
        nodes, values, slopes = _rk4(p, steps)
        _, doubled, _ = _rk4(p, 2 * steps)
        difference = float(np.max(row_one_norms(doubled[::2] - values)))
        logger.debug("reference for '%s': %d RK4 steps, doubling changes it by %.3e", p.name, steps, difference)
        if difference >= tolerance:
            raise ReferenceAccuracyError(difference=difference, tolerance=tolerance)

        self.steps = steps
        self.self_check_difference = difference
        self._interpolant = CubicHermiteSpline(nodes, values, slopes, axis=0)

    def __call__(self, ts: ArrayLike) -> np.ndarray:
        """Reference values at the given times, shape (len(ts), d)."""
        ts = np.atleast_1d(np.asarray(ts, dtype=float))
        if np.any(ts < self.problem.a) or np.any(ts > self.problem.b):
            raise DomainError(f"reference requested outside [{self.problem.a}, {self.problem.b}]")
        if self._interpolant is None:
            return self.problem.exact(ts)
        return np.asarray(self._interpolant(ts)).reshape(ts.size, self.problem.d)


def reference_solution(p: ProblemSpec, t_grid: ArrayLike, finest_n: int = 2**13) -> np.ndarray:
    """
    Reference values of z(eta, f) on an ascending time grid.

    Args:
        p: Problem
        t_grid: Ascending times in [a, b]
        finest_n: Finest experimental step count the reference must resolve

    Raises:
        DomainError: If the grid leaves [a, b] or is not ascending
        ReferenceAccuracyError: If the Richardson self-check fails

    Returns:
        Array of shape (len(t_grid), d)
    """
    ts = np.atleast_1d(np.asarray(t_grid, dtype=float))
    if np.any(np.diff(ts) < 0.0):
        raise DomainError("reference grid must be ascending")
    return ReferenceSolution(p, finest_n=finest_n)(ts)
