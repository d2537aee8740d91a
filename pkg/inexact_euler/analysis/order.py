"""Empirical convergence orders from (n, error) pairs."""

import math
from dataclasses import dataclass
from typing import Any, Dict, Sequence, Tuple

import numpy as np

from inexact_euler.exceptions import DomainError


@dataclass(frozen=True)
class OrderFit:
    """
    Least-squares fit of log(error) = -order * log(n) + intercept.

    Attributes:
        points: (n, error) pairs used in the fit
        fitted_order: Negative slope in log-log coordinates
        intercept: Fitted intercept
        r_squared: Coefficient of determination, in [0, 1]
    """
    points: Tuple[Tuple[int, float], ...]
    fitted_order: float
    intercept: float
    r_squared: float

    def to_dict(self) -> Dict[str, Any]:
        """Convert to dictionary representation."""
        return {
            "points": [[n, e] for n, e in self.points],
            "fittedOrder": self.fitted_order,
            "intercept": self.intercept,
            "rSquared": self.r_squared,
        }


def theoretical_order(rho: float) -> float:
    """Rate exponent min(rho + 1/2, 1) of both randomized Euler schemes."""
    return min(rho + 0.5, 1.0)


def fit_order(points: Sequence[Tuple[int, float]], drop_nonpositive: bool = False) -> OrderFit:
    """
    Fit the empirical convergence order.

    Args:
        points: (n, error) pairs
        drop_nonpositive: Drop points with error <= 0 instead of failing

    Raises:
        DomainError: If fewer than 3 usable points remain, or an error is <= 0
            and drop_nonpositive is off

    Returns:
        OrderFit
    """
    usable = []
    for n, error in points:
        if not error > 0.0:
            if drop_nonpositive:
                continue
            raise DomainError(f"error at n={n} is {error}; log-log fit needs positive errors")
        usable.append((int(n), float(error)))
    if len(usable) < 3:
        raise DomainError(f"order fit needs at least 3 points, got {len(usable)}")

    log_n = np.log([n for n, _ in usable])
    log_e = np.log([e for _, e in usable])
    slope, intercept = np.polyfit(log_n, log_e, 1)

    residual = log_e - (slope * log_n + intercept)
    ss_res = float(np.sum(residual**2))
    ss_tot = float(np.sum((log_e - np.mean(log_e)) ** 2))
    if ss_tot == 0.0:
        r_squared = 1.0 if ss_res == 0.0 else 0.0
    else:
        r_squared = min(max(1.0 - ss_res / ss_tot, 0.0), 1.0)

    return OrderFit(
        points=tuple(usable),
        fitted_order=-float(slope),
        intercept=float(intercept),
        r_squared=r_squared if math.isfinite(r_squared) else 0.0,
    )
