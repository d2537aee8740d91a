"""Initial-value problems and the constants derived from their class parameters."""

import math
from dataclasses import dataclass
from typing import Any, Callable, Dict, Optional

import numpy as np
from numpy.typing import ArrayLike

from inexact_euler.core.validator import ProblemValidator
from inexact_euler.exceptions import DimensionError, DomainError

Rhs = Callable[[float, np.ndarray], np.ndarray]
AnalyticSolution = Callable[[np.ndarray], np.ndarray]


@dataclass(frozen=True, eq=False)
class ProblemSpec:
    """
    Immutable initial-value problem z' = f(t, z), z(a) = eta on [a, b].

    K, L, rho and lipschitz_radius are asserted by whoever builds the problem;
    they are spot-checked by ``analysis.check_assumptions``, never proven.

    Attributes:
        a: Start time
        b: End time, a < b
        d: State dimension
        eta: Initial value, ||eta||_1 <= K
        rhs: Right-hand side f(t, y)
        K: Growth / initial-value constant
        L: Lipschitz and Hölder constant
        rho: Hölder exponent of f in time, in (0, 1]
        lipschitz_radius: Radius of the ball around eta where f is L-Lipschitz (inf: global)
        analytic_solution: Vectorised exact solution, array of shape (m,) -> (m, d)
        name: Fixture name used in reports
    """
    a: float
    b: float
    d: int
    eta: np.ndarray
    rhs: Rhs
    K: float
    L: float
    rho: float
    lipschitz_radius: float = math.inf
    analytic_solution: Optional[AnalyticSolution] = None
    name: str = "custom"

    def __post_init__(self):
        eta = np.array(self.eta, dtype=float).reshape(-1)
        eta.setflags(write=False)
        object.__setattr__(self, "eta", eta)

        if not ProblemValidator.validate_interval(self.a, self.b):
            raise DomainError(f"interval requires a < b, got [{self.a}, {self.b}]")
        if not ProblemValidator.validate_dimension(self.d, eta):
            raise DimensionError(f"initial value of shape {eta.shape} does not match d={self.d}")
        if not ProblemValidator.validate_rho(self.rho):
            raise DomainError(f"Hölder exponent must lie in (0, 1], got {self.rho}")
        if not ProblemValidator.validate_constants(self.K, self.L):
            raise DomainError(f"K and L must be positive, got K={self.K}, L={self.L}")
        if not ProblemValidator.validate_lipschitz_radius(self.lipschitz_radius):
            raise DomainError(f"Lipschitz radius must be nonnegative, got {self.lipschitz_radius}")
        if not ProblemValidator.validate_initial_value(eta, self.K):
            raise DomainError(f"initial value violates ||eta||_1 <= K={self.K}")
        if not ProblemValidator.validate_analytic_start(self.analytic_solution, self.a, eta):
            raise DomainError("analytic solution does not start at eta")

    @property
    def length(self) -> float:
        """Interval length b - a."""
        return self.b - self.a

    @property
    def has_analytic(self) -> bool:
        return self.analytic_solution is not None

    def f(self, t: float, y: np.ndarray) -> np.ndarray:
        """Evaluate the exact right-hand side as a float vector."""
        return np.asarray(self.rhs(t, y), dtype=float)

    def exact(self, ts: ArrayLike) -> np.ndarray:
        """
        Evaluate the analytic solution on a time array.

        Args:
            ts: Times in [a, b]

        Raises:
            DomainError: If the problem has no analytic solution

        Returns:
            Array of shape (len(ts), d)
        """
        if self.analytic_solution is None:
            raise DomainError(f"problem '{self.name}' has no analytic solution")
        ts = np.atleast_1d(np.asarray(ts, dtype=float))
        return np.asarray(self.analytic_solution(ts), dtype=float).reshape(ts.size, self.d)


@dataclass(frozen=True)
class ClassConstants:
    """
    Radii and bound constants determined by (a, b, K, L).

    Attributes:
        R1: Radius of the ball holding every explicit iterate
        R2: Radius of the ball holding the exact solution
        R0: max(R1, R2)
        explicit_noise_C: Constant C of the explicit perturbation bound C*delta
        implicit_iterate_bound: Bound on every implicit iterate's one-norm
        implicit_noise_C: Constant C of the implicit perturbation bound C*delta
    """
    R1: float
    R2: float
    R0: float
    explicit_noise_C: float
    implicit_iterate_bound: float
    implicit_noise_C: float

    def to_dict(self) -> Dict[str, Any]:
        """Convert to dictionary representation."""
        return {
            "R1": self.R1,
            "R2": self.R2,
            "R0": self.R0,
            "explicitNoiseC": self.explicit_noise_C,
            "implicitIterateBound": self.implicit_iterate_bound,
            "implicitNoiseC": self.implicit_noise_C,
        }


def compute_class_constants(p: ProblemSpec) -> ClassConstants:
    """
    Evaluate the class constants of a problem from its interval and K, L.

    Args:
        p: Problem

    Returns:
        ClassConstants
    """
    length = p.length
    K, L = p.K, p.L

    r1 = (K + 2.0) * math.exp((K + 1.0) * length) + K - 1.0
    r2 = K * (1.0 + length) * math.exp(K * length) + K
    iterate_bound = (K + 2.0) * math.exp(2.0 * (K + 1.0) * length) - 1.0
    explicit_c = math.exp(L * length) * (1.0 + (1.0 + r1 - K) / L)
    growth = math.exp(2.0 * L * length)
    implicit_c = growth + ((1.0 + iterate_bound) / L) * (growth - 1.0)

    return ClassConstants(
        R1=r1,
        R2=r2,
        R0=max(r1, r2),
        explicit_noise_C=explicit_c,
        implicit_iterate_bound=iterate_bound,
        implicit_noise_C=implicit_c,
    )
