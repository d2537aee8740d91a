"""Builder for ProblemSpec."""

import math
from typing import Optional

import numpy as np
from numpy.typing import ArrayLike

from inexact_euler.core.problem import AnalyticSolution, ProblemSpec, Rhs
from inexact_euler.exceptions import DomainError


class ProblemSpecBuilder:
    """Fluent builder for ProblemSpec."""

    def __init__(self) -> None:
        self._a: Optional[float] = None
        self._b: Optional[float] = None
        self._eta: Optional[np.ndarray] = None
        self._rhs: Optional[Rhs] = None
        self._K: Optional[float] = None
        self._L: Optional[float] = None
        self._rho: float = 1.0
        self._lipschitz_radius: float = math.inf
        self._analytic_solution: Optional[AnalyticSolution] = None
        self._name: str = "custom"

    def with_interval(self, a: float, b: float) -> "ProblemSpecBuilder":
        """
        Set the time interval.

        Args:
            a: Start time
            b: End time

        Raises:
            DomainError: If a >= b

        Returns:
            Self for method chaining
        """
        if not a < b:
            raise DomainError(f"interval requires a < b, got [{a}, {b}]")
        self._a = float(a)
        self._b = float(b)
        return self

    def with_initial_value(self, eta: ArrayLike) -> "ProblemSpecBuilder":
        """
        Set the initial value; its length fixes the state dimension.

        Args:
            eta: Initial value vector (a scalar means d = 1)

        Returns:
            Self for method chaining
        """
        self._eta = np.atleast_1d(np.asarray(eta, dtype=float))
        return self

    def with_rhs(self, rhs: Rhs) -> "ProblemSpecBuilder":
        """Set the right-hand side f(t, y)."""
        self._rhs = rhs
        return self

    def with_constants(self, K: float, L: float, rho: float = 1.0) -> "ProblemSpecBuilder":
        """
        Set the class constants.

        Args:
            K: Growth / initial-value constant
            L: Lipschitz and Hölder constant
            rho: Hölder exponent in time

        Returns:
            Self for method chaining
        """
        self._K = float(K)
        self._L = float(L)
        self._rho = float(rho)
        return self

    def with_lipschitz_radius(self, radius: float) -> "ProblemSpecBuilder":
        """Set the radius of the Lipschitz ball (inf for globally Lipschitz)."""
        self._lipschitz_radius = float(radius)
        return self

    def with_analytic_solution(self, solution: AnalyticSolution) -> "ProblemSpecBuilder":
        """Set the vectorised exact solution, shape (m,) -> (m, d)."""
        self._analytic_solution = solution
        return self

    def with_name(self, name: str) -> "ProblemSpecBuilder":
        """Set the name used in reports."""
        self._name = name
        return self

    def build(self) -> ProblemSpec:
        """
        Build the ProblemSpec instance.

        Raises:
            DomainError: If a required field is missing or a class condition fails

        Returns:
            ProblemSpec instance
        """
        if any(x is None for x in [self._a, self._b, self._eta, self._rhs, self._K, self._L]):
            raise DomainError("interval, initial value, rhs and constants K, L must all be set")

        return ProblemSpec(
            a=self._a,
            b=self._b,
            d=int(self._eta.size),
            eta=self._eta,
            rhs=self._rhs,
            K=self._K,
            L=self._L,
            rho=self._rho,
            lipschitz_radius=self._lipschitz_radius,
            analytic_solution=self._analytic_solution,
            name=self._name,
        )
