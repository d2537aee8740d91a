"""Uniform meshes with one uniformly drawn evaluation point per step."""

from dataclasses import dataclass, replace
from typing import Any, Dict

import numpy as np
from numpy.typing import ArrayLike

from inexact_euler.core.problem import ProblemSpec
from inexact_euler.exceptions import DimensionError, DomainError


def _frozen(x: np.ndarray) -> np.ndarray:
    x = np.array(x, dtype=float)
    x.setflags(write=False)
    return x


@dataclass(frozen=True, eq=False)
class RandomMesh:
    """
    Immutable mesh t_j = a + j*h with evaluation points theta_j = t_{j-1} + tau_j*h.

    Attributes:
        n: Number of steps
        h: Step size (b - a) / n
        nodes: t_0 .. t_n, length n + 1
        taus: Draws tau_1 .. tau_n in (0, 1)
        thetas: Evaluation points theta_1 .. theta_n
    """
    n: int
    h: float
    nodes: np.ndarray
    taus: np.ndarray
    thetas: np.ndarray

    @property
    def a(self) -> float:
        return float(self.nodes[0])

    @property
    def b(self) -> float:
        return float(self.nodes[-1])

    def pinned(self, at_right_node: bool) -> "RandomMesh":
        """
        Copy with every theta_j moved to t_{j-1} (or t_j).

        Args:
            at_right_node: Pin to t_j instead of t_{j-1}

        Returns:
            RandomMesh with deterministic evaluation points
        """
        if at_right_node:
            return replace(self, taus=_frozen(np.ones(self.n)), thetas=_frozen(self.nodes[1:]))
        return replace(self, taus=_frozen(np.zeros(self.n)), thetas=_frozen(self.nodes[:-1]))

    def to_dict(self) -> Dict[str, Any]:
        """Convert to dictionary representation."""
        return {
            "n": self.n,
            "h": self.h,
            "nodes": self.nodes.tolist(),
            "taus": self.taus.tolist(),
            "thetas": self.thetas.tolist(),
        }


def make_mesh(p: ProblemSpec, n: int, draws: ArrayLike) -> RandomMesh:
    """
    Build the mesh of n uniform steps on p's interval from n draws in (0, 1).

    Args:
        p: Problem whose interval is meshed
        n: Number of steps, n >= 1
        draws: tau_1 .. tau_n

    Raises:
        DomainError: If n < 1 or a draw lies outside (0, 1)
        DimensionError: If the number of draws differs from n

    Returns:
        RandomMesh
    """
    if n < 1:
        raise DomainError(f"step count must be positive, got {n}")
    taus = np.asarray(draws, dtype=float).reshape(-1)
    if taus.size != n:
        raise DimensionError(f"expected {n} draws, got {taus.size}")
    if not np.all((taus > 0.0) & (taus < 1.0)):
        raise DomainError("every draw must lie in the open interval (0, 1)")

    h = (p.b - p.a) / n
    nodes = np.linspace(p.a, p.b, n + 1)
    # rounding may push theta_j past t_j when tau_j is close to 1
    thetas = np.minimum(nodes[:-1] + taus * h, nodes[1:])

    return RandomMesh(n=n, h=h, nodes=_frozen(nodes), taus=_frozen(taus), thetas=_frozen(thetas))
