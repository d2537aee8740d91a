"""Scheme output: node values with piecewise-linear dense output."""

from dataclasses import dataclass
from typing import Any, Dict, Tuple

import numpy as np

from inexact_euler.core.mesh import RandomMesh
from inexact_euler.enums import SchemeTag
from inexact_euler.exceptions import DimensionError, DomainError


@dataclass(frozen=True, eq=False)
class Trajectory:
    """
    Node values W^0 .. W^n of a scheme on a mesh.

    Attributes:
        mesh: Mesh the scheme ran on
        values: Array of shape (n + 1, d)
        scheme_tag: Scheme that produced the values
        evaluations: Number of noisy right-hand-side evaluations spent
    """
    mesh: RandomMesh
    values: np.ndarray
    scheme_tag: SchemeTag
    evaluations: int = 0

    def __post_init__(self):
        values = np.array(self.values, dtype=float)
        if values.ndim != 2 or values.shape[0] != self.mesh.n + 1:
            raise DimensionError(
                f"expected {self.mesh.n + 1} node values, got array of shape {values.shape}"
            )
        values.setflags(write=False)
        object.__setattr__(self, "values", values)

    @property
    def d(self) -> int:
        return int(self.values.shape[1])

    def to_dict(self) -> Dict[str, Any]:
        """Convert to dictionary representation."""
        return {
            "scheme": self.scheme_tag.value,
            "evaluations": self.evaluations,
            "nodes": self.mesh.nodes.tolist(),
            "values": self.values.tolist(),
        }


def eval_dense(traj: Trajectory, t: float) -> np.ndarray:
    """
    Evaluate the piecewise-linear interpolant of the node values.

    A node shared by two steps is assigned to the left step; both sides give
    the node value.

    Args:
        traj: Trajectory
        t: Time in [a, b]

    Raises:
        DomainError: If t lies outside [a, b]

    Returns:
        Interpolated state vector
    """
    nodes = traj.mesh.nodes
    if not nodes[0] <= t <= nodes[-1]:
        raise DomainError(f"t={t} outside [{nodes[0]}, {nodes[-1]}]")

    j = int(np.searchsorted(nodes, t, side="left"))
    if j == 0:
        return traj.values[0].copy()
    left, right = nodes[j - 1], nodes[j]
    w = (t - left) / (right - left)
    return (1.0 - w) * traj.values[j - 1] + w * traj.values[j]


def dense_grid(traj: Trajectory, refinement: int) -> Tuple[np.ndarray, np.ndarray]:
    """
    Interpolant on every node plus `refinement` equispaced interior points per step.

    Args:
        traj: Trajectory
        refinement: Interior points per step, >= 0

    Returns:
        (times, values) of shapes (n*(refinement+1) + 1,) and (same, d)
    """
    if refinement < 0:
        raise DomainError(f"refinement must be nonnegative, got {refinement}")
    nodes = traj.mesh.nodes
    values = traj.values
    n = traj.mesh.n
    weights = np.arange(refinement + 1) / (refinement + 1)

    left_t = nodes[:-1, None]
    step = (nodes[1:] - nodes[:-1])[:, None]
    times = (left_t + weights[None, :] * step).reshape(-1)

    w = weights[None, :, None]
    interior = (1.0 - w) * values[:-1, None, :] + w * values[1:, None, :]
    grid_values = interior.reshape(n * (refinement + 1), traj.d)

    times = np.concatenate([times, nodes[-1:]])
    grid_values = np.concatenate([grid_values, values[-1:]], axis=0)
    return times, grid_values
