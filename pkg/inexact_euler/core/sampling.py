"""Random sampling of states and times for sampled assumption checks."""

import math
from typing import Tuple

import numpy as np


def sample_in_ball(rng: np.random.Generator, center: np.ndarray, radius: float, count: int) -> np.ndarray:
    """
    Uniform samples from the one-norm ball B(center, radius).

    Args:
        rng: Generator
        center: Ball center, length d
        radius: Ball radius (finite)
        count: Number of samples

    Returns:
        Array of shape (count, d)
    """
    d = center.size
    # the first d coordinates of a flat Dirichlet(d+1) sample are uniform on the simplex interior
    weights = rng.dirichlet(np.ones(d + 1), size=count)[:, :d]
    signs = rng.choice((-1.0, 1.0), size=(count, d))
    return center[None, :] + radius * weights * signs


def sample_pairs(
    rng: np.random.Generator, center: np.ndarray, radius: float, count: int
) -> Tuple[np.ndarray, np.ndarray]:
    """
    Pairs (x, y) in B(center, radius), half of them at log-uniform small separations.

    Close pairs resolve local Lipschitz ratios that far-apart pairs average out.

    Returns:
        Two arrays of shape (count, d)
    """
    x = sample_in_ball(rng, center, radius, count)
    y = sample_in_ball(rng, center, radius, count)
    close = count // 2
    if close:
        scale = radius * 10.0 ** rng.uniform(-3.0, -1.0, size=(close, 1))
        direction = sample_in_ball(rng, np.zeros(center.size), 1.0, close)
        y[:close] = x[:close] + scale * direction
    return x, y


def sample_times(rng: np.random.Generator, a: float, b: float, count: int) -> np.ndarray:
    """Uniform times in [a, b]."""
    return rng.uniform(a, b, size=count)


def finite_radius(radius: float, fallback: float) -> float:
    """Radius to sample in: `radius` if finite, else `fallback`."""
    return radius if math.isfinite(radius) else fallback
