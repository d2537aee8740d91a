"""Vector norms. Every state-space distance in the library is a one-norm."""

import numpy as np
from numpy.typing import ArrayLike

from inexact_euler.exceptions import DimensionError


def one_norm(x: ArrayLike) -> float:
    """
    Sum of absolute values of the coordinates.

    Args:
        x: Nonempty real vector

    Raises:
        DimensionError: If x is empty

    Returns:
        The one-norm of x
    """
    arr = np.asarray(x, dtype=float)
    if arr.size == 0:
        raise DimensionError("one-norm of an empty vector")
    return float(np.sum(np.abs(arr)))


def row_one_norms(x: np.ndarray) -> np.ndarray:
    """One-norm of every row of a 2-d array."""
    return np.sum(np.abs(x), axis=1)
