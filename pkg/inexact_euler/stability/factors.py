"""Closed-form step factors and second moments for z' = 2 lambda t z."""

import math

import numpy as np

from inexact_euler.exceptions import DomainError, SingularityError


def explicit_step_factor(lam: complex, h: float, theta: float) -> complex:
    """Explicit Euler step factor 1 + 2 lambda h theta."""
    return 1.0 + 2.0 * complex(lam) * h * theta


def implicit_step_factor(lam: complex, h: float, theta: float) -> complex:
    """
    Implicit Euler step factor 1 / (1 - 2 lambda h theta).

    Raises:
        SingularityError: If the denominator vanishes (lambda real positive, theta = 1/(2 lambda h))
    """
    denominator = 1.0 - 2.0 * complex(lam) * h * theta
    if denominator == 0:
        raise SingularityError(f"1 - 2 lambda h theta = 0 for lambda={lam}, h={h}, theta={theta}")
    return 1.0 / denominator


def ms_moment_explicit(lam: complex, h: float, K: int) -> float:
    """
    log E|V^K / eta|^2 of the explicit randomized scheme.

    Each factor is the mean over tau ~ U(0, 1) of |1 + 2 lambda h theta_j|^2 with
    theta_j = h (j - 1 + tau): 1 + 4 Re(lambda) h^2 (j - 1/2) + 4 |lambda|^2 h^4 (j^2 - j + 1/3).

    Args:
        lam: lambda
        h: Step size
        K: Horizon (number of steps), >= 1

    Raises:
        DomainError: If K < 1 or a factor is not positive

    Returns:
        Sum of the log factors
    """
    if K < 1:
        raise DomainError(f"horizon must be at least 1, got {K}")
    lam = complex(lam)
    j = np.arange(1, K + 1, dtype=float)
    factors = 1.0 + 4.0 * lam.real * h**2 * (j - 0.5) + 4.0 * abs(lam) ** 2 * h**4 * (j**2 - j + 1.0 / 3.0)
    if np.any(factors <= 0.0):
        raise DomainError("second-moment factor is not positive; cannot take its logarithm")
    return float(np.sum(np.log(factors)))


def implicit_moment_factors(lam: complex, h: float, K: int) -> np.ndarray:
    """
    E |1 / (1 - 2 lambda h theta_j)|^2 for j = 1..K, theta_j = h (j - 1 + tau), tau ~ U(0, 1).

    With w = 2 lambda h^2 the factor is the integral over x in [j-1, j] of
    1 / |1 - w x|^2.

    Raises:
        SingularityError: If the integrand has a pole in some step (lambda real positive)
    """
    lam = complex(lam)
    j = np.arange(1, K + 1, dtype=float)
    w = 2.0 * lam * h**2
    alpha, beta, w2 = w.real, w.imag, abs(w) ** 2
    if w2 == 0.0:
        return np.ones(K)
    if beta == 0.0:
        left, right = 1.0 - alpha * (j - 1.0), 1.0 - alpha * j
        if np.any(left * right <= 0.0):
            raise SingularityError(f"implicit factor has a pole inside a step for lambda={lam}, h={h}")
        return 1.0 / (left * right)
    center = alpha / w2
    scale = w2 / abs(beta)
    upper = (j - center) * scale
    lower = (j - 1.0 - center) * scale
    # arctan(upper) - arctan(lower), computed without cancellation
    return np.arctan2(upper - lower, 1.0 + upper * lower) / abs(beta)


def ms_moment_implicit(lam: complex, h: float, K: int) -> float:
    """
    log E|U^K / eta|^2 of the implicit randomized scheme.

    Raises:
        DomainError: If K < 1
        SingularityError: If lambda is real positive and a pole falls in the horizon
    """
    if K < 1:
        raise DomainError(f"horizon must be at least 1, got {K}")
    with np.errstate(divide="ignore"):
        return float(np.sum(np.log(implicit_moment_factors(lam, h, K))))


def deterministic_log_moment(lam: complex, h: float, K: int, implicit: bool) -> float:
    """
    log |W^K / eta|^2 of classical Euler (theta_j = t_{j-1} explicit, t_j implicit).

    Returns inf for a vanishing implicit denominator, -inf for a vanishing explicit factor.
    """
    if K < 1:
        raise DomainError(f"horizon must be at least 1, got {K}")
    lam = complex(lam)
    j = np.arange(1, K + 1, dtype=float)
    with np.errstate(divide="ignore"):
        if implicit:
            return float(-np.sum(np.log(np.abs(1.0 - 2.0 * lam * h * (h * j)) ** 2)))
        return float(np.sum(np.log(np.abs(1.0 + 2.0 * lam * h * (h * (j - 1.0))) ** 2)))


def _crossover(lam: complex, h: float, sign: float) -> int:
    lam = complex(lam)
    if lam == 0:
        raise DomainError("no crossover for lambda = 0")
    modulus2 = abs(lam) ** 2
    root = (sign * lam.real + math.sqrt(lam.real**2 + modulus2)) / (2.0 * modulus2 * h**2)
    return int(math.floor(root)) + 2


def explicit_crossover_index(lam: complex, h: float) -> int:
    """
    First step j with 1 + 4 Re(lambda) h^2 (j-1) + 4 |lambda|^2 h^4 (j-1)^2 > 2.

    From this step on every explicit squared step factor exceeds 2.
    """
    return _crossover(lam, h, -1.0)


def implicit_crossover_index(lam: complex, h: float) -> int:
    """
    First step j with 1 - 4 Re(lambda) h^2 (j-1) + 4 |lambda|^2 h^4 (j-1)^2 > 2.

    From this step on every implicit squared step factor is below 1/2.
    """
    return _crossover(lam, h, 1.0)
