"""Initial-value problems with known class parameters, mostly with exact solutions."""

import math
from typing import Tuple

import numpy as np

from inexact_euler.core import ProblemSpec, ProblemSpecBuilder
from inexact_euler.exceptions import DomainError
from inexact_euler.noise import NoiseModel, NoiseModelBuilder


def linear_autonomous(K: float = 1.0, L: float = 1.0, a: float = 0.0, b: float = 1.0) -> ProblemSpec:
    """
    z' = A z, z(a) = A with A = min(K, L); z(t) = A exp(A (t - a)).

    Args:
        K: Growth constant
        L: Lipschitz constant
        a: Start time
        b: End time

    Returns:
        ProblemSpec named "linear"
    """
    if not (K > 0.0 and L > 0.0):
        raise DomainError(f"K and L must be positive, got K={K}, L={L}")
    A = min(K, L)

    def rhs(t: float, y: np.ndarray) -> np.ndarray:
        return A * y

    def solution(ts: np.ndarray) -> np.ndarray:
        return (A * np.exp(A * (ts - a)))[:, None]

    return (
        ProblemSpecBuilder()
        .with_name("linear")
        .with_interval(a, b)
        .with_initial_value(A)
        .with_rhs(rhs)
        .with_constants(K, L, rho=1.0)
        .with_analytic_solution(solution)
        .build()
    )


def holder_time_probe(rho: float, L: float = 1.0, a: float = 0.0, b: float = 1.0) -> ProblemSpec:
    """
    z' = L |t - m|^rho with m the interval midpoint, z(a) = 0.

    The field is state independent and exactly rho-Hölder in time at the
    interior kink t = m.

    Args:
        rho: Hölder exponent in (0, 1]
        L: Hölder constant
        a: Start time
        b: End time

    Returns:
        ProblemSpec named "holder(rho)"
    """
    if not 0.0 < rho <= 1.0:
        raise DomainError(f"Hölder exponent must lie in (0, 1], got {rho}")
    mid = 0.5 * (a + b)
    K = L * (0.5 * (b - a)) ** rho + 1.0

    def rhs(t: float, y: np.ndarray) -> np.ndarray:
        return np.array([L * abs(t - mid) ** rho])

    def antiderivative(s: np.ndarray) -> np.ndarray:
        offset = s - mid
        return np.sign(offset) * np.abs(offset) ** (rho + 1.0) / (rho + 1.0)

    def solution(ts: np.ndarray) -> np.ndarray:
        return (L * (antiderivative(ts) - antiderivative(np.asarray(a))))[:, None]

    return (
        ProblemSpecBuilder()
        .with_name(f"holder({rho:g})")
        .with_interval(a, b)
        .with_initial_value(0.0)
        .with_rhs(rhs)
        .with_constants(K, L, rho=rho)
        .with_analytic_solution(solution)
        .build()
    )


def lipschitz_state_probe(
    K: float = 1.0, L: float = 1.0, d: int = 2, a: float = 0.0, b: float = 1.0
) -> ProblemSpec:
    """
    f_i(t, y) = (K / (2d)) (1 + sin y_i), bounded and globally Lipschitz; no exact solution.

    Args:
        K: Growth constant
        L: Lipschitz constant, must be >= K / 2
        d: State dimension
        a: Start time
        b: End time

    Raises:
        DomainError: If K / 2 > L or d < 1

    Returns:
        ProblemSpec named "state(d)"
    """
    if d < 1:
        raise DomainError(f"dimension must be positive, got {d}")
    if K / 2.0 > L:
        raise DomainError(f"state probe needs K/2 <= L, got K={K}, L={L}")
    scale = K / (2.0 * d)

    def rhs(t: float, y: np.ndarray) -> np.ndarray:
        return scale * (1.0 + np.sin(y))

    return (
        ProblemSpecBuilder()
        .with_name(f"state({d})")
        .with_interval(a, b)
        .with_initial_value(np.full(d, scale))
        .with_rhs(rhs)
        .with_constants(K, L, rho=1.0)
        .build()
    )


def adversarial_pair(
    delta: float, a: float = 0.0, b: float = 1.0, d: int = 1
) -> Tuple[ProblemSpec, ProblemSpec, Tuple[NoiseModel, NoiseModel]]:
    """
    Two problems f = +delta e_1 and f = -delta e_1 (eta = 0) that look identical under noise.

    Each returned noise model is the constant corruption of precision delta
    that cancels its problem's field, so both perturbed problems present the
    information (eta~, f~) = (0, 0). Their solutions are delta (t - a) e_1 apart
    on each side, 2 delta (b - a) apart at t = b.

    Args:
        delta: Precision in (0, 1]
        a: Start time
        b: End time
        d: State dimension

    Raises:
        DomainError: If delta is outside (0, 1]

    Returns:
        (plus, minus, (noise for plus, noise for minus))
    """
    if not 0.0 < delta <= 1.0:
        raise DomainError(f"adversarial precision must lie in (0, 1], got {delta}")

    def build(sign: float) -> ProblemSpec:
        field = np.zeros(d)
        field[0] = sign * delta

        def rhs(t: float, y: np.ndarray) -> np.ndarray:
            return field.copy()

        def solution(ts: np.ndarray) -> np.ndarray:
            return (ts - a)[:, None] * field[None, :]

        return (
            ProblemSpecBuilder()
            .with_name(f"adversarial({delta:g},{'+' if sign > 0 else '-'})")
            .with_interval(a, b)
            .with_initial_value(np.zeros(d))
            .with_rhs(rhs)
            .with_constants(1.0, 1.0, rho=1.0)
            .with_analytic_solution(solution)
            .build()
        )

    plus, minus = build(1.0), build(-1.0)
    cancel_plus = NoiseModelBuilder.constant_direction(delta, sign=-1.0).build()
    cancel_minus = NoiseModelBuilder.constant_direction(delta, sign=1.0).build()
    return plus, minus, (cancel_plus, cancel_minus)


def stability_problem(lam: complex, eta: complex = 1.0, horizon: float = 1.0) -> ProblemSpec:
    """
    z' = 2 lambda t z, z(0) = eta on [0, horizon], written as a real 2-d system.

    The state is (Re z, Im z) and the field is 2t times the rotation-scaling
    matrix of lambda; the exact solution is eta exp(lambda t^2).

    Args:
        lam: Complex parameter lambda
        eta: Nonzero complex initial value
        horizon: End of the truncated time interval

    Raises:
        DomainError: If eta = 0

    Returns:
        ProblemSpec named "stability(re,im)"
    """
    eta = complex(eta)
    lam = complex(lam)
    if eta == 0:
        raise DomainError("the stability test problem needs a nonzero initial value")
    matrix = np.array([[lam.real, -lam.imag], [lam.imag, lam.real]])
    bound = max(abs(eta.real) + abs(eta.imag), 2.0 * horizon * (abs(lam.real) + abs(lam.imag)), 1.0)

    def rhs(t: float, y: np.ndarray) -> np.ndarray:
        return 2.0 * t * (matrix @ y)

    def solution(ts: np.ndarray) -> np.ndarray:
        z = eta * np.exp(lam * ts**2)
        return np.column_stack([z.real, z.imag])

    return (
        ProblemSpecBuilder()
        .with_name(f"stability({lam.real:g},{lam.imag:g})")
        .with_interval(0.0, horizon)
        .with_initial_value([eta.real, eta.imag])
        .with_rhs(rhs)
        .with_constants(bound, bound, rho=1.0)
        .with_analytic_solution(solution)
        .build()
    )
