"""Builder for NoiseModel."""

from typing import Dict, Optional

import numpy as np
from numpy.typing import ArrayLike

from inexact_euler.enums import NoiseClass, NoiseKind
from inexact_euler.noise.models import NoiseModel


class NoiseModelBuilder:
    """Fluent builder for NoiseModel."""

    def __init__(self) -> None:
        self._delta: float = 0.0
        self._class_tag: NoiseClass = NoiseClass.K2
        self._kind: NoiseKind = NoiseKind.ZERO
        self._params: Dict[str, float] = {}
        self._eta_perturbation: Optional[np.ndarray] = None

    def with_delta(self, delta: float) -> "NoiseModelBuilder":
        """Set the precision parameter."""
        self._delta = float(delta)
        return self

    def with_class(self, class_tag: NoiseClass) -> "NoiseModelBuilder":
        """Set the declared class (K1 or K2)."""
        self._class_tag = class_tag
        return self

    def with_kind(self, kind: NoiseKind) -> "NoiseModelBuilder":
        """Set the corrupting function."""
        self._kind = kind
        return self

    def with_param(self, name: str, value: float) -> "NoiseModelBuilder":
        """Set one kind-specific parameter."""
        self._params[name] = float(value)
        return self

    def with_eta_perturbation(self, shift: ArrayLike) -> "NoiseModelBuilder":
        """Set the initial-value perturbation vector."""
        self._eta_perturbation = np.atleast_1d(np.asarray(shift, dtype=float))
        return self

    def with_eta_shift(self, fraction: float, d: int) -> "NoiseModelBuilder":
        """
        Shift the initial value by fraction * delta along the first axis.

        Args:
            fraction: Value in [-1, 1]
            d: State dimension

        Returns:
            Self for method chaining
        """
        shift = np.zeros(d)
        shift[0] = fraction * self._delta
        self._eta_perturbation = shift
        return self

    def build(self) -> NoiseModel:
        """
        Build the NoiseModel instance.

        Raises:
            DomainError: If delta, parameters or the eta perturbation are out of range
            ConfigurationError: If a parameter is unknown for the chosen kind

        Returns:
            NoiseModel instance
        """
        return NoiseModel(
            delta=self._delta,
            class_tag=self._class_tag,
            kind=self._kind,
            params=dict(self._params),
            eta_perturbation=self._eta_perturbation,
        )

    @classmethod
    def zero(cls, delta: float = 0.0) -> "NoiseModelBuilder":
        """
        Builder preset for zero corruption.

        Args:
            delta: Precision parameter

        Returns:
            NoiseModelBuilder instance
        """
        return cls().with_delta(delta).with_kind(NoiseKind.ZERO)

    @classmethod
    def constant_direction(cls, delta: float, sign: float = 1.0) -> "NoiseModelBuilder":
        """
        Builder preset for the constant corruption sign * delta * e_1.

        Args:
            delta: Precision parameter
            sign: +1 or -1

        Returns:
            NoiseModelBuilder instance
        """
        return cls().with_delta(delta).with_kind(NoiseKind.CONSTANT_DIRECTION).with_param("sign", sign)
