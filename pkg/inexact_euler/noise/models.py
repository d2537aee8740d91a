"""Corrupting functions and the perturbed information the schemes consume."""

import math
from dataclasses import dataclass, field, replace
from types import MappingProxyType
from typing import Any, Dict, Mapping, Optional

import numpy as np

from inexact_euler.core import ProblemSpec, one_norm
from inexact_euler.enums import NoiseClass, NoiseKind
from inexact_euler.exceptions import ConfigurationError, DimensionError, DomainError

DEFAULT_PARAMS: Dict[NoiseKind, Dict[str, float]] = {
    NoiseKind.ZERO: {},
    NoiseKind.CONSTANT_DIRECTION: {"sign": 1.0, "axis": 0.0},
    NoiseKind.LINEAR_IN_STATE: {"scale": 1.0},
    NoiseKind.STATE_SCALED_SINE: {"omega": 2.0 * math.pi, "state_frequency": 0.0},
    NoiseKind.ADVERSARIAL_SIGN: {},
}


@dataclass(frozen=True, eq=False)
class NoiseModel:
    """
    Immutable corrupting function of precision delta.

    Attributes:
        delta: Precision parameter in [0, 1]
        class_tag: Declared class, K1 or K2
        kind: Built-in corrupting function
        params: Kind-specific parameters (see DEFAULT_PARAMS)
        eta_perturbation: Shift of the initial value, one-norm <= delta; None means zero
    """
    delta: float
    class_tag: NoiseClass
    kind: NoiseKind
    params: Mapping[str, float] = field(default_factory=dict)
    eta_perturbation: Optional[np.ndarray] = None

    def __post_init__(self):
        if not 0.0 <= self.delta <= 1.0:
            raise DomainError(f"precision delta must lie in [0, 1], got {self.delta}")

        unknown = set(self.params) - set(DEFAULT_PARAMS[self.kind])
        if unknown:
            raise ConfigurationError(f"unknown parameters for {self.kind.value} noise: {sorted(unknown)}")
        merged = {**DEFAULT_PARAMS[self.kind], **{k: float(v) for k, v in self.params.items()}}
        object.__setattr__(self, "params", MappingProxyType(merged))

        if self.kind is NoiseKind.ADVERSARIAL_SIGN and self.class_tag is not NoiseClass.K1:
            raise ConfigurationError("adversarial-sign noise is not state-Lipschitz; declare it K1")
        if self.kind is NoiseKind.CONSTANT_DIRECTION and merged["sign"] not in (-1.0, 1.0):
            raise DomainError(f"sign must be +1 or -1, got {merged['sign']}")
        if self.kind is NoiseKind.LINEAR_IN_STATE and abs(merged["scale"]) > 1.0:
            raise DomainError(f"scale must satisfy |s| <= 1, got {merged['scale']}")

        if self.eta_perturbation is not None:
            shift = np.array(self.eta_perturbation, dtype=float).reshape(-1)
            if shift.size and one_norm(shift) > self.delta:
                raise DomainError(
                    f"initial-value perturbation of one-norm {one_norm(shift)} exceeds delta={self.delta}"
                )
            shift.setflags(write=False)
            object.__setattr__(self, "eta_perturbation", shift)

    @property
    def needs_stream(self) -> bool:
        """True if corrupt() consumes random draws."""
        return self.kind is NoiseKind.ADVERSARIAL_SIGN and self.delta > 0.0

    def eta_shift(self, d: int) -> np.ndarray:
        """
        Initial-value perturbation as a length-d vector.

        Raises:
            DimensionError: If a stored perturbation has another length
        """
        if self.eta_perturbation is None or self.delta == 0.0:
            return np.zeros(d)
        if self.eta_perturbation.size != d:
            raise DimensionError(
                f"initial-value perturbation has length {self.eta_perturbation.size}, problem has d={d}"
            )
        return np.array(self.eta_perturbation)

    def with_delta(self, delta: float) -> "NoiseModel":
        """Same kind and parameters at another precision; the eta shift scales along."""
        shift = self.eta_perturbation
        if shift is not None:
            shift = shift * (delta / self.delta) if self.delta > 0.0 else None
        return replace(self, delta=delta, params=dict(self.params), eta_perturbation=shift)

    def to_dict(self) -> Dict[str, Any]:
        """Convert to dictionary representation."""
        return {
            "delta": self.delta,
            "class": self.class_tag.value,
            "kind": self.kind.value,
            "params": dict(self.params),
            "etaPerturbation": None if self.eta_perturbation is None else self.eta_perturbation.tolist(),
        }


def corrupt(
    m: NoiseModel, t: float, y: np.ndarray, rng: Optional[np.random.Generator] = None
) -> np.ndarray:
    """
    Evaluate the corrupting function delta~(t, y).

    Args:
        m: Noise model
        t: Time
        y: State
        rng: NoiseDraws generator; required by AdversarialSign only

    Raises:
        ConfigurationError: If AdversarialSign is evaluated without a generator

    Returns:
        Corruption vector of the same length as y
    """
    d = y.size
    if m.delta == 0.0 or m.kind is NoiseKind.ZERO:
        return np.zeros(d)

    params = m.params
    if m.kind is NoiseKind.CONSTANT_DIRECTION:
        out = np.zeros(d)
        out[int(params["axis"]) % d] = params["sign"] * m.delta
        return out

    if m.kind is NoiseKind.LINEAR_IN_STATE:
        return m.delta * params["scale"] * y

    radius = 1.0 + float(np.sum(np.abs(y)))
    if m.kind is NoiseKind.STATE_SCALED_SINE:
        phase = params["omega"] * t + params["state_frequency"] * (radius - 1.0)
        return np.full(d, m.delta * math.sin(phase) * radius / d)

    if rng is None:
        raise ConfigurationError("adversarial-sign noise needs a noise stream")
    out = np.zeros(d)
    out[0] = (1.0 if rng.random() < 0.5 else -1.0) * m.delta * radius
    return out


@dataclass(frozen=True, eq=False)
class PerturbedProblem:
    """A problem together with the noise corrupting its information."""
    base: ProblemSpec
    noise: NoiseModel

    def __post_init__(self):
        # fails early on a mismatched eta perturbation
        self.noise.eta_shift(self.base.d)

    @property
    def eta_tilde(self) -> np.ndarray:
        """Perturbed initial value eta + eta_perturbation."""
        return self.base.eta + self.noise.eta_shift(self.base.d)

    def rhs_tilde(self, t: float, y: np.ndarray, rng: Optional[np.random.Generator] = None) -> np.ndarray:
        """Perturbed right-hand side f(t, y) + delta~(t, y)."""
        return self.base.f(t, y) + corrupt(self.noise, t, y, rng)

    def clean(self) -> "PerturbedProblem":
        """The same problem with exact information."""
        return PerturbedProblem(self.base, zero_noise(0.0))


def zero_noise(delta: float) -> NoiseModel:
    """Zero corruption at precision delta (admissible in both classes)."""
    return NoiseModel(delta=delta, class_tag=NoiseClass.K2, kind=NoiseKind.ZERO)
