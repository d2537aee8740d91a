"""
Experiment configuration.

One pydantic model per subcommand. Files are `key = value` text with one
[section] per subcommand; list values are comma separated. Every key can be
overridden from the command line.
"""

import configparser
import os
import re
from pathlib import Path
from typing import Any, Dict, Mapping, Optional, Tuple, Type

from pydantic import BaseModel, ConfigDict, Field, ValidationError, field_validator, model_validator

from inexact_euler.enums import NoiseClass, NoiseKind, Plane, Predictor, SchemeTag, StabilityMode
from inexact_euler.exceptions import ConfigurationError
from inexact_euler.stability import DEFAULT_BLOWUP, DEFAULT_DECAY

MAX_SEED = 2**64 - 1
# commas inside parentheses belong to fixture arguments, e.g. stability(-1,0)
_LIST_SEPARATOR = re.compile(r",(?![^()]*\))")
LOG_LEVELS = ("DEBUG", "INFO", "WARNING", "ERROR")
# keys that do not change results and stay out of artifact provenance
RUNTIME_ONLY_KEYS = frozenset({"threads", "out", "log_level"})


def _split_list(value: Any) -> Any:
    if isinstance(value, str):
        return tuple(item.strip() for item in _LIST_SEPARATOR.split(value) if item.strip())
    return value


class RunSettings(BaseModel):
    """Keys shared by every subcommand."""
    model_config = ConfigDict(extra="forbid", frozen=True)

    seed: int = Field(0, ge=0, le=MAX_SEED)
    threads: int = Field(default_factory=lambda: os.cpu_count() or 1, ge=1)
    out: str = "."
    force: bool = False
    log_level: str = "WARNING"

    @field_validator("log_level")
    @classmethod
    def known_level(cls, value: str) -> str:
        level = value.upper()
        if level not in LOG_LEVELS:
            raise ValueError(f"log level must be one of {', '.join(LOG_LEVELS)}")
        return level


class SolverSettings(RunSettings):
    """Problem interval, declared constants and implicit solver knobs."""
    a: float = 0.0
    b: float = 1.0
    K: float = Field(1.0, gt=0.0)
    L: float = Field(1.0, gt=0.0)
    fp_tolerance: float = Field(1e-12, gt=0.0)
    max_iterations: int = Field(200, ge=1)
    predictor: Predictor = Predictor.EXPLICIT_EULER

    @model_validator(mode="after")
    def ordered_interval(self) -> "SolverSettings":
        if not self.a < self.b:
            raise ValueError(f"need a < b, got a={self.a}, b={self.b}")
        return self


class ConvergenceConfig(SolverSettings):
    """[convergence]: error against n at fixed delta."""
    fixture: str = "holder(0.25)"
    scheme: SchemeTag = SchemeTag.EXPLICIT_RAND
    noise_kind: NoiseKind = NoiseKind.ZERO
    noise_class: NoiseClass = NoiseClass.K2
    delta: float = Field(0.0, ge=0.0, le=1.0)
    # initial value shifted by eta_shift * delta along the first axis
    eta_shift: float = Field(0.0, ge=-1.0, le=1.0)
    n_list: Tuple[int, ...] = tuple(2**k for k in range(6, 14))
    p: float = Field(2.0, ge=2.0)
    M: int = Field(200, ge=2)
    sup_refinement: int = Field(8, ge=1)

    @field_validator("n_list", mode="before")
    @classmethod
    def split_n_list(cls, value: Any) -> Any:
        return _split_list(value)

    @field_validator("n_list")
    @classmethod
    def enough_sizes(cls, value: Tuple[int, ...]) -> Tuple[int, ...]:
        if len(value) < 3 or any(n < 1 for n in value):
            raise ValueError("n_list needs at least three positive step counts")
        return value


class NoiseSweepConfig(SolverSettings):
    """[noise-sweep]: error against delta at fixed n."""
    fixture: str = "linear"
    scheme: SchemeTag = SchemeTag.EXPLICIT_RAND
    noise_kind: NoiseKind = NoiseKind.CONSTANT_DIRECTION
    noise_class: NoiseClass = NoiseClass.K2
    deltas: Tuple[float, ...] = (0.0, 0.01, 0.02, 0.05, 0.1)
    eta_shift: float = Field(0.0, ge=-1.0, le=1.0)
    n: int = Field(2**13, ge=1)
    p: float = Field(2.0, ge=2.0)
    M: int = Field(50, ge=2)
    sup_refinement: int = Field(1, ge=1)

    @field_validator("deltas", mode="before")
    @classmethod
    def split_deltas(cls, value: Any) -> Any:
        return _split_list(value)

    @field_validator("deltas")
    @classmethod
    def nonnegative_deltas(cls, value: Tuple[float, ...]) -> Tuple[float, ...]:
        if not value or any(d < 0.0 for d in value):
            raise ValueError("deltas must be a nonempty list of nonnegative numbers")
        return value


class StabilityConfig(RunSettings):
    """[stability]: verdict raster over a rectangle of the complex plane."""
    mode: StabilityMode = StabilityMode.EXPLICIT
    h: float = Field(0.1, gt=0.0)
    steps: int = Field(2000, ge=1)
    paths: int = Field(100, ge=1)
    blowup: float = DEFAULT_BLOWUP
    decay: float = DEFAULT_DECAY
    re_min: float = -4.0
    re_max: float = 1.0
    im_min: float = -2.0
    im_max: float = 2.0
    n_re: int = Field(50, ge=2)
    n_im: int = Field(50, ge=2)
    plane: Plane = Plane.LAMBDA

    @model_validator(mode="after")
    def grid_and_thresholds(self) -> "StabilityConfig":
        if not self.blowup > 1.0 > self.decay > 0.0:
            raise ValueError("thresholds need blowup > 1 > decay > 0")
        if not (self.re_min < self.re_max and self.im_min < self.im_max):
            raise ValueError("grid rectangle must have positive extent")
        return self


class ValidateConfig(SolverSettings):
    """[validate]: a-priori bound suite over fixtures x schemes x deltas."""
    fixtures: Tuple[str, ...] = ("linear", "holder(0.25)", "holder(1)", "state(2)", "adversarial(0.1)")
    schemes: Tuple[SchemeTag, ...] = (SchemeTag.EXPLICIT_RAND, SchemeTag.IMPLICIT_RAND)
    noise_kind: NoiseKind = NoiseKind.CONSTANT_DIRECTION
    deltas: Tuple[float, ...] = (0.0, 0.01, 0.1)
    n: int = Field(64, ge=1)
    M: int = Field(100, ge=1)
    assumption_samples: int = Field(2000, ge=1)

    @field_validator("fixtures", "schemes", "deltas", mode="before")
    @classmethod
    def split_lists(cls, value: Any) -> Any:
        return _split_list(value)


class DemoLowerBoundConfig(SolverSettings):
    """[demo-lower-bound]: the two adversarial problems under cancelling noise."""
    deltas: Tuple[float, ...] = (0.01, 0.05, 0.1)
    n: int = Field(64, ge=3)
    sup_refinement: int = Field(8, ge=1)

    @field_validator("deltas", mode="before")
    @classmethod
    def split_deltas(cls, value: Any) -> Any:
        return _split_list(value)

    @field_validator("deltas")
    @classmethod
    def unit_interval_deltas(cls, value: Tuple[float, ...]) -> Tuple[float, ...]:
        if not value or any(not 0.0 < d <= 1.0 for d in value):
            raise ValueError("deltas must lie in (0, 1]")
        return value


class PlotConfig(RunSettings):
    """[plot]: gnuplot script for the CSV artifacts in `out`."""
    terminal: str = "pngcairo"


CONFIG_MODELS: Dict[str, Type[RunSettings]] = {
    "convergence": ConvergenceConfig,
    "noise-sweep": NoiseSweepConfig,
    "stability": StabilityConfig,
    "validate": ValidateConfig,
    "demo-lower-bound": DemoLowerBoundConfig,
    "plot": PlotConfig,
}


def read_config_file(path: Path, command: str) -> Dict[str, str]:
    """
    Keys of the [command] section of a config file.

    Raises:
        ConfigurationError: If the file cannot be read or parsed
    """
    parser = configparser.ConfigParser(interpolation=None)
    parser.optionxform = str  # keep key case (K, L, M)
    try:
        with open(path, encoding="utf-8") as fh:
            parser.read_file(fh)
    except (OSError, configparser.Error) as exc:
        raise ConfigurationError(f"cannot read config file {path}: {exc}")
    if not parser.has_section(command):
        return {}
    return dict(parser.items(command))


def build_config(command: str, values: Mapping[str, Any]) -> RunSettings:
    """
    Validate raw key/value pairs into the command's config model.

    Raises:
        ConfigurationError: On unknown commands, unknown keys or out-of-range values
    """
    model = CONFIG_MODELS.get(command)
    if model is None:
        raise ConfigurationError(f"unknown command '{command}'")
    try:
        return model.model_validate(dict(values))
    except ValidationError as exc:
        problems = "; ".join(
            f"{'.'.join(str(part) for part in err['loc']) or 'config'}: {err['msg']}" for err in exc.errors()
        )
        raise ConfigurationError(f"invalid [{command}] config: {problems}")


def load_config(command: str, path: Optional[Path] = None, overrides: Optional[Mapping[str, Any]] = None) -> RunSettings:
    """File values first, then command-line overrides, validated together."""
    values: Dict[str, Any] = read_config_file(path, command) if path is not None else {}
    values.update(overrides or {})
    return build_config(command, values)


def _format_value(value: Any) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return repr(value)
    if isinstance(value, tuple):
        return ", ".join(_format_value(item) for item in value)
    if hasattr(value, "value"):
        return str(value.value)
    return str(value)


def to_config_text(command: str, cfg: RunSettings) -> str:
    """Serialise a config to the file format; parsing the text gives back an equal config."""
    lines = [f"[{command}]"]
    for name in type(cfg).model_fields:
        lines.append(f"{name} = {_format_value(getattr(cfg, name))}")
    return "\n".join(lines) + "\n"


def provenance(cfg: RunSettings) -> Dict[str, Any]:
    """Resolved config as recorded in JSON artifacts."""
    return cfg.model_dump(mode="json", exclude=set(RUNTIME_ONLY_KEYS))
