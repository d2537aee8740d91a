"""Command-line front end."""

from inexact_euler.cli.config import (
    CONFIG_MODELS,
    ConvergenceConfig,
    DemoLowerBoundConfig,
    NoiseSweepConfig,
    PlotConfig,
    RunSettings,
    StabilityConfig,
    ValidateConfig,
    load_config,
    to_config_text,
)
from inexact_euler.cli.main import main

__all__ = [
    "CONFIG_MODELS",
    "ConvergenceConfig",
    "DemoLowerBoundConfig",
    "NoiseSweepConfig",
    "PlotConfig",
    "RunSettings",
    "StabilityConfig",
    "ValidateConfig",
    "load_config",
    "main",
    "to_config_text",
]
