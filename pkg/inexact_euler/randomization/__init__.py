"""Reproducible per-path random streams."""

from inexact_euler.randomization.streams import StreamSpec, draw_uniforms, split_for_path

__all__ = ["StreamSpec", "draw_uniforms", "split_for_path"]
