"""Stability verdicts over a rectangle of the complex plane."""

import logging
from dataclasses import dataclass
from typing import Any, Dict, List, Sequence

import numpy as np

from inexact_euler.analysis import map_paths
from inexact_euler.enums import Plane, StabilityMode, Verdict
from inexact_euler.exceptions import DomainError
from inexact_euler.stability.classify import (
    DEFAULT_BLOWUP,
    DEFAULT_DECAY,
    StabilityQuery,
    StabilityVerdict,
    classify,
    draw_stability_taus,
)

logger = logging.getLogger(__name__)

# graymap levels
PGM_STABLE = 255
PGM_INCONCLUSIVE = 128
PGM_UNSTABLE = 0
_PGM_LEVEL = {
    Verdict.STABLE: PGM_STABLE,
    Verdict.INCONCLUSIVE: PGM_INCONCLUSIVE,
    Verdict.UNSTABLE: PGM_UNSTABLE,
}


@dataclass(frozen=True)
class GridSpec:
    """Closed rectangle [re_min, re_max] x [im_min, im_max] sampled n_re x n_im times."""
    re_min: float
    re_max: float
    im_min: float
    im_max: float
    n_re: int
    n_im: int

    def __post_init__(self):
        if self.n_re < 2 or self.n_im < 2:
            raise DomainError(f"grid resolution must be at least 2x2, got {self.n_re}x{self.n_im}")
        if not (self.re_min < self.re_max and self.im_min < self.im_max):
            raise DomainError("grid rectangle must have positive extent")

    def points(self) -> List[complex]:
        """Grid points, imaginary part ascending, then real part ascending."""
        res = np.linspace(self.re_min, self.re_max, self.n_re)
        ims = np.linspace(self.im_min, self.im_max, self.n_im)
        return [complex(float(re), float(im)) for im in ims for re in res]

    def to_dict(self) -> Dict[str, Any]:
        """Convert to dictionary representation."""
        return {
            "reMin": self.re_min,
            "reMax": self.re_max,
            "imMin": self.im_min,
            "imMax": self.im_max,
            "nRe": self.n_re,
            "nIm": self.n_im,
        }


@dataclass(frozen=True)
class RasterCell:
    """
    One grid point.

    Attributes:
        coordinate: Grid coordinate (lambda or h^2 lambda, depending on the plane)
        lam: lambda passed to the classifier
        verdict: Randomized (or requested) mode verdict
        deterministic: Verdict of the deterministic counterpart
    """
    coordinate: complex
    lam: complex
    verdict: StabilityVerdict
    deterministic: StabilityVerdict

    @property
    def det_agrees(self) -> bool:
        return self.verdict.triple == self.deterministic.triple

    @property
    def on_nonnegative_real_axis(self) -> bool:
        return self.lam.imag == 0.0 and self.lam.real >= 0.0


@dataclass(frozen=True)
class Raster:
    """Cells of a stability raster plus the parameters that produced them."""
    mode: StabilityMode
    plane: Plane
    grid: GridSpec
    h: float
    steps: int
    paths: int
    cells: Sequence[RasterCell]

    def stable_fraction(self, notion: str, exclude_nonnegative_real: bool = True) -> float:
        """
        Fraction of cells with verdict Stable for notion 'ms', 'as' or 'sp'.

        Cells on the nonnegative real axis are excluded by default.
        """
        index = {"ms": 0, "as": 1, "sp": 2}[notion]
        cells = [c for c in self.cells if not (exclude_nonnegative_real and c.on_nonnegative_real_axis)]
        if not cells:
            return float("nan")
        return sum(1 for c in cells if c.verdict.triple[index] is Verdict.STABLE) / len(cells)

    @property
    def det_agreement(self) -> float:
        return sum(1 for c in self.cells if c.det_agrees) / len(self.cells)

    def summary(self) -> Dict[str, Any]:
        """Summary written next to the raster."""
        excluded = sum(1 for c in self.cells if c.on_nonnegative_real_axis)
        return {
            "mode": self.mode.value,
            "plane": self.plane.value,
            "grid": self.grid.to_dict(),
            "h": self.h,
            "steps": self.steps,
            "paths": self.paths,
            "cells": len(self.cells),
            "cellsOnNonnegativeRealAxis": excluded,
            "stableFraction": {n: self.stable_fraction(n) for n in ("ms", "as", "sp")},
            "detAgreement": self.det_agreement,
        }

    def csv_rows(self) -> List[List[Any]]:
        """One row per cell: re, im, ms, as, sp, det_agrees."""
        return [
            [c.coordinate.real, c.coordinate.imag, *(v.value for v in c.verdict.triple), int(c.det_agrees)]
            for c in self.cells
        ]

    def to_pgm(self) -> str:
        """
        Plain (P2) graymap of the MS verdicts.

        The top row holds the largest imaginary part; white is Stable, gray
        Inconclusive and black Unstable.
        """
        rows = []
        for i in reversed(range(self.grid.n_im)):
            row = self.cells[i * self.grid.n_re:(i + 1) * self.grid.n_re]
            rows.append(" ".join(str(_PGM_LEVEL[c.verdict.ms_stable]) for c in row))
        header = f"P2\n{self.grid.n_re} {self.grid.n_im}\n{PGM_STABLE}\n"
        return header + "\n".join(rows) + "\n"


def raster_region(
    mode: StabilityMode,
    grid: GridSpec,
    h: float,
    K: int,
    M: int,
    seed: int = 0,
    plane: Plane = Plane.LAMBDA,
    blowup: float = DEFAULT_BLOWUP,
    decay: float = DEFAULT_DECAY,
    threads: int = 1,
) -> Raster:
    """
    Classify every grid point and its deterministic counterpart.

    All cells share one (M, K) tau matrix, so verdicts depend only on
    (cell, seed).

    Args:
        mode: Recurrence to classify
        grid: Rectangle and resolution
        h: Step size
        K: Horizon
        M: Paths per cell
        seed: Master seed
        plane: LAMBDA classifies the grid points; H2LAMBDA reads them as h^2 lambda
        blowup: Blow-up threshold
        decay: Decay threshold
        threads: Worker threads over cells

    Returns:
        Raster
    """
    points = grid.points()
    taus = None if mode.is_deterministic else draw_stability_taus(seed, M, K)
    counterpart = mode.deterministic_counterpart

    def one_cell(index: int) -> RasterCell:
        coordinate = points[index]
        lam = coordinate / h**2 if plane is Plane.H2LAMBDA else coordinate
        q = StabilityQuery(lam=lam, h=h, steps=K, paths=M, blowup=blowup, decay=decay, mode=mode)
        verdict = classify(q, seed, taus)
        deterministic = verdict if mode is counterpart else classify(q.with_mode(counterpart, paths=1), seed)
        return RasterCell(coordinate=coordinate, lam=complex(lam), verdict=verdict, deterministic=deterministic)

    logger.info("classifying %d cells (%s, h=%g, K=%d, M=%d)", len(points), mode.value, h, K, M)
    cells = map_paths(one_cell, len(points), threads)
    return Raster(mode=mode, plane=plane, grid=grid, h=h, steps=K, paths=M, cells=cells)
