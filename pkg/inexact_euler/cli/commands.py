"""Subcommand implementations. Each returns the paths it wrote."""

import logging
from pathlib import Path
from typing import List, Sequence, Tuple

import numpy as np

from inexact_euler.analysis import (
    ReferenceSolution,
    check_assumptions,
    estimate_error,
    fit_order,
    noise_floor_sweep,
    simulate_path,
    theoretical_order,
    validate_bounds,
)
from inexact_euler.cli.config import (
    ConvergenceConfig,
    DemoLowerBoundConfig,
    NoiseSweepConfig,
    PlotConfig,
    SolverSettings,
    StabilityConfig,
    ValidateConfig,
    provenance,
)
from inexact_euler.cli.output import columns, with_provenance, write_csv, write_json, write_text
from inexact_euler.core import dense_grid, row_one_norms
from inexact_euler.enums import NoiseClass, NoiseKind, SchemeTag
from inexact_euler.exceptions import BoundViolationError
from inexact_euler.noise import NoiseModel, NoiseModelBuilder, PerturbedProblem
from inexact_euler.problems import adversarial_pair, resolve_fixture
from inexact_euler.schemes import ImplicitSolverConfig
from inexact_euler.stability import GridSpec, raster_region

logger = logging.getLogger(__name__)

CONVERGENCE_COLUMNS = ("scheme", "fixture", "rho", "delta", "n", "h", "p", "M", "error", "std_error")
NOISE_FLOOR_COLUMNS = ("delta", "error", "error_over_delta", "lower_bound")
STABILITY_COLUMNS = ("re", "im", "ms", "as", "sp", "det_agrees")
LOWER_BOUND_COLUMNS = ("delta", "scheme", "error_plus", "error_minus", "max_error", "lower_bound", "constant_output")
# equality of the lower-bound demo holds up to rounding in the mesh accumulation
LOWER_BOUND_RTOL = 1e-9


def _solver(cfg: SolverSettings) -> ImplicitSolverConfig:
    return ImplicitSolverConfig(
        fp_tolerance=cfg.fp_tolerance,
        max_iterations=cfg.max_iterations,
        predictor=cfg.predictor,
        force=cfg.force,
    )


def _noise(kind: NoiseKind, class_tag: NoiseClass, delta: float, eta_shift: float = 0.0, d: int = 1) -> NoiseModel:
    builder = NoiseModelBuilder().with_delta(delta).with_class(class_tag).with_kind(kind)
    if eta_shift:
        builder.with_eta_shift(eta_shift, d)
    return builder.build()


def cmd_convergence(cfg: ConvergenceConfig) -> List[Path]:
    """
    Error against n for one fixture, scheme and delta, plus the fitted order.

    Writes convergence.csv and order.json.
    """
    out = Path(cfg.out)
    problem = resolve_fixture(cfg.fixture, cfg.a, cfg.b, cfg.K, cfg.L)
    noise = _noise(cfg.noise_kind, cfg.noise_class, cfg.delta, cfg.eta_shift, problem.d)
    solver = _solver(cfg)
    reference = ReferenceSolution(problem, finest_n=max(cfg.n_list))

    rows = []
    for n in cfg.n_list:
        estimate = estimate_error(
            problem, noise, cfg.scheme, n, cfg.M, cfg.p, cfg.seed, cfg.sup_refinement, solver, cfg.threads, reference
        )
        logger.info("convergence n=%d: error %.6e", n, estimate.value)
        rows.append({
            "scheme": cfg.scheme,
            "fixture": cfg.fixture,
            "rho": problem.rho,
            "delta": cfg.delta,
            "n": n,
            "h": problem.length / n,
            "p": cfg.p,
            "M": cfg.M,
            "error": estimate.value,
            "std_error": estimate.std_error,
        })

    fit = fit_order([(row["n"], row["error"]) for row in rows])
    order = {
        "fitted_order": fit.fitted_order,
        "r_squared": fit.r_squared,
        "intercept": fit.intercept,
        "theoretical_order": theoretical_order(problem.rho),
        "points": [[n, e] for n, e in fit.points],
    }
    return [
        write_csv(out / "convergence.csv", CONVERGENCE_COLUMNS, columns(rows, CONVERGENCE_COLUMNS)),
        write_json(out / "order.json", with_provenance(order, provenance(cfg), "convergence")),
    ]


def cmd_noise_sweep(cfg: NoiseSweepConfig) -> List[Path]:
    """Error against delta at fixed n. Writes noisefloor.csv."""
    problem = resolve_fixture(cfg.fixture, cfg.a, cfg.b, cfg.K, cfg.L)
    # built at delta = 1 so the eta shift scales with every row
    template = _noise(cfg.noise_kind, cfg.noise_class, 1.0, cfg.eta_shift, problem.d)
    sweep = noise_floor_sweep(
        problem, template, cfg.scheme, cfg.n, cfg.deltas, cfg.M, cfg.seed,
        cfg.p, cfg.sup_refinement, _solver(cfg), cfg.threads,
    )
    rows = [[row.delta, row.estimate.value, row.error_over_delta, row.lower_bound] for row in sweep]
    return [write_csv(Path(cfg.out) / "noisefloor.csv", NOISE_FLOOR_COLUMNS, rows)]


def cmd_stability(cfg: StabilityConfig) -> List[Path]:
    """Verdict raster. Writes stability.csv, stability.pgm and stability_summary.json."""
    out = Path(cfg.out)
    grid = GridSpec(cfg.re_min, cfg.re_max, cfg.im_min, cfg.im_max, cfg.n_re, cfg.n_im)
    raster = raster_region(
        cfg.mode, grid, cfg.h, cfg.steps, cfg.paths, cfg.seed, cfg.plane, cfg.blowup, cfg.decay, cfg.threads
    )
    summary = raster.summary()
    logger.info(
        "stability %s: MS stable fraction %.3f, deterministic agreement %.3f",
        cfg.mode.value, summary["stableFraction"]["ms"], summary["detAgreement"],
    )
    return [
        write_csv(out / "stability.csv", STABILITY_COLUMNS, raster.csv_rows()),
        write_text(out / "stability.pgm", raster.to_pgm()),
        write_json(out / "stability_summary.json", with_provenance(summary, provenance(cfg), "stability")),
    ]


def cmd_validate(cfg: ValidateConfig) -> List[Path]:
    """
    Bound suite over fixtures x schemes x deltas. Writes bounds.json.

    Raises:
        BoundViolationError: After writing bounds.json, if any bound failed
    """
    solver = _solver(cfg)
    reports, assumptions = [], []
    for name in cfg.fixtures:
        problem = resolve_fixture(name, cfg.a, cfg.b, cfg.K, cfg.L)
        assumptions.append({"fixture": name, **check_assumptions(problem, cfg.assumption_samples, cfg.seed).to_dict()})
        for scheme in cfg.schemes:
            for delta in cfg.deltas:
                noise = _noise(cfg.noise_kind, NoiseClass.K2, delta)
                report = validate_bounds(problem, noise, scheme, cfg.n, cfg.M, cfg.seed, solver, cfg.threads)
                reports.append({"fixture": name, **report.to_dict()})

    failed = [
        f"{r['fixture']}/{r['scheme']}/delta={r['delta']:g}/{c['name']}"
        for r in reports for c in r["checks"] if not c["passed"]
    ]
    payload = {"reports": reports, "assumptions": assumptions, "violations": failed, "passed": not failed}
    path = write_json(Path(cfg.out) / "bounds.json", with_provenance(payload, provenance(cfg), "validate"))
    if failed:
        raise BoundViolationError(bounds=", ".join(failed), data={"path": str(path)})
    return [path]


def _sup_error(pp: PerturbedProblem, n: int, scheme: SchemeTag, cfg: DemoLowerBoundConfig) -> Tuple[float, bool]:
    traj = simulate_path(pp, n, scheme, cfg.seed, 0, _solver(cfg))
    ts, values = dense_grid(traj, cfg.sup_refinement)
    error = float(np.max(row_one_norms(pp.base.exact(ts) - values)))
    constant = bool(np.all(traj.values == pp.eta_tilde))
    return error, constant


def cmd_demo_lower_bound(cfg: DemoLowerBoundConfig) -> List[Path]:
    """
    Both adversarial problems through both schemes under cancelling noise.

    Writes lowerbound.csv and lowerbound.json.

    Raises:
        BoundViolationError: If a reported max error falls below (b - a) delta
    """
    rows = []
    for delta in cfg.deltas:
        plus, minus, (noise_plus, noise_minus) = adversarial_pair(delta, cfg.a, cfg.b)
        for scheme in (SchemeTag.EXPLICIT_RAND, SchemeTag.IMPLICIT_RAND):
            error_plus, constant_plus = _sup_error(PerturbedProblem(plus, noise_plus), cfg.n, scheme, cfg)
            error_minus, constant_minus = _sup_error(PerturbedProblem(minus, noise_minus), cfg.n, scheme, cfg)
            rows.append({
                "delta": delta,
                "scheme": scheme,
                "error_plus": error_plus,
                "error_minus": error_minus,
                "max_error": max(error_plus, error_minus),
                "lower_bound": (cfg.b - cfg.a) * delta,
                "constant_output": constant_plus and constant_minus,
            })

    short = [
        f"{row['scheme'].value}/delta={row['delta']:g}"
        for row in rows if row["max_error"] < row["lower_bound"] * (1.0 - LOWER_BOUND_RTOL)
    ]
    payload = {
        "rows": [{k: (v.value if isinstance(v, SchemeTag) else v) for k, v in row.items()} for row in rows],
        "passed": not short,
    }
    out = Path(cfg.out)
    paths = [
        write_csv(out / "lowerbound.csv", LOWER_BOUND_COLUMNS, columns(rows, LOWER_BOUND_COLUMNS)),
        write_json(out / "lowerbound.json", with_provenance(payload, provenance(cfg), "demo-lower-bound")),
    ]
    if short:
        raise BoundViolationError(bounds=", ".join(short), data={"path": str(paths[1])})
    return paths


GNUPLOT_TEMPLATE = """\
# Plots the CSV artifacts of this directory: gnuplot {script}
set datafile separator ","
set terminal {terminal}
set key autotitle columnhead

set output "convergence.png"
set logscale xy
set xlabel "n"
set ylabel "L^p sup-norm error"
plot "convergence.csv" using 5:9:10 with yerrorlines title "error"
unset logscale

set output "noisefloor.png"
set xlabel "delta"
set ylabel "error"
plot "noisefloor.csv" using 1:2 with linespoints title "error", \\
     "" using 1:4 with lines title "(b-a) delta"

set output "stability.png"
unset key
set xlabel "Re"
set ylabel "Im"
set cbrange [0:1]
set palette defined (0 "black", 0.5 "gray", 1 "white")
plot "stability.csv" using 1:2:(strcol(3) eq "stable" ? 1 : (strcol(3) eq "unstable" ? 0 : 0.5)) with points pt 5 palette
"""


def cmd_plot(cfg: PlotConfig) -> List[Path]:
    """Writes plots.gp, a gnuplot script for the artifacts in `out`."""
    script = "plots.gp"
    text = GNUPLOT_TEMPLATE.format(script=script, terminal=cfg.terminal)
    return [write_text(Path(cfg.out) / script, text)]


COMMANDS = {
    "convergence": cmd_convergence,
    "noise-sweep": cmd_noise_sweep,
    "stability": cmd_stability,
    "validate": cmd_validate,
    "demo-lower-bound": cmd_demo_lower_bound,
    "plot": cmd_plot,
}


def run_command(command: str, cfg) -> Sequence[Path]:
    return COMMANDS[command](cfg)
