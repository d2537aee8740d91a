"""Tests for configuration, artifact writers and the command line."""

import io
import json
import math
import tempfile
import unittest
from contextlib import redirect_stderr, redirect_stdout
from pathlib import Path

from inexact_euler.cli import main
from inexact_euler.cli.config import (
    ConvergenceConfig,
    build_config,
    load_config,
    provenance,
    read_config_file,
    to_config_text,
)
from inexact_euler.cli.main import parse_overrides
from inexact_euler.cli.output import format_cell
from inexact_euler.enums import SchemeTag
from inexact_euler.exceptions import ConfigurationError
from inexact_euler.problems import resolve_fixture

TINY_STABILITY = ["--steps", "30", "--paths", "8", "--n-re", "3", "--n-im", "3", "--log-level", "ERROR"]


def run(argv):
    """Run the CLI, returning (exit code, stdout, stderr)."""
    out, err = io.StringIO(), io.StringIO()
    with redirect_stdout(out), redirect_stderr(err):
        code = main(argv)
    return code, out.getvalue(), err.getvalue()


class TestConfig(unittest.TestCase):
    """Test config models and files."""

    def test_defaults(self):
        """Defaults of the convergence experiment."""
        cfg = load_config("convergence")
        self.assertIsInstance(cfg, ConvergenceConfig)
        self.assertEqual(cfg.fixture, "holder(0.25)")
        self.assertEqual(cfg.n_list, tuple(2**k for k in range(6, 14)))
        self.assertEqual(cfg.M, 200)
        self.assertEqual(cfg.scheme, SchemeTag.EXPLICIT_RAND)

    def test_text_round_trip(self):
        """Serialising and re-reading a config gives an equal config."""
        with tempfile.TemporaryDirectory() as tmp:
            for command, overrides in (
                ("convergence", {"n_list": "16, 32,64", "seed": "5", "M": "3", "delta": "0.1"}),
                ("validate", {"schemes": "implicit", "deltas": "0,0.5"}),
                ("stability", {"mode": "implicit-det", "plane": "h2lambda"}),
            ):
                cfg = load_config(command, None, overrides)
                path = Path(tmp) / f"{command}.ini"
                path.write_text(to_config_text(command, cfg), encoding="utf-8")
                self.assertEqual(load_config(command, path), cfg)

    def test_fixture_list_keeps_arguments(self):
        """Commas inside a fixture's parentheses do not split the list."""
        cfg = load_config("validate", None, {"fixtures": "linear, stability(-1,0), holder(0.5)"})
        self.assertEqual(cfg.fixtures, ("linear", "stability(-1,0)", "holder(0.5)"))
        names = [resolve_fixture(name).name for name in cfg.fixtures]
        self.assertEqual(names, ["linear", "stability(-1,0)", "holder(0.5)"])
        with tempfile.TemporaryDirectory() as tmp:
            path = Path(tmp) / "validate.ini"
            path.write_text(to_config_text("validate", cfg), encoding="utf-8")
            self.assertEqual(load_config("validate", path), cfg)

    def test_missing_section(self):
        """A file without the command's section contributes nothing."""
        with tempfile.TemporaryDirectory() as tmp:
            path = Path(tmp) / "other.ini"
            path.write_text("[plot]\nterminal = svg\n", encoding="utf-8")
            self.assertEqual(read_config_file(path, "stability"), {})
            self.assertEqual(load_config("plot", path).terminal, "svg")

    def test_rejections(self):
        """Unknown keys, commands and out-of-range values are configuration errors."""
        for command, values in (
            ("plot", {"bogus": "1"}),
            ("convergence", {"M": "1"}),
            ("convergence", {"n_list": "64,128"}),
            ("convergence", {"a": "1", "b": "0"}),
            ("stability", {"blowup": "0.5"}),
            ("demo-lower-bound", {"deltas": "0,0.1"}),
            ("plot", {"seed": "-1"}),
            ("plot", {"log_level": "chatty"}),
        ):
            with self.assertRaises(ConfigurationError, msg=(command, values)) as ctx:
                build_config(command, values)
            self.assertEqual(ctx.exception.exit_code, 2)
        with self.assertRaises(ConfigurationError):
            build_config("nonsense", {})

    def test_provenance_drops_runtime_keys(self):
        """Threads, output directory and log level do not appear in provenance."""
        record = provenance(load_config("stability", None, {"threads": "3", "out": "x"}))
        for key in ("threads", "out", "log_level"):
            self.assertNotIn(key, record)
        self.assertEqual(record["mode"], "explicit")


class TestOverrides(unittest.TestCase):
    """Test command-line override parsing."""

    def test_forms(self):
        """Both --key value and --key=value, dashes mapped to underscores."""
        self.assertEqual(
            parse_overrides(["--n-list", "64,128", "--M=5", "--fixture", "state(3)"]),
            {"n_list": "64,128", "M": "5", "fixture": "state(3)"},
        )

    def test_errors(self):
        """Stray values and keys without a value are rejected."""
        with self.assertRaises(ConfigurationError):
            parse_overrides(["stray"])
        with self.assertRaises(ConfigurationError):
            parse_overrides(["--M"])
        with self.assertRaises(ConfigurationError):
            parse_overrides(["--M", "--n", "3"])


class TestFormatCell(unittest.TestCase):
    """Test CSV cell formatting."""

    def test_values(self):
        self.assertEqual(format_cell(0.1), "0.10000000000000001")
        self.assertEqual(format_cell(0.0), "0")
        self.assertEqual(format_cell(math.nan), "nan")
        self.assertEqual(format_cell(True), "true")
        self.assertEqual(format_cell(SchemeTag.IMPLICIT_RAND), "implicit")
        self.assertEqual(format_cell(64), "64")


class TestCommands(unittest.TestCase):
    """End-to-end runs of the subcommands on small inputs."""

    def setUp(self):
        self._tmp = tempfile.TemporaryDirectory()
        self.tmp = Path(self._tmp.name)

    def tearDown(self):
        self._tmp.cleanup()

    def test_stability_reproducible_across_threads(self):
        """Artifacts are byte-identical for any thread count."""
        outputs = []
        for threads in ("1", "4"):
            out = self.tmp / f"t{threads}"
            code, stdout, _ = run(["stability", "--out", str(out), "--threads", threads, *TINY_STABILITY])
            self.assertEqual(code, 0)
            self.assertEqual(len(stdout.splitlines()), 3)
            outputs.append(out)
        for name in ("stability.csv", "stability.pgm", "stability_summary.json"):
            self.assertEqual((outputs[0] / name).read_bytes(), (outputs[1] / name).read_bytes(), name)

        lines = (outputs[0] / "stability.csv").read_text(encoding="utf-8").splitlines()
        self.assertEqual(lines[0], "re,im,ms,as,sp,det_agrees")
        self.assertEqual(len(lines), 10)
        self.assertTrue((outputs[0] / "stability.pgm").read_text(encoding="utf-8").startswith("P2\n3 3\n255\n"))
        summary = json.loads((outputs[0] / "stability_summary.json").read_text(encoding="utf-8"))
        self.assertEqual(summary["command"], "stability")
        self.assertEqual(summary["cells"], 9)
        self.assertNotIn("threads", summary["config"])

    def test_numeric_commands_reproducible_across_threads(self):
        """convergence, noise-sweep and validate write the same bytes for any thread count."""
        runs = {
            "convergence": (["--fixture", "holder(0.5)", "--n-list", "8,16,32", "--M", "6"], ("convergence.csv", "order.json")),
            "noise-sweep": (["--n", "32", "--M", "6", "--deltas", "0,0.05,0.1", "--noise-kind", "state-scaled-sine"],
                            ("noisefloor.csv",)),
            "validate": (["--n", "16", "--M", "6", "--assumption-samples", "40", "--deltas", "0,0.1",
                          "--fixtures", "linear, holder(0.25), stability(-1,0.5)"], ("bounds.json",)),
        }
        for command, (args, artifacts) in runs.items():
            outputs = []
            for threads in ("1", "4"):
                out = self.tmp / f"{command}-{threads}"
                code, _, err = run([command, "--out", str(out), "--threads", threads, "--seed", "11", *args])
                self.assertEqual(code, 0, (command, err))
                outputs.append(out)
            for name in artifacts:
                self.assertEqual((outputs[0] / name).read_bytes(), (outputs[1] / name).read_bytes(), (command, name))

    def test_eta_shift(self):
        """A shifted initial value adds its propagated offset to the error."""
        base = ["--fixture", "linear", "--n-list", "8,16,32", "--M", "2", "--delta", "0.1", "--threads", "1"]
        errors = {}
        for shift in ("0", "-1"):
            out = self.tmp / f"shift{shift}"
            code, _, _ = run(["convergence", "--out", str(out), *base, f"--eta-shift={shift}"])
            self.assertEqual(code, 0)
            lines = (out / "convergence.csv").read_text(encoding="utf-8").splitlines()[1:]
            errors[shift] = [float(line.split(",")[8]) for line in lines]
        order = json.loads((self.tmp / "shift-1" / "order.json").read_text(encoding="utf-8"))
        self.assertEqual(order["config"]["eta_shift"], -1.0)
        for shifted, plain in zip(errors["-1"], errors["0"]):
            self.assertGreater(shifted, plain + 0.2)

    def test_config_file_then_cli(self):
        """Command-line values override the config file."""
        path = self.tmp / "run.ini"
        path.write_text("[stability]\nseed = 1\nn_re = 2\nn_im = 2\nsteps = 10\npaths = 4\n", encoding="utf-8")
        code, _, _ = run(["stability", "--config", str(path), "--seed", "2", "--out", str(self.tmp),
                          "--plane", "h2lambda", "--log-level", "ERROR"])
        self.assertEqual(code, 0)
        summary = json.loads((self.tmp / "stability_summary.json").read_text(encoding="utf-8"))
        self.assertEqual(summary["config"]["seed"], 2)
        self.assertEqual(summary["config"]["n_re"], 2)
        self.assertEqual(summary["plane"], "h2lambda")

    def test_convergence(self):
        """The explicit scheme on z' = z converges with order about one."""
        code, _, _ = run(["convergence", "--out", str(self.tmp), "--fixture", "linear",
                          "--n-list", "8,16,32,64", "--M", "2", "--threads", "1"])
        self.assertEqual(code, 0)
        order = json.loads((self.tmp / "order.json").read_text(encoding="utf-8"))
        self.assertGreater(order["fitted_order"], 0.85)
        self.assertLess(order["fitted_order"], 1.1)
        self.assertEqual(order["theoretical_order"], 1.0)
        self.assertEqual(order["config"]["n_list"], [8, 16, 32, 64])
        lines = (self.tmp / "convergence.csv").read_text(encoding="utf-8").splitlines()
        self.assertEqual(lines[0], "scheme,fixture,rho,delta,n,h,p,M,error,std_error")
        self.assertTrue(lines[1].startswith("explicit,linear,1,0,8,0.125,2,2,"))

    def test_noise_sweep(self):
        """The zero-precision row has no error/delta ratio."""
        code, _, _ = run(["noise-sweep", "--out", str(self.tmp), "--n", "64", "--M", "2", "--deltas", "0,0.1"])
        self.assertEqual(code, 0)
        lines = (self.tmp / "noisefloor.csv").read_text(encoding="utf-8").splitlines()
        self.assertEqual(lines[0], "delta,error,error_over_delta,lower_bound")
        self.assertEqual(len(lines), 3)
        self.assertTrue(lines[1].startswith("0,"))
        self.assertIn(",nan,", lines[1])
        ratio = float(lines[2].split(",")[2])
        self.assertGreaterEqual(ratio, 1.0)

    def test_validate_passes(self):
        """The default fixtures respect every bound."""
        code, _, err = run(["validate", "--out", str(self.tmp), "--n", "16", "--M", "3",
                            "--assumption-samples", "50", "--deltas", "0,0.1"])
        self.assertEqual(code, 0, err)
        payload = json.loads((self.tmp / "bounds.json").read_text(encoding="utf-8"))
        self.assertTrue(payload["passed"])
        self.assertEqual(payload["violations"], [])
        self.assertEqual(len(payload["reports"]), 5 * 2 * 2)
        self.assertEqual(len(payload["assumptions"]), 5)

    def test_demo_lower_bound(self):
        """Both schemes stay at least (b - a) delta away from one of the two problems."""
        code, _, _ = run(["demo-lower-bound", "--out", str(self.tmp), "--n", "16", "--deltas", "0.05,0.1"])
        self.assertEqual(code, 0)
        payload = json.loads((self.tmp / "lowerbound.json").read_text(encoding="utf-8"))
        self.assertTrue(payload["passed"])
        self.assertEqual(len(payload["rows"]), 4)
        for row in payload["rows"]:
            self.assertGreaterEqual(row["max_error"], row["lower_bound"] * (1.0 - 1e-9))
            self.assertTrue(row["constant_output"])
            self.assertAlmostEqual(row["error_plus"], row["delta"], places=12)

    def test_plot(self):
        """plot writes a gnuplot script for the chosen terminal."""
        code, stdout, _ = run(["plot", "--out", str(self.tmp), "--terminal", "svg"])
        self.assertEqual(code, 0)
        script = (self.tmp / "plots.gp").read_text(encoding="utf-8")
        self.assertIn("set terminal svg", script)
        self.assertIn('"convergence.csv"', script)
        self.assertEqual(stdout.strip(), str(self.tmp / "plots.gp"))

    def test_unknown_key_exits_2(self):
        """Unknown keys fail before anything is written."""
        code, _, err = run(["plot", "--out", str(self.tmp), "--bogus", "1"])
        self.assertEqual(code, 2)
        self.assertIn("errorCode", err)
        self.assertFalse((self.tmp / "plots.gp").exists())

    def test_precondition_exits_3(self):
        """Implicit runs with too large a step size stop with exit code 3."""
        code, _, err = run(["convergence", "--out", str(self.tmp), "--fixture", "linear", "--scheme", "implicit",
                            "--n-list", "2,4,8", "--M", "2"])
        self.assertEqual(code, 3)
        self.assertIn("h(K+1)", err)

    def test_force_downgrades_precondition(self):
        """--force turns the precondition failure into a warning."""
        code, _, _ = run(["convergence", "--out", str(self.tmp), "--fixture", "linear", "--scheme", "implicit",
                          "--n-list", "2,4,8", "--M", "2", "--force", "--log-level", "ERROR"])
        self.assertEqual(code, 0)


if __name__ == "__main__":
    unittest.main()
