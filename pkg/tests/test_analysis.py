"""Tests for error estimation, order fitting, noise sweeps, bound and assumption checks."""

import math
import unittest

import numpy as np

from inexact_euler.analysis import (
    ReferenceSolution,
    check_assumptions,
    check_scheme_noise,
    estimate_error,
    fit_order,
    lp_statistics,
    noise_floor_sweep,
    reference_solution,
    simulate_path,
    theoretical_order,
    validate_bounds,
)
from inexact_euler.core import ProblemSpecBuilder, compute_class_constants
from inexact_euler.enums import NoiseClass, NoiseKind, SchemeTag
from inexact_euler.exceptions import ConfigurationError, DivergenceError, DomainError
from inexact_euler.noise import NoiseModelBuilder, PerturbedProblem, zero_noise
from inexact_euler.problems import (
    adversarial_pair,
    holder_time_probe,
    linear_autonomous,
    lipschitz_state_probe,
)


def _fast_growth_problem():
    """z' = 10 z declared with K = L = 1: violates its own class."""
    return (
        ProblemSpecBuilder()
        .with_name("misdeclared")
        .with_interval(0.0, 1.0)
        .with_initial_value(1.0)
        .with_rhs(lambda t, y: 10.0 * y)
        .with_constants(1.0, 1.0)
        .build()
    )


class TestOrderFit(unittest.TestCase):
    """Test log-log regression."""

    def test_exact_power_law(self):
        """A pure power law is recovered exactly."""
        points = [(n, 3.0 * n**-0.75) for n in (64, 128, 256, 512)]
        fit = fit_order(points)
        self.assertAlmostEqual(fit.fitted_order, 0.75, places=12)
        self.assertAlmostEqual(fit.intercept, math.log(3.0), places=10)
        self.assertAlmostEqual(fit.r_squared, 1.0, places=12)
        self.assertEqual(fit.to_dict()["points"][0], [64, 3.0 * 64**-0.75])

    def test_needs_three_positive_points(self):
        """Too few points or nonpositive errors are rejected."""
        with self.assertRaises(DomainError):
            fit_order([(10, 0.1), (20, 0.05)])
        with self.assertRaises(DomainError):
            fit_order([(10, 0.1), (20, 0.0), (40, 0.02)])
        fit = fit_order([(10, 0.1), (20, 0.0), (40, 0.025), (80, 0.0125)], drop_nonpositive=True)
        self.assertEqual(len(fit.points), 3)

    def test_theoretical_order(self):
        """min(rho + 1/2, 1)."""
        self.assertEqual(theoretical_order(0.25), 0.75)
        self.assertEqual(theoretical_order(0.5), 1.0)
        self.assertEqual(theoretical_order(1.0), 1.0)


class TestLpStatistics(unittest.TestCase):
    """Test the plug-in L^p estimate."""

    def test_values(self):
        """((1/M) sum sup^p)^(1/p) with a zero standard error for constant suprema."""
        value, se = lp_statistics(np.array([2.0, 2.0, 2.0]), 2.0)
        self.assertEqual((value, se), (2.0, 0.0))
        value, se = lp_statistics(np.array([1.0, 2.0]), 2.0)
        self.assertAlmostEqual(value, math.sqrt(2.5))
        self.assertGreater(se, 0.0)

    def test_zero_error(self):
        """All-zero suprema give zero error and zero standard error."""
        self.assertEqual(lp_statistics(np.zeros(4), 3.0), (0.0, 0.0))

    def test_power_mean_order(self):
        """A larger exponent never gives a smaller norm of the same suprema."""
        rng = np.random.default_rng(8)
        for _ in range(20):
            sups = rng.exponential(size=int(rng.integers(2, 50)))
            norms = [lp_statistics(sups, p)[0] for p in (2.0, 3.0, 4.0, 8.0)]
            for lower, higher in zip(norms, norms[1:]):
                self.assertGreaterEqual(higher, lower * (1.0 - 1e-12))
            self.assertLessEqual(norms[-1], float(np.max(sups)) * (1.0 + 1e-12))


class TestReference(unittest.TestCase):
    """Test reference solutions."""

    def test_analytic_passthrough(self):
        """Problems with an exact solution are not integrated."""
        ref = ReferenceSolution(linear_autonomous())
        self.assertIsNone(ref.steps)
        np.testing.assert_allclose(ref([0.0, 1.0])[:, 0], [1.0, math.e])

    def test_rk4_reference(self):
        """The RK4 reference passes its doubling check and starts at eta."""
        p = lipschitz_state_probe(d=2)
        ref = ReferenceSolution(p, finest_n=16)
        self.assertEqual(ref.steps, 16 * 64)
        self.assertLess(ref.self_check_difference, 1e-10)
        np.testing.assert_allclose(ref([0.0])[0], p.eta, atol=1e-15)
        self.assertTrue(np.all(np.diff(ref(np.linspace(0.0, 1.0, 11))[:, 0]) > 0.0))

    def test_rk4_against_analytic(self):
        """RK4 reproduces an exact solution when forced to integrate."""
        base = linear_autonomous()
        stripped = (ProblemSpecBuilder().with_interval(0.0, 1.0).with_initial_value(1.0)
                    .with_rhs(base.rhs).with_constants(1.0, 1.0).build())
        values = reference_solution(stripped, [0.25, 0.5, 1.0], finest_n=8)
        np.testing.assert_allclose(values[:, 0], np.exp([0.25, 0.5, 1.0]), rtol=1e-10)

    def test_grid_checks(self):
        """Grids must be ascending and inside [a, b]."""
        p = linear_autonomous()
        with self.assertRaises(DomainError):
            reference_solution(p, [0.5, 0.25])
        with self.assertRaises(DomainError):
            reference_solution(p, [0.5, 1.5])


class TestEstimateError(unittest.TestCase):
    """Test Monte-Carlo error estimation."""

    def test_sup_grid_refinement(self):
        """The estimate settles by refinement 8 and grows on nested grids."""
        noise = NoiseModelBuilder.constant_direction(0.01).build()
        for p in (linear_autonomous(), holder_time_probe(0.25), holder_time_probe(1.0), lipschitz_state_probe(d=2)):
            coarse, fine, nested = (
                estimate_error(p, noise, SchemeTag.EXPLICIT_RAND, 64, M=8, seed=3, sup_refinement=r).value
                for r in (8, 16, 17)
            )
            self.assertLess(abs(fine - coarse), 0.01 * coarse, p.name)
            # 17 interior points split each step into 18 parts, a refinement of the 9 parts at 8
            self.assertGreaterEqual(nested, coarse, p.name)

    def test_linear_order_one(self):
        """The explicit scheme on z' = z converges with order 1."""
        p = linear_autonomous()
        noise = zero_noise(0.0)
        points = [(n, estimate_error(p, noise, SchemeTag.EXPLICIT_RAND, n, M=2, seed=1).value)
                  for n in (16, 32, 64, 128, 256)]
        fit = fit_order(points)
        self.assertGreater(fit.fitted_order, 0.95)
        self.assertLess(fit.fitted_order, 1.05)
        self.assertGreater(fit.r_squared, 0.99)

    def test_holder_rate_at_least_theoretical(self):
        """The error on holder(0.25) decays at least like n^-(rho + 1/2)."""
        p = holder_time_probe(0.25)
        reference = ReferenceSolution(p)
        points = [
            (n, estimate_error(p, zero_noise(0.0), SchemeTag.EXPLICIT_RAND, n, M=30, seed=5, reference=reference).value)
            for n in (32, 64, 128, 256)
        ]
        errors = [e for _, e in points]
        self.assertTrue(all(a > b for a, b in zip(errors, errors[1:])))
        self.assertGreater(fit_order(points).fitted_order, theoretical_order(0.25) - 0.1)

    def test_implicit_linear(self):
        """The implicit scheme also converges on the linear fixture."""
        p = linear_autonomous()
        coarse = estimate_error(p, zero_noise(0.0), SchemeTag.IMPLICIT_RAND, 16, M=2)
        fine = estimate_error(p, zero_noise(0.0), SchemeTag.IMPLICIT_RAND, 64, M=2)
        self.assertAlmostEqual(coarse.value / fine.value, 4.0, delta=0.4)

    def test_reproducible_across_threads(self):
        """Thread count never changes the estimate."""
        p = holder_time_probe(0.5)
        serial = estimate_error(p, zero_noise(0.0), SchemeTag.EXPLICIT_RAND, 32, M=12, seed=9, threads=1)
        threaded = estimate_error(p, zero_noise(0.0), SchemeTag.EXPLICIT_RAND, 32, M=12, seed=9, threads=4)
        self.assertEqual(serial.value, threaded.value)
        self.assertEqual(serial.std_error, threaded.std_error)
        self.assertEqual(serial.to_dict()["paths"], 12)

    def test_argument_checks(self):
        """Path count, exponent and refinement are validated."""
        p = linear_autonomous()
        noise = zero_noise(0.0)
        with self.assertRaises(DomainError):
            estimate_error(p, noise, SchemeTag.EXPLICIT_RAND, 8, M=1)
        with self.assertRaises(DomainError):
            estimate_error(p, noise, SchemeTag.EXPLICIT_RAND, 8, M=2, p_exponent=1.0)
        with self.assertRaises(DomainError):
            estimate_error(p, noise, SchemeTag.EXPLICIT_RAND, 8, M=2, sup_refinement=0)

    def test_k1_noise_with_implicit(self):
        """Implicit schemes need K2 noise."""
        noise = NoiseModelBuilder.constant_direction(0.1).with_class(NoiseClass.K1).build()
        with self.assertRaises(ConfigurationError):
            check_scheme_noise(SchemeTag.IMPLICIT_RAND, noise)
        check_scheme_noise(SchemeTag.EXPLICIT_RAND, noise)

    def test_divergence_carries_path(self):
        """A diverging path is reported with its index."""
        p = (ProblemSpecBuilder().with_interval(0.0, 1.0).with_initial_value(1.0)
             .with_rhs(lambda t, y: y * 1e308).with_constants(1.0, 1.0).build())
        with self.assertRaises(DivergenceError) as ctx:
            simulate_path(PerturbedProblem(p, zero_noise(0.0)), 4, SchemeTag.EXPLICIT_RAND, 0, 3)
        self.assertEqual(ctx.exception.path, 3)


class TestNoiseFloor(unittest.TestCase):
    """Test the delta sweep."""

    def test_error_grows_with_delta(self):
        """Once the noise dominates the discretisation error, the error increases with delta."""
        p = linear_autonomous()
        template = NoiseModelBuilder().with_kind(NoiseKind.CONSTANT_DIRECTION).build()
        deltas = [0.01, 0.02, 0.05, 0.1, 0.2, 0.5]
        rows = noise_floor_sweep(p, template, SchemeTag.EXPLICIT_RAND, 256, deltas, M=3, seed=5)
        errors = [row.estimate.value for row in rows]
        for smaller, larger in zip(errors, errors[1:]):
            self.assertGreater(larger, smaller)

    def test_cancelling_noise_meets_lower_bound(self):
        """Noise that cancels the field leaves an error of exactly (b - a) delta, up to rounding."""
        plus, _, _ = adversarial_pair(0.1)
        template = NoiseModelBuilder.constant_direction(0.0, sign=-1.0).build()
        (row,) = noise_floor_sweep(plus, template, SchemeTag.EXPLICIT_RAND, 32, [0.1], M=3, seed=1)
        self.assertGreaterEqual(row.error_over_delta, plus.length * (1.0 - 1e-9))
        self.assertAlmostEqual(row.error_over_delta, plus.length, places=9)
        self.assertAlmostEqual(row.lower_bound, 0.1)

    def test_constant_direction_floor(self):
        """error / delta stays between (b - a) and the explicit noise constant."""
        p = linear_autonomous()
        template = NoiseModelBuilder().with_kind(NoiseKind.CONSTANT_DIRECTION).build()
        rows = noise_floor_sweep(p, template, SchemeTag.EXPLICIT_RAND, 256, [0.0, 0.05, 0.1], M=4, seed=2)
        self.assertEqual([r.delta for r in rows], [0.0, 0.05, 0.1])
        self.assertTrue(math.isnan(rows[0].error_over_delta))
        upper = compute_class_constants(p).explicit_noise_C + 0.1
        for row in rows[1:]:
            self.assertGreaterEqual(row.error_over_delta, p.length)
            self.assertLessEqual(row.error_over_delta, upper)
            self.assertAlmostEqual(row.lower_bound, row.delta * p.length)
        self.assertGreater(rows[2].estimate.value / rows[1].estimate.value, 1.5)
        self.assertLess(rows[2].estimate.value / rows[1].estimate.value, 2.5)

        plain = estimate_error(p, template.with_delta(0.0), SchemeTag.EXPLICIT_RAND, 256, 4, seed=2)
        self.assertEqual(rows[0].estimate.value, plain.value)


class TestBounds(unittest.TestCase):
    """Test the a-priori bound suite."""

    def test_fixtures_pass(self):
        """Built-in fixtures respect every bound."""
        noise = NoiseModelBuilder.constant_direction(0.1).build()
        for p in (linear_autonomous(), holder_time_probe(0.25), lipschitz_state_probe(d=2),
                  adversarial_pair(0.1)[0]):
            for scheme in (SchemeTag.EXPLICIT_RAND, SchemeTag.IMPLICIT_RAND):
                report = validate_bounds(p, noise, scheme, 32, 5, seed=4)
                self.assertTrue(report.passed, (p.name, scheme, report.to_dict()))

    def test_check_names(self):
        """Explicit and implicit runs check their own bounds."""
        p = linear_autonomous()
        noise = NoiseModelBuilder.constant_direction(0.01).build()
        explicit = validate_bounds(p, noise, SchemeTag.EXPLICIT_RAND, 16, 3, seed=0)
        implicit = validate_bounds(p, noise, SchemeTag.IMPLICIT_RAND, 16, 3, seed=0)
        self.assertEqual([c.name for c in explicit.checks], ["explicit_ball_containment", "explicit_perturbation"])
        self.assertEqual([c.name for c in implicit.checks], ["implicit_iterate_bound", "implicit_perturbation"])
        for check in explicit.checks + implicit.checks:
            self.assertLessEqual(check.ratio, 1.0)

    def test_zero_delta_gap(self):
        """Without noise the coupled runs coincide."""
        report = validate_bounds(linear_autonomous(), zero_noise(0.0), SchemeTag.EXPLICIT_RAND, 16, 3, seed=0)
        self.assertEqual(report.checks[1].observed, 0.0)
        self.assertTrue(report.passed)

    def test_misdeclared_problem_fails(self):
        """Iterates of z' = 10 z leave the ball promised for K = 1."""
        report = validate_bounds(_fast_growth_problem(), zero_noise(0.0), SchemeTag.EXPLICIT_RAND, 64, 2, seed=0)
        self.assertFalse(report.passed)
        self.assertGreater(report.checks[0].ratio, 1.0)


class TestAssumptions(unittest.TestCase):
    """Test sampled class checks."""

    def test_fixtures_pass(self):
        """Every fixture meets its declared constants."""
        for p in (linear_autonomous(), holder_time_probe(0.25), holder_time_probe(1.0),
                  lipschitz_state_probe(d=2), adversarial_pair(0.1)[0]):
            report = check_assumptions(p, samples=500, seed=0)
            self.assertTrue(report.passed, report.to_dict())

    def test_misdeclared_problem_fails(self):
        """Growth and Lipschitz ratios expose wrong constants."""
        report = check_assumptions(_fast_growth_problem(), samples=200, seed=0)
        self.assertFalse(report.passed)
        self.assertGreater(report.growth_ratio, 1.0)
        self.assertAlmostEqual(report.lipschitz_ratio, 10.0, places=6)


if __name__ == "__main__":
    unittest.main()
