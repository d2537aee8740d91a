"""Tests for the fixture library and fixture names."""

import math
import unittest

import numpy as np

from inexact_euler.enums import NoiseKind
from inexact_euler.exceptions import ConfigurationError, DomainError
from inexact_euler.noise import PerturbedProblem
from inexact_euler.problems import (
    FIXTURE_NAMES,
    adversarial_pair,
    holder_time_probe,
    linear_autonomous,
    lipschitz_state_probe,
    parse_fixture_name,
    resolve_fixture,
    stability_problem,
)


class TestFixtures(unittest.TestCase):
    """Test the built-in problems."""

    def test_linear(self):
        """A = min(K, L) drives both the field and the initial value."""
        p = linear_autonomous(K=2.0, L=0.5)
        np.testing.assert_allclose(p.eta, [0.5])
        np.testing.assert_allclose(p.f(0.0, np.array([2.0])), [1.0])
        np.testing.assert_allclose(p.exact([1.0]), [[0.5 * math.exp(0.5)]])
        self.assertEqual(p.name, "linear")

    def test_holder_end_values(self):
        """z(1) = 1/4 for rho = 1 and sqrt(2)/3 for rho = 1/2 on [0, 1]."""
        self.assertAlmostEqual(holder_time_probe(1.0).exact([1.0])[0, 0], 0.25, places=14)
        self.assertAlmostEqual(holder_time_probe(0.5).exact([1.0])[0, 0], 0.4714045, places=7)
        self.assertAlmostEqual(holder_time_probe(0.5).exact([0.5])[0, 0], 0.4714045 / 2.0, places=7)

    def test_holder_declares_rho(self):
        """The exponent and growth constant are declared."""
        p = holder_time_probe(0.25)
        self.assertEqual(p.rho, 0.25)
        self.assertAlmostEqual(p.K, 0.5**0.25 + 1.0)
        self.assertEqual(p.name, "holder(0.25)")
        with self.assertRaises(DomainError):
            holder_time_probe(0.0)

    def test_state_probe(self):
        """Bounded Lipschitz field without an exact solution."""
        p = lipschitz_state_probe(K=1.0, L=1.0, d=3)
        self.assertEqual(p.d, 3)
        self.assertFalse(p.has_analytic)
        self.assertLessEqual(np.sum(np.abs(p.f(0.0, np.full(3, 100.0)))), 1.0)
        with self.assertRaises(DomainError):
            lipschitz_state_probe(K=4.0, L=1.0)

    def test_adversarial_pair(self):
        """The two problems see the same zero information."""
        plus, minus, (noise_plus, noise_minus) = adversarial_pair(0.1)
        self.assertEqual(noise_plus.kind, NoiseKind.CONSTANT_DIRECTION)
        for p, noise in ((plus, noise_plus), (minus, noise_minus)):
            pp = PerturbedProblem(p, noise)
            np.testing.assert_array_equal(pp.eta_tilde, [0.0])
            np.testing.assert_allclose(pp.rhs_tilde(0.3, np.array([1.0])), [0.0], atol=0.0)
        np.testing.assert_allclose(plus.exact([1.0]) - minus.exact([1.0]), [[0.2]])
        for delta in (0.0, 1.5):
            with self.assertRaises(DomainError):
                adversarial_pair(delta)

    def test_stability_problem(self):
        """Real encoding of z' = 2 lambda t z with z = eta exp(lambda t^2)."""
        lam = complex(-1.0, 2.0)
        p = stability_problem(lam)
        self.assertEqual(p.d, 2)
        z = np.exp(lam * 0.25)
        np.testing.assert_allclose(p.exact([0.5]), [[z.real, z.imag]])
        np.testing.assert_allclose(p.f(0.5, np.array([1.0, 0.0])), [-1.0, 2.0])
        with self.assertRaises(DomainError):
            stability_problem(lam, eta=0.0)


class TestRegistry(unittest.TestCase):
    """Test fixture names."""

    def test_parse(self):
        """Names split into kind and numeric arguments."""
        self.assertEqual(parse_fixture_name("linear"), ("linear", []))
        self.assertEqual(parse_fixture_name("holder(0.25)"), ("holder", [0.25]))
        self.assertEqual(parse_fixture_name(" stability(-1, 0.5) "), ("stability", [-1.0, 0.5]))
        self.assertIn("adversarial", FIXTURE_NAMES)

    def test_unknown_or_malformed(self):
        """Unknown kinds, bad numbers and wrong arity are configuration errors."""
        for name in ("quadratic", "holder(abc)", "holder(", "holder()", "stability(1)"):
            with self.assertRaises(ConfigurationError, msg=name):
                resolve_fixture(name)

    def test_resolve(self):
        """Every addressable fixture resolves."""
        self.assertEqual(resolve_fixture("linear").name, "linear")
        self.assertEqual(resolve_fixture("holder(0.5)").rho, 0.5)
        self.assertEqual(resolve_fixture("state(2)").d, 2)
        self.assertEqual(resolve_fixture("adversarial(0.1)").name, "adversarial(0.1,+)")
        self.assertEqual(resolve_fixture("stability(-1,0)").d, 2)
        self.assertEqual(resolve_fixture("linear", a=1.0, b=2.0).b, 2.0)


if __name__ == "__main__":
    unittest.main()
