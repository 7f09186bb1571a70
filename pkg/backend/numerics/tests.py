import math

import numpy as np
from django.test import SimpleTestCase
from scipy import special

from plates_core.exceptions import DomainError

from .exceptions import QuadratureError, RootFindingError
from .quadrature import (
    ADAPTIVE_SUBDIVISION,
    QuadratureSpec,
    integrate_endpoint_singular,
    integrate_with_estimate,
)
from .roots import RootSpec, find_root_bracketed

# (integrand on offsets (x, left, right), a, b, exact value)
SINGULAR_BATTERY = [
    (lambda x, l, r: l ** -0.5, 0.0, 1.0, 2.0),
    (lambda x, l, r: np.log(l), 0.0, 1.0, -1.0),
    (lambda x, l, r: 1.0 / np.sqrt(l * r), -1.0, 1.0, math.pi),
    (lambda x, l, r: l ** -0.9, 0.0, 1.0, 10.0),
    (lambda x, l, r: np.log(l) * np.log(r), 0.0, 1.0, 2.0 - math.pi ** 2 / 6.0),
    (lambda x, l, r: np.sqrt(l * r), 0.0, 1.0, math.pi / 8.0),
    (lambda x, l, r: l ** -0.5 / (1.0 + x), 0.0, 1.0, math.pi / 2.0),
    (lambda x, l, r: r ** -0.5, 0.0, 1.0, 2.0),
    (lambda x, l, r: np.exp(x), 0.0, 1.0, math.e - 1.0),
    (lambda x, l, r: l ** -0.8 * r ** -0.5, 0.0, 1.0, special.beta(0.2, 0.5)),
]


class QuadratureTests(SimpleTestCase):
    def test_constant(self):
        self.assertAlmostEqual(integrate_endpoint_singular(lambda x: np.ones_like(x), 0.0, 1.0), 1.0, places=13)

    def test_polynomial_and_reversed_limits(self):
        forward = integrate_endpoint_singular(lambda x: x ** 2, 0.0, 2.0)
        self.assertAlmostEqual(forward, 8.0 / 3.0, places=12)
        self.assertAlmostEqual(integrate_endpoint_singular(lambda x: x ** 2, 2.0, 0.0), -forward, places=14)

    def test_empty_interval(self):
        self.assertEqual(integrate_endpoint_singular(lambda x: 1.0 / x, 1.0, 1.0), 0.0)

    def test_beta_function(self):
        value = integrate_endpoint_singular(lambda x, l, r: l ** -0.8 * r ** -0.5, 0.0, 1.0, with_offsets=True)
        self.assertAlmostEqual(value, 6.2689, places=3)
        self.assertTrue(math.isclose(value, special.beta(0.2, 0.5), rel_tol=1e-9))

    def test_singular_battery(self):
        for index, (f, a, b, exact) in enumerate(SINGULAR_BATTERY):
            with self.subTest(case=index):
                result = integrate_with_estimate(f, a, b, with_offsets=True)
                true_error = abs(result.value - exact)
                self.assertTrue(math.isclose(result.value, exact, rel_tol=1e-9, abs_tol=1e-12))
                self.assertLessEqual(true_error, result.error + 1e-14 * abs(exact))

    def test_never_evaluates_endpoints(self):
        seen = []

        def f(x):
            seen.append(np.asarray(x).copy())
            return x ** -0.5

        integrate_endpoint_singular(f, 0.0, 1.0)
        nodes = np.concatenate(seen)
        self.assertTrue(np.all(nodes > 0.0))
        self.assertTrue(np.all(nodes < 1.0))

    def test_offsets_stay_above_underflow(self):
        smallest = []

        def f(x, l, r):
            smallest.append(min(l.min(), r.min()))
            # 1e-50 * offset must stay a normal float
            return 1e-25 / np.sqrt(1e-50 * l)

        value = integrate_endpoint_singular(f, 0.0, 2.0, with_offsets=True)
        self.assertGreaterEqual(min(smallest), 1e-250)
        self.assertTrue(math.isclose(value, 2.0 * math.sqrt(2.0), rel_tol=1e-9))

    def test_adaptive_agrees_with_double_exponential(self):
        def f(x, l, r):
            return np.cos(x) / np.sqrt(l)

        spec = QuadratureSpec(method=ADAPTIVE_SUBDIVISION)
        primary = integrate_endpoint_singular(f, 0.0, 1.0, with_offsets=True)
        check = integrate_endpoint_singular(f, 0.0, 1.0, spec, with_offsets=True)
        self.assertTrue(math.isclose(primary, check, rel_tol=1e-8))

    def test_deterministic(self):
        first = integrate_with_estimate(lambda x: np.log(x), 0.0, 1.0)
        second = integrate_with_estimate(lambda x: np.log(x), 0.0, 1.0)
        self.assertEqual(first, second)

    def test_non_finite_integrand(self):
        with self.assertRaises(QuadratureError):
            integrate_endpoint_singular(lambda x: 1.0 / (x - 0.5), 0.0, 1.0)

    def test_non_convergence_is_reported(self):
        spec = QuadratureSpec(max_levels=1)
        with self.assertLogs("numerics.quadrature", "WARNING"):
            with self.assertRaises(QuadratureError) as ctx:
                integrate_endpoint_singular(lambda x: np.exp(x), 0.0, 1.0, spec)
        self.assertIsNotNone(ctx.exception.estimate)

    def test_spec_validation(self):
        with self.assertRaises(DomainError):
            QuadratureSpec(rel_tol=1e-15)
        with self.assertRaises(DomainError):
            QuadratureSpec(max_levels=15)
        with self.assertRaises(DomainError):
            QuadratureSpec(method="simpson")
        with self.assertRaises(DomainError):
            integrate_endpoint_singular(lambda x: x, 0.0, math.inf)

    def test_tolerance_from_settings(self):
        with self.settings(CHAMELEON_PLATES={"QUAD_REL_TOL": 1e-6}):
            self.assertEqual(QuadratureSpec().rel_tol, 1e-6)


class RootFindingTests(SimpleTestCase):
    def test_square_root_of_two(self):
        root = find_root_bracketed(lambda x: x * x - 2.0, RootSpec((1.0, 2.0)))
        self.assertAlmostEqual(root, math.sqrt(2.0), places=11)

    def test_root_at_zero(self):
        root = find_root_bracketed(lambda x: x, RootSpec((-1.0, 1.0)))
        self.assertLessEqual(abs(root), 1e-11)

    def test_root_on_bracket_end(self):
        self.assertEqual(find_root_bracketed(lambda x: x - 1.0, RootSpec((1.0, 3.0))), 1.0)

    def test_no_sign_change(self):
        with self.assertRaises(RootFindingError):
            find_root_bracketed(lambda x: x * x + 1.0, RootSpec((-1.0, 1.0)))

    def test_nan_objective(self):
        with self.assertRaises(RootFindingError):
            find_root_bracketed(lambda x: math.nan, RootSpec((0.0, 1.0)))

    def test_stays_inside_bracket(self):
        calls = []

        def g(x):
            calls.append(x)
            return math.tanh(x - 0.3)

        find_root_bracketed(g, RootSpec((0.0, 5.0)))
        self.assertTrue(all(0.0 <= x <= 5.0 for x in calls))

    def test_deterministic(self):
        spec = RootSpec((0.0, 3.0))
        self.assertEqual(
            find_root_bracketed(lambda x: math.cos(x) - x, spec),
            find_root_bracketed(lambda x: math.cos(x) - x, spec),
        )

    def test_bad_bracket(self):
        with self.assertRaises(DomainError):
            RootSpec((1.0, 1.0))
        with self.assertRaises(DomainError):
            RootSpec((0.0, 1.0), rel_tol=0.0)
