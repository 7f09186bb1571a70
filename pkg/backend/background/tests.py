import math

import numpy as np
from django.test import SimpleTestCase
from scipy import integrate

from plates_core.exceptions import DomainError

from .domain import GasSpec, PatchModel
from .services import (
    casimir_pressure,
    electrostatic_pressure,
    gas_state,
    get_gas,
    patch_k_integral,
    register_gas,
)

D30 = 30e-6


class GasTests(SimpleTestCase):
    def setUp(self):
        self.xe = get_gas("Xe")

    def test_default_xenon(self):
        self.assertEqual(self.xe.density_coeff, 5.462)
        self.assertEqual(self.xe.alpha, 4e-40)
        self.assertEqual(self.xe.temperature, 293.15)

    def test_one_atmosphere(self):
        self.assertAlmostEqual(gas_state(self.xe, 1.0).rho, 5.462, places=12)

    def test_vacuum(self):
        state = gas_state(self.xe, 0.0)
        self.assertEqual(state.rho, 0.0)
        self.assertEqual(state.eps_rel, 1.0)

    def test_half_atmosphere_permittivity(self):
        state = gas_state(self.xe, 0.5)
        self.assertAlmostEqual(state.number_density / 1.2517e25, 1.0, delta=1e-3)
        self.assertAlmostEqual((state.eps_rel - 1.0) / 5.7e-4, 1.0, delta=0.02)

    def test_linear_in_pressure(self):
        one, two = gas_state(self.xe, 0.2), gas_state(self.xe, 0.4)
        self.assertEqual(two.rho, 2.0 * one.rho)
        self.assertEqual(two.number_density, 2.0 * one.number_density)
        self.assertAlmostEqual((two.eps_rel - 1.0) / (one.eps_rel - 1.0), 2.0, places=10)

    def test_negative_pressure(self):
        with self.assertRaises(DomainError):
            gas_state(self.xe, -0.1)

    def test_validity_window_warns(self):
        with self.assertLogs("background.services.gas", "WARNING"):
            state = gas_state(self.xe, 2.0)
        self.assertTrue(state.outside_validity)
        self.assertFalse(gas_state(self.xe, 0.5).outside_validity)

    def test_registry(self):
        argon = register_gas(GasSpec(name="Ar", density_coeff=1.661, alpha=1.83e-40, temperature=293.15))
        self.assertIs(get_gas("Ar"), argon)
        with self.assertRaisesMessage(DomainError, "did you mean: Xe"):
            get_gas("Xee")

    def test_invalid_spec(self):
        with self.assertRaises(DomainError):
            GasSpec(name="bad", density_coeff=-1.0, alpha=1e-40, temperature=293.15)


class CasimirTests(SimpleTestCase):
    def test_thirty_microns(self):
        self.assertAlmostEqual(casimir_pressure(D30), 0.1605, delta=0.0016)

    def test_xenon_reduction(self):
        eps_rel = gas_state(get_gas("Xe"), 0.5).eps_rel
        drop_pct = 100.0 * (1.0 - casimir_pressure(D30, eps_rel) / casimir_pressure(D30))
        self.assertGreater(drop_pct, 0.02)
        self.assertLess(drop_pct, 0.035)

    def test_fourth_power_law(self):
        self.assertAlmostEqual(casimir_pressure(D30) / casimir_pressure(2 * D30), 16.0, places=10)

    def test_decreasing(self):
        self.assertGreater(casimir_pressure(20e-6), casimir_pressure(D30))
        self.assertGreater(casimir_pressure(D30, 1.001), casimir_pressure(D30, 1.002))

    def test_domain(self):
        with self.assertRaises(DomainError):
            casimir_pressure(0.0)
        with self.assertRaises(DomainError):
            casimir_pressure(D30, 0.5)


class ElectrostaticTests(SimpleTestCase):
    def setUp(self):
        self.patch = PatchModel()

    def test_wave_numbers(self):
        self.assertAlmostEqual(self.patch.k_min, 2 * math.pi / 200e-6)
        self.assertAlmostEqual(self.patch.k_max, 2 * math.pi / 20e-6)
        with self.assertRaises(DomainError):
            PatchModel(lambda_min=200e-6, lambda_max=20e-6)

    def test_long_wavelength_term(self):
        first = electrostatic_pressure(PatchModel(sigma_s=0.0), D30)
        self.assertAlmostEqual(first / 1.23e3, 1.0, delta=0.01)

    def test_full_pressure(self):
        value = electrostatic_pressure(self.patch, D30)
        self.assertGreater(value, 1e3)
        self.assertLess(value, 4e3)
        first = electrostatic_pressure(PatchModel(sigma_s=0.0), D30)
        self.assertAlmostEqual(value / first, 1.065, delta=0.01)

    def test_linear_in_permittivity(self):
        base = electrostatic_pressure(self.patch, D30)
        self.assertEqual(electrostatic_pressure(self.patch, D30, 1.25), 1.25 * base)

    def test_quadratic_in_sigma(self):
        single = electrostatic_pressure(PatchModel(sigma_l=0.05, sigma_s=0.0), D30)
        double = electrostatic_pressure(PatchModel(sigma_l=0.1, sigma_s=0.0), D30)
        self.assertEqual(double, 4.0 * single)
        short = electrostatic_pressure(PatchModel(sigma_l=0.0, sigma_s=0.05), D30)
        short_double = electrostatic_pressure(PatchModel(sigma_l=0.0, sigma_s=0.1), D30)
        self.assertAlmostEqual(short_double / short, 4.0, places=12)

    def test_decreasing_in_separation(self):
        values = [electrostatic_pressure(self.patch, d * 1e-6) for d in (10, 20, 30, 60, 100)]
        self.assertTrue(all(a > b for a, b in zip(values, values[1:])))

    def test_k_integral_against_trapezoid(self):
        k = np.linspace(self.patch.k_min, self.patch.k_max, 1_000_000)
        x = k * D30
        reference = integrate.trapezoid(k ** 3 / np.sinh(x) ** 2, k)
        self.assertTrue(math.isclose(patch_k_integral(self.patch, D30), reference, rel_tol=1e-6))

    def test_small_kd_limit(self):
        # k^3 / sinh^2(kd) -> k / d^2 when kd << 1
        patch = PatchModel(lambda_min=1.0, lambda_max=2.0)
        d = 1e-6
        expected = (patch.k_max ** 2 - patch.k_min ** 2) / (2 * d ** 2)
        self.assertTrue(math.isclose(patch_k_integral(patch, d), expected, rel_tol=1e-9))

    def test_large_kd_underflows_to_zero(self):
        patch = PatchModel(lambda_min=1e-9, lambda_max=2e-9)
        self.assertEqual(patch_k_integral(patch, 1e-3), 0.0)

    def test_domain(self):
        with self.assertRaises(DomainError):
            electrostatic_pressure(self.patch, 0.0)
        with self.assertRaises(DomainError):
            electrostatic_pressure(self.patch, D30, 0.9)
