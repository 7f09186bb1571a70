import math

import numpy as np
from django.test import SimpleTestCase
from scipy import special

from plates_core.exceptions import DomainError
from units.conversions import g_per_l_to_natural, length_from_inverse_energy, length_to_natural, pressure_natural_to_lab
from units.constants import MICRO

from .domain import ALGEBRAIC, INTERMEDIATE, SCREENED, ChameleonModel, ProfileSolution, classify_regime
from .services import (
    bulk_state,
    chameleon_pressure,
    energy_ratio,
    h,
    linearized_potential,
    oracle_energy_pressure,
    oracle_separation,
    pressure_bracket,
    pressure_from_z,
    profile_constant,
    separation_from_z,
    separation_integral,
    vacuum_asymptotic_pressure,
    vacuum_prefactor,
    z_from_separation,
)


def um(value):
    return length_to_natural(value * MICRO)


class ModelTests(SimpleTestCase):
    def test_p_matches_n(self):
        for n in (1, 2, 4, 6, 10):
            model = ChameleonModel(n=n, beta=1.0)
            self.assertAlmostEqual((1 - model.p) / model.p, n, places=12)

    def test_invalid_n(self):
        for bad in (0, -1, 1.5, True):
            with self.subTest(n=bad):
                with self.assertRaisesMessage(DomainError, "n must be ≥ 1"):
                    ChameleonModel(n=bad, beta=1.0)

    def test_invalid_scales(self):
        with self.assertRaises(DomainError):
            ChameleonModel(n=1, beta=0.0)
        with self.assertRaises(DomainError):
            ChameleonModel(n=1, beta=1.0, lambda_gev=-1.0)

    def test_defaults_from_settings(self):
        model = ChameleonModel(n=1, beta=1.0)
        self.assertEqual(model.lambda_gev, 2.4e-12)
        self.assertEqual(model.m_pl_gev, 2.0e18)

    def test_regime_tags(self):
        self.assertEqual(classify_regime(0.05), ALGEBRAIC)
        self.assertEqual(classify_regime(1.0), INTERMEDIATE)
        self.assertEqual(classify_regime(12.0), SCREENED)


class HelperFunctionTests(SimpleTestCase):
    def test_h_values(self):
        self.assertAlmostEqual(h(0.5, 0.25), 1.0, places=14)
        self.assertEqual(h(0.3, 1.0), 0.0)
        self.assertAlmostEqual(h(0.0, 0.3), -math.log(0.3), places=14)
        self.assertAlmostEqual(h(1e-12, 0.3), -math.log(0.3), places=10)
        self.assertAlmostEqual(h(-0.2, 0.5), (1 - 0.5 ** -0.2) / -0.2, places=14)

    def test_h_on_arrays(self):
        values = h(0.5, np.array([0.25, 1.0]))
        self.assertEqual(values.shape, (2,))
        self.assertAlmostEqual(values[0], 1.0, places=14)

    def test_h_domain(self):
        with self.assertRaises(DomainError):
            h(0.5, 0.0)

    def test_profile_constant_matches_beta_function(self):
        for n in (1, 2, 4, 6):
            with self.subTest(n=n):
                p = 1.0 / (n + 1)
                expected = special.beta(0.5 + 1.0 / n, 0.5) / math.sqrt(1 - p)
                self.assertTrue(math.isclose(profile_constant(n), expected, rel_tol=1e-8))
        self.assertAlmostEqual(profile_constant(4), 2.679, places=3)

    def test_vacuum_prefactor_positive(self):
        for n in (1, 2, 4, 6):
            self.assertGreater(vacuum_prefactor(n), 0.0)
        with self.assertRaises(DomainError):
            vacuum_prefactor(0)


class BulkStateTests(SimpleTestCase):
    def setUp(self):
        self.model = ChameleonModel(n=4, beta=1e4)
        self.rho = g_per_l_to_natural(5.0)

    def test_reference_gas(self):
        bulk = bulk_state(self.model, self.rho)
        self.assertGreater(bulk.phi_b, 2.0e-12)
        self.assertLess(bulk.phi_b, 2.2e-12)
        range_um = length_from_inverse_energy(bulk.m_b) / MICRO
        self.assertGreater(range_um, 12.0)
        self.assertLess(range_um, 12.6)
        self.assertTrue(math.isclose(bulk.m_b, bulk.m_b_linear, rel_tol=1e-6))
        self.assertFalse(bulk.linearization_warning)

    def test_phi_b_minimizes_potential(self):
        bulk = bulk_state(self.model, self.rho)
        at_min = linearized_potential(self.model, self.rho, bulk.phi_b)
        self.assertLess(at_min, linearized_potential(self.model, self.rho, 0.99 * bulk.phi_b))
        self.assertLess(at_min, linearized_potential(self.model, self.rho, 1.01 * bulk.phi_b))

    def test_density_scaling(self):
        low = bulk_state(self.model, self.rho)
        high = bulk_state(self.model, 32.0 * self.rho)
        self.assertAlmostEqual(high.phi_b / low.phi_b, 0.5, places=12)
        self.assertAlmostEqual(high.m_b_linear / low.m_b_linear, 32.0 ** 0.6, places=10)

    def test_invalid_density(self):
        with self.assertRaises(DomainError):
            bulk_state(self.model, 0.0)
        with self.assertRaises(DomainError):
            bulk_state(self.model, -1.0)
        with self.assertRaises(DomainError):
            bulk_state(self.model, math.nan)

    def test_linearization_warning(self):
        strong = ChameleonModel(n=4, beta=1e36)
        with self.assertLogs("chameleon.services.potential", "WARNING"):
            bulk = bulk_state(strong, self.rho)
        self.assertTrue(bulk.linearization_warning)
        self.assertGreater(bulk.linearization_ratio, 1e-2)


class ProfileTests(SimpleTestCase):
    def setUp(self):
        self.model = ChameleonModel(n=4, beta=1e4)
        self.bulk = bulk_state(self.model, g_per_l_to_natural(5.0))

    def test_separation_increases_with_z(self):
        seps = [separation_from_z(self.model, self.bulk, z) for z in (0.0, 0.1, 0.5, 0.9, 0.99)]
        self.assertEqual(seps[0], 0.0)
        self.assertTrue(all(a < b for a, b in zip(seps, seps[1:])))

    def test_round_trip(self):
        for d_um in (1.0, 30.0, 100.0):
            with self.subTest(d_um=d_um):
                d = um(d_um)
                profile = z_from_separation(self.model, self.bulk, d)
                self.assertFalse(profile.fully_screened)
                self.assertGreater(profile.z, 0.0)
                self.assertLess(profile.z, 1.0)
                self.assertGreater(profile.phi_0, 0.0)
                self.assertLess(profile.phi_0, self.bulk.phi_b)
                back = separation_from_z(self.model, self.bulk, profile.z, one_minus_z=profile.one_minus_z)
                self.assertTrue(math.isclose(back, d, rel_tol=1e-8))

    def test_separation_increases_with_z_for_every_n(self):
        grid = np.linspace(0.01, 0.99, 50)
        for n in range(1, 9):
            with self.subTest(n=n):
                model = ChameleonModel(n=n, beta=1e4)
                bulk = bulk_state(model, g_per_l_to_natural(5.0))
                seps = [separation_from_z(model, bulk, float(z)) for z in grid]
                self.assertTrue(all(a < b for a, b in zip(seps, seps[1:])))

    def test_integral_close_to_full_screening(self):
        values = [
            separation_integral(self.model, 0.0, one_minus_z=delta)
            for delta in (1e-1, 1e-3, 1e-6, 1e-9, 1e-12, 1e-15)
        ]
        self.assertTrue(all(math.isfinite(v) for v in values))
        self.assertTrue(all(a < b for a, b in zip(values, values[1:])))

    def test_z_round_trip_for_every_n(self):
        # (z, 1 - z) pairs; 1 - z is passed directly where subtraction loses digits
        points = ((1e-4, None), (1e-3, None), (0.5, None), (1.0 - 1e-4, 1e-4), (1.0 - 1e-6, 1e-6))
        for n in range(1, 9):
            model = ChameleonModel(n=n, beta=1e4)
            bulk = bulk_state(model, g_per_l_to_natural(5.0))
            for z, delta in points:
                with self.subTest(n=n, z=z):
                    d = separation_from_z(model, bulk, z, one_minus_z=delta)
                    profile = z_from_separation(model, bulk, d)
                    self.assertFalse(profile.fully_screened)
                    self.assertTrue(math.isclose(profile.z, z, rel_tol=1e-8))
                    if delta is not None:
                        self.assertTrue(math.isclose(profile.one_minus_z, delta, rel_tol=1e-6))

    def test_regimes(self):
        self.assertEqual(z_from_separation(self.model, self.bulk, um(1.0)).regime, ALGEBRAIC)
        self.assertEqual(z_from_separation(self.model, self.bulk, um(30.0)).regime, INTERMEDIATE)
        self.assertEqual(z_from_separation(self.model, self.bulk, um(200.0)).regime, SCREENED)

    def test_reference_m_b_d(self):
        profile = z_from_separation(self.model, self.bulk, um(30.0))
        self.assertAlmostEqual(profile.m_b_d, 2.44, delta=0.05)

    def test_fully_screened(self):
        with self.assertLogs("chameleon.services.profile", "INFO"):
            profile = z_from_separation(self.model, self.bulk, um(2000.0))
        self.assertTrue(profile.fully_screened)
        self.assertEqual(profile.z, 1.0)

    def test_invalid_inputs(self):
        with self.assertRaises(DomainError):
            z_from_separation(self.model, self.bulk, 0.0)
        with self.assertRaises(DomainError):
            separation_from_z(self.model, self.bulk, 1.0)
        with self.assertRaises(DomainError):
            separation_integral(self.model, -0.1)

    def test_logarithmic_growth_near_full_screening(self):
        near = separation_integral(self.model, 0.0, one_minus_z=1e-10)
        nearer = separation_integral(self.model, 0.0, one_minus_z=1e-12)
        slope = (nearer - near) / (math.log(1e-10) - math.log(1e-12))
        self.assertAlmostEqual(slope / math.sqrt(2.0), 1.0, delta=0.05)

    def test_oracle_separation_agrees_with_linearized_mass(self):
        model = ChameleonModel(n=4, beta=1e4, linearized_mass=True)
        for z in (0.05, 0.3, 0.9):
            with self.subTest(z=z):
                phi_0 = self.bulk.phi_b * z ** model.p
                expected = separation_from_z(model, self.bulk, z)
                self.assertTrue(math.isclose(oracle_separation(model, self.bulk, phi_0), expected, rel_tol=1e-6))

    def test_oracle_separation_domain(self):
        with self.assertRaises(DomainError):
            oracle_separation(self.model, self.bulk, self.bulk.phi_b)


class PressureTests(SimpleTestCase):
    def setUp(self):
        self.model = ChameleonModel(n=4, beta=1e4)
        self.rho = g_per_l_to_natural(5.0)
        self.bulk = bulk_state(self.model, self.rho)

    def test_decreasing_in_z(self):
        values = [pressure_from_z(self.model, self.bulk, z).value for z in (0.1, 0.5, 0.9, 0.999)]
        self.assertTrue(all(a > b > 0 for a, b in zip(values, values[1:])))
        screened = pressure_from_z(self.model, self.bulk, 1.0)
        self.assertEqual(screened.value, 0.0)
        self.assertTrue(screened.fully_screened)
        self.assertEqual(screened.regime, SCREENED)

    def test_decreasing_in_z_for_every_n(self):
        grid = np.linspace(0.01, 0.99, 50)
        for n in range(1, 9):
            with self.subTest(n=n):
                model = ChameleonModel(n=n, beta=1e4)
                bulk = bulk_state(model, self.rho)
                values = [pressure_from_z(model, bulk, float(z)).value for z in grid]
                self.assertTrue(all(a > b > 0 for a, b in zip(values, values[1:])))

    def test_from_z_matches_solved_profile(self):
        d = um(30.0)
        profile = z_from_separation(self.model, self.bulk, d)
        result = pressure_from_z(self.model, self.bulk, profile.z, one_minus_z=profile.one_minus_z)
        self.assertEqual(result.value, chameleon_pressure(self.model, self.rho, d).value)
        self.assertTrue(math.isclose(result.m_b_d, profile.m_b_d, rel_tol=1e-8))
        self.assertEqual(result.regime, INTERMEDIATE)
        self.assertFalse(result.fully_screened)

    def test_bracket_series_matches_direct(self):
        for delta in (1e-4, 1e-5):
            with self.subTest(delta=delta):
                series = pressure_bracket(self.model.p, delta, use_series=True)
                direct = pressure_bracket(self.model.p, delta, use_series=False)
                self.assertTrue(math.isclose(series, direct, rel_tol=1e-6))

    def test_energy_ratio_is_exact(self):
        for n in (1, 2, 4, 6):
            with self.subTest(n=n):
                model = ChameleonModel(n=n, beta=1e4)
                bulk = bulk_state(model, self.rho)
                profile = ProfileSolution(
                    z=0.5, phi_0=bulk.phi_b * 0.5 ** model.p, d=1.0,
                    regime=INTERMEDIATE, m_b_d=1.0, one_minus_z=0.5,
                )
                self.assertTrue(math.isclose(energy_ratio(model, bulk, profile), ((n + 1) / n) ** 2, rel_tol=1e-10))

    def test_oracle_energy_pressure(self):
        ratio = oracle_energy_pressure(self.model, self.bulk, um(30.0), um(1.0))
        self.assertTrue(math.isclose(ratio, 1.5625, rel_tol=1e-9))
        with self.assertRaises(DomainError):
            oracle_energy_pressure(self.model, self.bulk, um(1.0), um(2.0))

    def test_vacuum_asymptote_reference(self):
        value = pressure_natural_to_lab(vacuum_asymptotic_pressure(self.model, um(30.0)).value)
        self.assertAlmostEqual(value, 0.3325, delta=0.005)
        # same order as the commonly quoted 0.2 pN/cm^2
        self.assertGreater(value, 0.1)
        self.assertLess(value, 0.4)

    def test_vacuum_asymptote_power_law(self):
        near = vacuum_asymptotic_pressure(self.model, um(10.0)).value
        far = vacuum_asymptotic_pressure(self.model, um(20.0)).value
        self.assertAlmostEqual(near / far, 2.0 ** (8.0 / 6.0), places=10)

    def test_vacuum_slope_for_each_n(self):
        d = np.geomspace(10.0, 100.0, 10)
        for n in (1, 2, 4, 6):
            with self.subTest(n=n):
                model = ChameleonModel(n=n, beta=1e4)
                values = [vacuum_asymptotic_pressure(model, um(float(x))).value for x in d]
                slope, _ = np.polyfit(np.log(d), np.log(values), 1)
                self.assertAlmostEqual(slope / (-2.0 * n / (n + 2.0)), 1.0, delta=0.01)

    def test_decreasing_in_d_for_every_n(self):
        for n in range(1, 9):
            with self.subTest(n=n):
                model = ChameleonModel(n=n, beta=1e4)
                values = [chameleon_pressure(model, self.rho, um(x)).value for x in (5.0, 15.0, 30.0, 60.0, 120.0)]
                self.assertGreater(values[0], 0.0)
                for a, b in zip(values, values[1:]):
                    self.assertTrue(a > b or a == b == 0.0)

    def test_low_density_approaches_vacuum(self):
        d = um(30.0)
        vacuum = vacuum_asymptotic_pressure(self.model, d).value
        for rho_g_per_l in (1e-5, 1e-6):
            with self.subTest(rho=rho_g_per_l):
                result = chameleon_pressure(self.model, g_per_l_to_natural(rho_g_per_l), d)
                self.assertLessEqual(result.m_b_d, 0.02)
                self.assertTrue(math.isclose(result.value, vacuum, rel_tol=1e-3))

    def test_gas_screens_pressure(self):
        d = um(30.0)
        vacuum = vacuum_asymptotic_pressure(self.model, d).value
        values = [chameleon_pressure(self.model, g_per_l_to_natural(r), d).value for r in (0.1, 1.0, 5.0, 20.0)]
        self.assertLess(values[0], vacuum)
        self.assertTrue(all(a > b for a, b in zip(values, values[1:])))

    def test_exponential_tail(self):
        m_b = self.bulk.m_b
        m_b_d = np.linspace(12.0, 24.0, 7)
        log_f = [math.log(chameleon_pressure(self.model, self.rho, x / m_b).value) for x in m_b_d]
        slope, _ = np.polyfit(m_b_d / m_b, log_f, 1)
        self.assertAlmostEqual(slope / -m_b, 1.0, delta=0.05)

    def test_tail_slope_tracks_bulk_mass(self):
        slopes, masses = [], []
        for factor in (1.0, 4.0):
            rho = factor * self.rho
            m_b = bulk_state(self.model, rho).m_b
            d = np.linspace(12.0, 24.0, 7) / m_b
            log_f = np.log([chameleon_pressure(self.model, rho, x).value for x in d])
            slope, intercept = np.polyfit(d, log_f, 1)
            residual = log_f - (slope * d + intercept)
            r_squared = 1.0 - np.sum(residual ** 2) / np.sum((log_f - log_f.mean()) ** 2)
            self.assertGreater(r_squared, 0.999)
            slopes.append(slope)
            masses.append(m_b)
        self.assertAlmostEqual((slopes[1] / slopes[0]) / (masses[1] / masses[0]), 1.0, delta=0.1)
        self.assertAlmostEqual(masses[1] / masses[0], 4.0 ** 0.6, delta=1e-6)

    def test_fully_screened_pressure(self):
        result = chameleon_pressure(self.model, self.rho, um(2000.0))
        self.assertTrue(result.fully_screened)
        self.assertEqual(result.value, 0.0)

    def test_plate_screening_warning(self):
        d = um(30.0)
        solid = chameleon_pressure(self.model, self.rho, d, plate_rho=g_per_l_to_natural(2700.0))
        self.assertEqual(solid.warnings, ())
        with self.assertLogs("chameleon.services.pressure", "WARNING"):
            thin = chameleon_pressure(self.model, self.rho, d, plate_rho=self.rho)
        self.assertEqual(len(thin.warnings), 1)

    def test_invalid_separation(self):
        with self.assertRaises(DomainError):
            chameleon_pressure(self.model, self.rho, -1.0)
        with self.assertRaises(DomainError):
            vacuum_asymptotic_pressure(self.model, 0.0)
