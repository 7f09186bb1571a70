import math

from django.test import SimpleTestCase

from plates_core.exceptions import DomainError

from .constants import ATM_TO_PA, MICRO, get_constants
from .conversions import (
    atm_to_pa,
    energy_from_inverse_length,
    g_per_l_to_natural,
    length_from_inverse_energy,
    length_to_natural,
    length_to_si,
    mass_density_to_natural,
    mass_density_to_si,
    pressure_lab_to_pa,
    pressure_natural_to_lab,
    pressure_natural_to_si,
    pressure_pa_to_lab,
)
from .quantities import DimensionError, Quantity


class ConstantsTests(SimpleTestCase):
    def test_hbar_c_in_gev_metres(self):
        self.assertAlmostEqual(get_constants().hbar_c / 1.973269804e-16, 1.0, places=8)

    def test_theory_scales_follow_settings(self):
        with self.settings(CHAMELEON_PLATES={"LAMBDA_GEV": 1e-3}):
            self.assertEqual(get_constants().lambda_de, 1e-3)
        self.assertEqual(get_constants().lambda_de, 2.4e-12)

    def test_atmosphere(self):
        self.assertEqual(ATM_TO_PA, 101325.0)


class LengthConversionTests(SimpleTestCase):
    def test_inverse_gev_in_metres(self):
        self.assertAlmostEqual(length_from_inverse_energy(1.0) / 1.9733e-16, 1.0, places=4)

    def test_dark_energy_length(self):
        # 1 / Lambda for Lambda = 2.4 meV is about 82.2 microns
        length_um = length_from_inverse_energy(get_constants().lambda_de) / MICRO
        self.assertAlmostEqual(length_um, 82.2, delta=0.1)

    def test_round_trip(self):
        for metres in (1e-9, 30e-6, 1.0):
            self.assertAlmostEqual(length_to_si(length_to_natural(metres)) / metres, 1.0, places=12)

    def test_energy_from_length_is_inverse(self):
        energy = energy_from_inverse_length(30e-6)
        self.assertAlmostEqual(length_from_inverse_energy(energy) / 30e-6, 1.0, places=12)

    def test_rejects_non_positive(self):
        with self.assertRaises(DomainError):
            length_from_inverse_energy(0.0)
        with self.assertRaises(DomainError):
            energy_from_inverse_length(-1.0)


class DensityConversionTests(SimpleTestCase):
    def test_one_gram_per_litre(self):
        self.assertAlmostEqual(g_per_l_to_natural(1.0) / 4.31e-21, 1.0, delta=2e-3)

    def test_round_trip(self):
        self.assertAlmostEqual(mass_density_to_si(mass_density_to_natural(5.0)), 5.0, places=12)

    def test_negative_density(self):
        with self.assertRaises(DomainError):
            mass_density_to_natural(-1.0)

    def test_zero_density(self):
        self.assertEqual(mass_density_to_natural(0.0), 0.0)


class PressureConversionTests(SimpleTestCase):
    def test_pascal_in_lab_units(self):
        self.assertAlmostEqual(pressure_pa_to_lab(1.0), 1e8, places=4)
        self.assertAlmostEqual(pressure_lab_to_pa(1e8), 1.0, places=12)

    def test_gev4_in_lab_units(self):
        self.assertAlmostEqual(pressure_natural_to_lab(1.0) / 2.085e45, 1.0, delta=1e-3)

    def test_dark_energy_density(self):
        lam = get_constants().lambda_de
        self.assertAlmostEqual(pressure_natural_to_lab(lam ** 4), 0.0692, delta=5e-4)

    def test_natural_to_si(self):
        self.assertAlmostEqual(pressure_natural_to_si(1.0) / 2.085e37, 1.0, delta=1e-3)

    def test_atm(self):
        self.assertEqual(atm_to_pa(0.5), 0.5 * 101325.0)


class QuantityTests(SimpleTestCase):
    def test_energy_power_of_si_pressure(self):
        self.assertEqual(Quantity.si(1.0, kg=1, m=-1, s=-2).energy_power(), 4)

    def test_add_requires_same_dimension(self):
        with self.assertRaises(DimensionError):
            Quantity.natural(1.0, 4) + Quantity.natural(1.0, 1)
        with self.assertRaises(DimensionError):
            Quantity.natural(1.0, 4) - Quantity.si(1.0, kg=1, m=-1, s=-2)

    def test_multiplication_adds_exponents(self):
        product = Quantity.natural(2.0, 1) * Quantity.natural(3.0, 3)
        self.assertEqual(product.dimension, (4,))
        self.assertEqual(product.value, 6.0)
        self.assertEqual((product / Quantity.natural(2.0, 1)).dimension, (3,))
        self.assertEqual((Quantity.natural(2.0, -1) ** 2).dimension, (-2,))

    def test_scalar_arithmetic(self):
        q = 2 * Quantity.si(1.5, m=1)
        self.assertEqual(q.value, 3.0)
        self.assertEqual((q / 3).value, 1.0)
        self.assertEqual((-q).value, -3.0)

    def test_to_si_checks_energy_power(self):
        with self.assertRaises(DimensionError):
            Quantity.natural(1.0, 4).to_si(m=1)

    def test_current_has_no_natural_image(self):
        with self.assertRaises(DimensionError):
            Quantity.si(1.0, A=1).to_natural()

    def test_non_integer_power(self):
        with self.assertRaises(DimensionError):
            Quantity.natural(1.0, 1) ** 0.5

    def test_describe(self):
        self.assertEqual(Quantity.natural(1.0, 4).describe(), "GeV^4")
        self.assertEqual(Quantity.si(1.0, kg=1, m=-3).describe(), "kg^1 m^-3")

    def test_length_round_trip_through_quantity(self):
        metres = Quantity.si(30e-6, m=1)
        back = metres.to_natural().to_si(m=1)
        self.assertTrue(math.isclose(back.value, 30e-6, rel_tol=1e-13))
