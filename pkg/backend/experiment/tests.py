import dataclasses
import math

from django.test import SimpleTestCase

from background.services import casimir_pressure
from chameleon.domain import ALGEBRAIC, ChameleonModel
from chameleon.services import vacuum_asymptotic_pressure
from plates_core.exceptions import DomainError
from units.constants import MICRO
from units.conversions import g_per_l_to_natural, length_to_natural, pressure_natural_to_lab

from .domain import CASIMIR, ExperimentConfig, FigureSettings, SweepSpec
from .exceptions import SweepPointError
from .services import (
    breakdown_at,
    figure_dataset,
    map_points,
    oracle_table,
    pressure_changes,
    screening_percentage,
    sensitivity_requirements,
    sweep,
)


def um(value):
    return length_to_natural(value * 1e-6)


class BreakdownTests(SimpleTestCase):
    def setUp(self):
        self.config = ExperimentConfig()

    def test_single_component(self):
        config = dataclasses.replace(self.config, include=frozenset({CASIMIR}))
        result = breakdown_at(config, 30.0, 0.0)
        self.assertEqual(result.total, casimir_pressure(30.0 * MICRO, 1.0))
        self.assertEqual(result.chameleon, 0.0)
        self.assertEqual(result.electrostatic, 0.0)

    def test_vacuum_headline_values(self):
        result = breakdown_at(self.config, 30.0, 0.0)
        self.assertGreater(result.chameleon, 0.1)
        self.assertLess(result.chameleon, 0.4)
        self.assertAlmostEqual(result.casimir, 0.1605, delta=0.008)
        self.assertGreater(result.electrostatic, 1e3)
        self.assertLess(result.electrostatic, 4e3)
        self.assertEqual(result.regime, ALGEBRAIC)
        self.assertAlmostEqual(result.oracle_ratio, 1.5625, places=12)

    def test_total_is_sum_of_components(self):
        result = breakdown_at(self.config, 30.0, 0.25)
        self.assertEqual(result.total, result.chameleon + result.casimir + result.electrostatic)

    def test_gas_screens_chameleon(self):
        vacuum = breakdown_at(self.config, 30.0, 0.0)
        filled = breakdown_at(self.config, 30.0, 0.5)
        self.assertGreaterEqual(vacuum.chameleon - filled.chameleon, 0.05)
        self.assertAlmostEqual(filled.rho_g_per_l, 2.731, places=9)
        self.assertTrue(math.isclose(filled.oracle_ratio, 1.5625, rel_tol=1e-9))
        self.assertGreater(filled.electrostatic, vacuum.electrostatic)
        self.assertLess(filled.casimir, vacuum.casimir)

    def test_plate_check(self):
        config = dataclasses.replace(self.config, plate_rho_g_per_l=5.0)
        result = breakdown_at(config, 30.0, 0.5)
        self.assertTrue(any("plate" in w for w in result.warnings))

    def test_config_validation(self):
        with self.assertRaises(DomainError):
            ExperimentConfig(include=frozenset())
        with self.assertRaises(DomainError):
            ExperimentConfig(include=frozenset({"gravity"}))
        with self.assertRaises(DomainError):
            ExperimentConfig(d_um=0.0)


class ScreeningTests(SimpleTestCase):
    def setUp(self):
        self.model = ChameleonModel(n=4, beta=1e4)

    def test_increases_with_separation(self):
        rho = g_per_l_to_natural(5e4 / self.model.beta)
        self.assertGreater(
            screening_percentage(self.model, rho, um(50.0)),
            screening_percentage(self.model, rho, um(20.0)),
        )

    def test_increases_with_density(self):
        values = [
            screening_percentage(self.model, g_per_l_to_natural(br / self.model.beta), um(30.0))
            for br in (1e3, 1e4, 5e4, 1e5)
        ]
        self.assertTrue(all(a < b for a, b in zip(values, values[1:])))
        self.assertTrue(all(0.0 <= v <= 100.0 for v in values))

    def test_vanishes_without_gas(self):
        self.assertEqual(screening_percentage(self.model, 0.0, um(30.0)), 0.0)
        tiny = screening_percentage(self.model, g_per_l_to_natural(1e-6), um(30.0))
        self.assertLess(tiny, 0.1)

    def test_monotone_grid_over_n(self):
        for n in range(1, 9):
            model = ChameleonModel(n=n, beta=1e4)
            for br in (1e3, 1e5):
                rho = g_per_l_to_natural(br / model.beta)
                with self.subTest(n=n, beta_rho=br):
                    values = [screening_percentage(model, rho, um(d)) for d in (10.0, 30.0, 60.0)]
                    self.assertTrue(all(a <= b for a, b in zip(values, values[1:])))
            with self.subTest(n=n):
                low = screening_percentage(model, g_per_l_to_natural(0.1), um(30.0))
                high = screening_percentage(model, g_per_l_to_natural(10.0), um(30.0))
                self.assertLessEqual(low, high)


class SweepTests(SimpleTestCase):
    def test_distance_sweep(self):
        config = ExperimentConfig(sweep=SweepSpec(variable="d", start=10.0, stop=100.0, points=4, spacing="log"))
        rows = sweep(config)
        self.assertEqual(len(rows), 4)
        self.assertAlmostEqual(rows[0].d_um, 10.0)
        self.assertAlmostEqual(rows[-1].d_um, 100.0)
        self.assertTrue(all(a.chameleon > b.chameleon for a, b in zip(rows, rows[1:])))

    def test_beta_rho_sweep_sets_gas_pressure(self):
        config = ExperimentConfig(sweep=SweepSpec(variable="beta_rho", start=1e3, stop=1e5, points=3, spacing="log"))
        rows = sweep(config)
        for row, beta_rho in zip(rows, (1e3, 1e4, 1e5)):
            self.assertTrue(math.isclose(row.rho_g_per_l, beta_rho / 1e4, rel_tol=1e-12))
            self.assertTrue(math.isclose(row.pressure_atm * 5.462, row.rho_g_per_l, rel_tol=1e-12))

    def test_thread_count_does_not_change_results(self):
        config = ExperimentConfig(sweep=SweepSpec(variable="P", start=0.0, stop=0.5, points=4))
        self.assertEqual(sweep(config, workers=1), sweep(config, workers=3))

    def test_failing_point_is_reported(self):
        def func(value):
            if value > 1.5:
                raise DomainError("too large")
            return value

        with self.assertLogs("experiment.services.sweeps", "ERROR"):
            with self.assertRaises(SweepPointError) as ctx:
                map_points(func, [1.0, 2.0, 3.0], variable="d_um")
        self.assertEqual(ctx.exception.index, 1)
        self.assertEqual(ctx.exception.value, 2.0)

    def test_pressure_changes(self):
        self.assertEqual(pressure_changes([3.0, 2.5, 1.0], 3.0), [0.0, -0.5, -2.0])

    def test_sweep_spec_validation(self):
        with self.assertRaises(DomainError):
            SweepSpec(points=1)
        with self.assertRaises(DomainError):
            SweepSpec(variable="d", start=0.0, stop=10.0)
        with self.assertRaises(DomainError):
            SweepSpec(variable="P", start=0.0, stop=0.5, spacing="log")
        with self.assertRaises(DomainError):
            SweepSpec(variable="T")
        self.assertEqual(SweepSpec(variable="P", start=0.0, stop=0.5, points=3).values(), [0.0, 0.25, 0.5])


class FigureTests(SimpleTestCase):
    def setUp(self):
        self.config = ExperimentConfig(figure=FigureSettings(points=5))

    def test_fig1(self):
        data = figure_dataset("fig1", self.config)
        self.assertEqual(
            data.columns,
            ("d_um", "F_vacuum", "F_rho5", "screening_pct_br10000", "screening_pct_br50000", "screening_pct_br100000"),
        )
        model = self.config.model
        for d_um, vacuum in zip(data.column("d_um"), data.column("F_vacuum")):
            expected = pressure_natural_to_lab(vacuum_asymptotic_pressure(model, um(d_um)).value)
            self.assertEqual(vacuum, expected)
        for label in data.columns[3:]:
            curve = data.column(label)
            self.assertTrue(all(a <= b for a, b in zip(curve, curve[1:])), label)

    def test_fig2_plateau_and_decrease(self):
        config = dataclasses.replace(
            self.config, figure=FigureSettings(points=4, beta_rho_range_g_per_l=(1.0, 1e6)),
        )
        data = figure_dataset("fig2", config)
        self.assertEqual(data.columns, ("beta_rho_g_per_l", "F_n1", "F_n2", "F_n4", "F_n6"))
        for n in (1, 2, 4, 6):
            curve = data.column(f"F_n{n}")
            self.assertTrue(all(a > b for a, b in zip(curve, curve[1:])))
            model = ChameleonModel(n=n, beta=1e4)
            plateau = pressure_natural_to_lab(vacuum_asymptotic_pressure(model, um(30.0)).value)
            self.assertAlmostEqual(curve[0] / plateau, 1.0, delta=0.05)

    def test_fig3_opposite_signs(self):
        data = figure_dataset("fig3", self.config)
        self.assertEqual(data.columns, ("P_atm", "dF_cham_beta1000", "dF_cham_beta10000", "dF_cham_beta100000", "dF_el"))
        pressures = data.column("P_atm")
        electrostatic = data.column("dF_el")
        self.assertEqual(electrostatic[0], 0.0)
        slope = electrostatic[-1] / pressures[-1]
        self.assertGreater(slope, 0.0)
        for p, value in zip(pressures[1:], electrostatic[1:]):
            self.assertTrue(math.isclose(value, slope * p, rel_tol=1e-9))
        for label in data.columns[1:4]:
            curve = data.column(label)
            self.assertTrue(all(v <= 0.0 for v in curve))
            self.assertTrue(all(a >= b for a, b in zip(curve, curve[1:])))
        self.assertLessEqual(data.column("dF_cham_beta10000")[-1], -0.05)

    def test_fig4_anomaly(self):
        data = figure_dataset("fig4", self.config)
        anomaly = [
            abs(total - base)
            for total, base in zip(data.column("dF_total_beta100000"), data.column("dF_baseline"))
        ]
        self.assertGreaterEqual(max(anomaly), 0.01)

    def test_stable_across_runs_and_workers(self):
        self.assertEqual(figure_dataset("fig3", self.config, workers=1), figure_dataset("fig3", self.config, workers=4))

    def test_unknown_figure(self):
        with self.assertRaises(DomainError):
            figure_dataset("fig5", self.config)


class SensitivityTests(SimpleTestCase):
    def test_headline_requirements(self):
        result = sensitivity_requirements(ExperimentConfig().patch, 30e-6, 0.01)
        self.assertGreater(result.delta_sigma, 0.1e-6)
        self.assertLess(result.delta_sigma, 20e-6)
        self.assertGreater(result.delta_d, 0.01e-9)
        self.assertLess(result.delta_d, 3e-9)

    def test_larger_target_needs_less_stability(self):
        patch = ExperimentConfig().patch
        small = sensitivity_requirements(patch, 30e-6, 0.01)
        large = sensitivity_requirements(patch, 30e-6, 0.02)
        self.assertGreater(large.delta_sigma, small.delta_sigma)
        self.assertGreater(large.delta_d, small.delta_d)

    def test_invalid_target(self):
        with self.assertRaises(DomainError):
            sensitivity_requirements(ExperimentConfig().patch, 30e-6, 0.0)


class OracleTableTests(SimpleTestCase):
    def test_equivalence(self):
        data = oracle_table(ExperimentConfig())
        self.assertEqual(data.columns, ("n", "z", "d_eq5_um", "d_oracle_um", "rel_diff"))
        self.assertEqual(len(data.rows), 36)
        self.assertLess(max(data.column("rel_diff")), 1e-6)
