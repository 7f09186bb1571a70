import csv
import io
import math
import tempfile
from pathlib import Path
from unittest import mock

from django.core.management import call_command
from django.core.management.base import CommandError
from django.test import SimpleTestCase

from chameleon.domain import ALGEBRAIC
from experiment.domain import CASIMIR, ELECTROSTATIC, SWEEP_D
from plates_core.exceptions import ConfigError, NumericalError

from .config import format_config, load_config_text, parse_config
from .output import format_cell
from .services import CliCommand, run


def read_rows(text):
    body = [line for line in text.splitlines() if not line.startswith("#")]
    return list(csv.DictReader(body))


def metadata(text):
    pairs = {}
    for line in text.splitlines():
        if line.startswith("# ") and "=" in line and not line.startswith("# config: "):
            key, value = line[2:].split("=", 1)
            pairs[key] = value
    return pairs


def invoke(*args):
    out = io.StringIO()
    call_command(*args, stdout=out)
    return out.getvalue()


class ParseConfigTests(SimpleTestCase):
    def test_headline_example(self):
        config = parse_config("model.n=4\nmodel.beta=1e4\ngeometry.d_um=30")
        self.assertEqual(config.model.p, 0.2)
        self.assertEqual(config.model.beta, 1e4)
        self.assertEqual(config.d_um, 30.0)

    def test_empty_text_gives_defaults(self):
        config = parse_config("")
        self.assertEqual(config.model.n, 4)
        self.assertEqual(config.gas.name, "Xe")
        self.assertEqual(config.pressure_atm, 0.0)
        self.assertEqual(config.patch.sigma_l, 0.05)
        self.assertEqual(config.patch.lambda_max, 200e-6)

    def test_comments_and_blank_lines(self):
        config = parse_config("# scenario\n\nmodel.n = 2   \n")
        self.assertEqual(config.model.n, 2)

    def test_n_below_one_names_key_and_line(self):
        with self.assertRaises(ConfigError) as ctx:
            parse_config("model.beta=1e4\nmodel.n=0")
        self.assertEqual(ctx.exception.key, "model.n")
        self.assertEqual(ctx.exception.line, 2)
        self.assertIn("n must be ≥ 1", str(ctx.exception))

    def test_missing_unit_suffix(self):
        with self.assertRaises(ConfigError) as ctx:
            parse_config("geometry.d=30")
        self.assertEqual(ctx.exception.key, "geometry.d")
        self.assertIn("missing unit suffix", str(ctx.exception))
        self.assertIn("geometry.d_um", ctx.exception.suggestions)

    def test_unknown_key_suggests_close_match(self):
        with self.assertRaises(ConfigError) as ctx:
            parse_config("model.n=4\nmodel.betta=1e4")
        self.assertEqual(ctx.exception.line, 2)
        self.assertIn("unknown key", str(ctx.exception))
        self.assertIn("model.beta", ctx.exception.suggestions)

    def test_out_of_range_values(self):
        for text in ("geometry.d_um=-1", "gas.pressure_atm=-0.1", "model.beta=0", "sweep.points=1"):
            with self.subTest(text=text):
                with self.assertRaises(ConfigError):
                    parse_config(text)

    def test_not_a_number(self):
        with self.assertRaises(ConfigError) as ctx:
            parse_config("patch.sigma_l_V=abc")
        self.assertEqual(ctx.exception.key, "patch.sigma_l_V")

    def test_duplicate_key(self):
        with self.assertRaises(ConfigError) as ctx:
            parse_config("geometry.d_um=30\ngeometry.d_nm=30000")
        self.assertIn("set more than once", str(ctx.exception))

    def test_overrides_win(self):
        config = parse_config("geometry.d_um=30", overrides=("geometry.d_um=45",))
        self.assertEqual(config.d_um, 45.0)

    def test_override_without_equals(self):
        with self.assertRaises(ConfigError):
            parse_config("", overrides=("geometry.d_um",))

    def test_alternative_units(self):
        config = parse_config("geometry.d_nm=30000\npatch.sigma_l_V=0.02\npatch.lambda_min_nm=15000")
        self.assertEqual(config.d_um, 30.0)
        self.assertEqual(config.patch.sigma_l, 0.02)
        self.assertEqual(config.patch.lambda_min, 15e-6)

    def test_sweep_bounds_must_match_variable(self):
        with self.assertRaises(ConfigError) as ctx:
            parse_config("sweep.variable=d\nsweep.from_atm=0.1")
        self.assertEqual(ctx.exception.key, "sweep.from_atm")
        config = parse_config("sweep.variable=d\nsweep.from_um=20\nsweep.to_um=40\nsweep.points=3")
        self.assertEqual(config.sweep.variable, SWEEP_D)
        self.assertEqual(config.sweep.values()[0], 20.0)

    def test_include_components(self):
        config = parse_config("experiment.include=casimir, electrostatic")
        self.assertEqual(config.include, frozenset({CASIMIR, ELECTROSTATIC}))
        with self.assertRaises(ConfigError):
            parse_config("experiment.include=gravity")

    def test_unknown_gas_needs_properties(self):
        with self.assertRaises(ConfigError):
            parse_config("gas.name=Kr")
        config = parse_config(
            "gas.name=Kr\ngas.density_coeff_g_per_l_per_atm=3.49\n"
            "gas.alpha_Fm2=2.8e-40\ngas.temperature_K=293.15"
        )
        self.assertEqual(config.gas.name, "Kr")

    def test_format_is_stable(self):
        texts = (
            "",
            "model.n=6\nmodel.beta=3.3e4\ngas.pressure_atm=0.123\ngeometry.d_nm=12345.6",
            "patch.sigma_l_mV=12.3456\npatch.sigma_s_V=0.0071\nmodel.plate_density_g_per_l=7.9",
            "sweep.variable=beta_rho\nsweep.from_g_per_l=10\nfigure.n_values=1,3\nfigure.beta_values=2e3",
        )
        for text in texts:
            with self.subTest(text=text):
                first = format_config(parse_config(text))
                self.assertEqual(format_config(parse_config(first)), first)

    def test_format_records_every_key(self):
        text = format_config(parse_config(""))
        for key in ("model.n=4", "gas.name=Xe", "geometry.d_um=30.0", "patch.sigma_l_mV=50", "sweep.variable=P"):
            self.assertIn(key + "\n", text)

    def test_load_config_from_previous_output(self):
        output = "# version=1\n# config: model.n=2\n# config: geometry.d_um=40.0\nd_um,total\n40,1\n"
        self.assertEqual(load_config_text(output), "model.n=2\ngeometry.d_um=40.0\n")
        self.assertEqual(load_config_text("model.n=2\n"), "model.n=2\n")


class FormatCellTests(SimpleTestCase):
    def test_cells(self):
        self.assertEqual(format_cell(None), "")
        self.assertEqual(format_cell(True), "true")
        self.assertEqual(format_cell(3), "3")
        self.assertEqual(format_cell(0.1), "0.10000000000000001")
        self.assertEqual(float(format_cell(1 / 3)), 1 / 3)
        self.assertEqual(format_cell(math.nan), "nan")


class PointCommandTests(SimpleTestCase):
    def test_headline_values(self):
        text = invoke("point")
        rows = read_rows(text)
        self.assertEqual(len(rows), 1)
        row = rows[0]
        self.assertAlmostEqual(float(row["chameleon"]), 0.3325, delta=0.005)
        self.assertAlmostEqual(float(row["casimir"]), 0.1605, delta=0.0016)
        self.assertGreater(float(row["electrostatic"]), 1e3)
        self.assertEqual(row["regime"], ALGEBRAIC)
        self.assertEqual(row["fully_screened"], "false")

    def test_metadata_block(self):
        text = invoke("point")
        meta = metadata(text)
        self.assertEqual(meta["command"], "point")
        self.assertEqual(len(meta["config_sha256"]), 64)
        self.assertEqual(float(meta["regime_algebraic_max"]), 0.1)
        self.assertEqual(float(meta["regime_screened_min"]), 10.0)
        self.assertIn("# config: model.n=4", text)
        self.assertNotIn("# config: model.n=4", text.split("d_um,")[-1])

    def test_reruns_are_byte_identical(self):
        args = ("point", "--set", "gas.pressure_atm=0.3", "--set", "geometry.d_um=42.5")
        self.assertEqual(invoke(*args), invoke(*args))

    def test_echoed_config_reproduces_output(self):
        first = invoke("point", "--set", "gas.pressure_atm=0.2", "--set", "model.n=2", "--set", "patch.sigma_s_mV=33.3")
        with tempfile.TemporaryDirectory() as tmp:
            previous = Path(tmp) / "previous.csv"
            previous.write_text(first, encoding="utf-8")
            second = invoke("point", "--config", str(previous))
        self.assertEqual(first, second)

    def test_config_file_and_output_file(self):
        with tempfile.TemporaryDirectory() as tmp:
            config = Path(tmp) / "run.cfg"
            config.write_text("model.n=4\nmodel.beta=1e4\ngeometry.d_um=30\n", encoding="utf-8")
            target = Path(tmp) / "out.csv"
            stdout = invoke("point", "--config", str(config), "--output", str(target))
            self.assertEqual(stdout, "")
            self.assertEqual(target.read_text(encoding="utf-8"), invoke("point", "--config", str(config)))

    def test_config_error_exit_code(self):
        with self.assertRaises(CommandError) as ctx:
            invoke("point", "--set", "model.n=0")
        self.assertEqual(ctx.exception.returncode, 2)
        self.assertIn("model.n", str(ctx.exception))

    def test_missing_config_file_exit_code(self):
        with self.assertRaises(CommandError) as ctx:
            invoke("point", "--config", "/nonexistent/plates.cfg")
        self.assertEqual(ctx.exception.returncode, 4)


class OtherCommandTests(SimpleTestCase):
    def test_sweep_rows(self):
        text = invoke("sweep", "--set", "sweep.points=3", "--set", "sweep.to_atm=0.2")
        rows = read_rows(text)
        self.assertEqual([float(r["P_atm"]) for r in rows], [0.0, 0.1, 0.2])
        self.assertEqual(metadata(text)["sweep_variable"], "P")

    def test_sweep_workers_do_not_change_output(self):
        args = ("sweep", "--set", "sweep.points=4", "--set", "sweep.variable=d", "--set", "sweep.to_um=60")
        self.assertEqual(invoke(*args, "--workers", "1"), invoke(*args, "--workers", "3"))

    def test_figure_columns_and_plot_script(self):
        with tempfile.TemporaryDirectory() as tmp:
            data = Path(tmp) / "fig1.csv"
            script = Path(tmp) / "fig1.gp"
            invoke("figure", "fig1", "--set", "figure.points=3", "--output", str(data), "--plot-script", str(script))
            text = data.read_text(encoding="utf-8")
            plot = script.read_text(encoding="utf-8")
        rows = read_rows(text)
        self.assertEqual(len(rows), 3)
        self.assertEqual(list(rows[0])[:2], ["d_um", "F_vacuum"])
        self.assertEqual(metadata(text)["command"], "figure fig1")
        self.assertIn("set logscale x", plot)
        self.assertIn(str(data), plot)

    def test_unknown_figure_rejected(self):
        with self.assertRaises(CommandError):
            invoke("figure", "fig9")

    def test_oracle_agreement(self):
        text = invoke("oracle")
        rows = read_rows(text)
        self.assertEqual(len(rows), 36)
        self.assertLess(max(float(r["rel_diff"]) for r in rows), 1e-6)
        self.assertLess(float(metadata(text)["max_rel_diff"]), 1e-6)

    def test_sensitivity(self):
        rows = read_rows(invoke("sensitivity"))
        self.assertEqual(len(rows), 1)
        self.assertGreater(float(rows[0]["delta_sigma_uV"]), 0.1)
        self.assertLess(float(rows[0]["delta_sigma_uV"]), 0.3)
        self.assertGreater(float(rows[0]["delta_d_nm"]), 0.05)
        self.assertLess(float(rows[0]["delta_d_nm"]), 0.2)

    def test_numerical_failure_exit_code(self):
        with self.assertRaises(CommandError) as ctx:
            invoke("sensitivity", "--set", "patch.sigma_l_mV=0", "--set", "patch.sigma_s_mV=0")
        self.assertEqual(ctx.exception.returncode, 3)


class RunTests(SimpleTestCase):
    def test_figure_without_name(self):
        result = run(CliCommand(subcommand="figure"))
        self.assertEqual(result.status, 2)

    def test_numerical_error_is_mapped(self):
        with mock.patch("cli.services.runner.breakdown_at", side_effect=NumericalError("no convergence")):
            with self.assertLogs("cli.services.runner", level="ERROR"):
                result = run(CliCommand(subcommand="point"))
        self.assertEqual(result.status, 3)
        self.assertIn("no convergence", result.message)

    def test_stream_output(self):
        stream = io.StringIO()
        result = run(CliCommand(subcommand="point", overrides=("experiment.include=casimir",)), stream)
        self.assertEqual(result.status, 0)
        self.assertEqual(stream.getvalue(), result.text)
        row = read_rows(result.text)[0]
        self.assertEqual(float(row["total"]), float(row["casimir"]))
