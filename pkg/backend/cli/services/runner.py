# backend/cli/services/runner.py

"""
Runs one subcommand end to end: configuration, computation, CSV output.
Errors are logged and mapped to exit statuses instead of propagating.
"""

import logging
from dataclasses import dataclass, field
from pathlib import Path
from typing import List, Optional, Sequence, TextIO, Tuple

from experiment.domain import ExperimentConfig, PressureBreakdown
from experiment.services import (
    breakdown_at,
    figure_dataset,
    oracle_table,
    sensitivity_requirements,
    sweep,
)
from plates_core.exceptions import ConfigError, DomainError, NumericalError
from units.constants import MICRO

from ..config import format_config, load_config_text, parse_config
from ..output import gnuplot_script, render_csv

logger = logging.getLogger(__name__)

POINT = "point"
SWEEP = "sweep"
FIGURE = "figure"
ORACLE = "oracle"
SENSITIVITY = "sensitivity"
SUBCOMMANDS = (POINT, SWEEP, FIGURE, ORACLE, SENSITIVITY)

EXIT_OK = 0
EXIT_CONFIG = 2
EXIT_NUMERICAL = 3
EXIT_IO = 4

ORACLE_TOLERANCE = 1e-6

BREAKDOWN_COLUMNS = (
    "d_um", "P_atm", "rho_g_per_l", "chameleon", "casimir", "electrostatic", "total",
    "regime", "m_b_d", "oracle_ratio", "fully_screened", "warnings",
)


@dataclass(frozen=True)
class CliCommand:
    subcommand: str
    config_path: Optional[str] = None
    overrides: Tuple[str, ...] = ()
    output_path: Optional[str] = None
    figure: Optional[str] = None
    workers: Optional[int] = None
    plot_script_path: Optional[str] = None


@dataclass
class RunResult:
    status: int
    message: str = ""
    text: str = ""
    rows: int = 0
    notes: List[str] = field(default_factory=list)


def _breakdown_row(b: PressureBreakdown) -> tuple:
    return (
        b.d_um, b.pressure_atm, b.rho_g_per_l, b.chameleon, b.casimir, b.electrostatic, b.total,
        b.regime, b.m_b_d, b.oracle_ratio, b.fully_screened, "; ".join(b.warnings),
    )


def _compute(command: CliCommand, config: ExperimentConfig):
    """Columns, rows, a label for the metadata and extra metadata pairs."""
    if command.subcommand == POINT:
        result = breakdown_at(config, config.d_um, config.pressure_atm)
        return BREAKDOWN_COLUMNS, [_breakdown_row(result)], POINT, ()

    if command.subcommand == SWEEP:
        rows = [_breakdown_row(b) for b in sweep(config, workers=command.workers)]
        return BREAKDOWN_COLUMNS, rows, SWEEP, (("sweep_variable", config.sweep.variable),)

    if command.subcommand == FIGURE:
        data = figure_dataset(command.figure, config, workers=command.workers)
        return data.columns, list(data.rows), f"{FIGURE} {command.figure}", ()

    if command.subcommand == ORACLE:
        data = oracle_table(config, n_values=config.figure.n_values)
        worst = max(data.column("rel_diff"))
        if worst >= ORACLE_TOLERANCE:
            raise NumericalError(f"oracle mismatch: max rel_diff {worst:.3e} >= {ORACLE_TOLERANCE:g}")
        return data.columns, list(data.rows), ORACLE, (("max_rel_diff", "%.17g" % worst),)

    if command.subcommand == SENSITIVITY:
        d_m = config.d_um * MICRO
        result = sensitivity_requirements(config.patch, d_m, config.sensitivity_target)
        row = (config.d_um, config.sensitivity_target, result.delta_sigma * 1e6, result.delta_d * 1e9)
        return ("d_um", "target_pN_per_cm2", "delta_sigma_uV", "delta_d_nm"), [row], SENSITIVITY, ()

    raise ConfigError(f"unknown subcommand {command.subcommand!r}")


def _read_config(command: CliCommand) -> str:
    if not command.config_path:
        return ""
    return load_config_text(Path(command.config_path).read_text(encoding="utf-8"))


def run(command: CliCommand, stream: Optional[TextIO] = None) -> RunResult:
    """
    Execute command and write its CSV to command.output_path, or to stream
    when no path is given. Identical inputs give byte-identical output.
    """
    try:
        if command.subcommand == FIGURE and not command.figure:
            raise ConfigError("figure needs one of fig1, fig2, fig3, fig4")
        config = parse_config(_read_config(command), command.overrides)
        config_text = format_config(config)

        columns, rows, label, extra = _compute(command, config)
        text = render_csv(label, config_text, columns, rows, extra)

        if command.output_path:
            Path(command.output_path).write_text(text, encoding="utf-8", newline="")
        elif stream is not None:
            stream.write(text)

        if command.plot_script_path:
            target = command.output_path or "data.csv"
            Path(command.plot_script_path).write_text(
                gnuplot_script(target, columns, label), encoding="utf-8", newline="",
            )
    except ConfigError as exc:
        logger.error("Configuration error: %s", exc)
        return RunResult(EXIT_CONFIG, f"configuration error: {exc}")
    except (DomainError, NumericalError) as exc:
        logger.error("Computation failed: %s", exc)
        return RunResult(EXIT_NUMERICAL, f"computation failed: {exc}")
    except OSError as exc:
        logger.error("I/O error: %s", exc)
        return RunResult(EXIT_IO, f"I/O error: {exc}")

    logger.info("%s: wrote %d row(s)", label, len(rows))
    return RunResult(EXIT_OK, text=text, rows=len(rows))
