# backend/cli/output.py

"""
CSV writer: a ``#`` metadata preamble (version, configuration hash, regime
thresholds, the echoed configuration) followed by a header row and data rows.
Floats are written with 17 significant digits so they read back exactly.
"""

import csv
import hashlib
import io
import math
from typing import Iterable, List, Sequence, Tuple

from plates_core import __version__
from plates_core.conf import plates_setting

from .config import ECHO_PREFIX


def format_cell(value) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, int):
        return str(value)
    if isinstance(value, float):
        if math.isnan(value):
            return "nan"
        return "%.17g" % value
    return str(value)


def config_hash(config_text: str) -> str:
    return hashlib.sha256(config_text.encode("utf-8")).hexdigest()


def metadata_lines(command: str, config_text: str, extra: Sequence[Tuple[str, str]] = ()) -> List[str]:
    lines = [
        f"# version={__version__}",
        f"# command={command}",
        f"# config_sha256={config_hash(config_text)}",
        f"# regime_algebraic_max={format_cell(float(plates_setting('REGIME_ALGEBRAIC_MAX')))}",
        f"# regime_screened_min={format_cell(float(plates_setting('REGIME_SCREENED_MIN')))}",
        "# vacuum_baseline=asymptote",
        "# pressure_unit=pN/cm^2",
    ]
    lines += [f"# {key}={value}" for key, value in extra]
    lines += [ECHO_PREFIX + line for line in config_text.splitlines()]
    return lines


def render_csv(
    command: str,
    config_text: str,
    columns: Sequence[str],
    rows: Iterable[Sequence],
    extra: Sequence[Tuple[str, str]] = (),
) -> str:
    buffer = io.StringIO()
    for line in metadata_lines(command, config_text, extra):
        buffer.write(line + "\n")
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(columns)
    for row in rows:
        writer.writerow([format_cell(v) for v in row])
    return buffer.getvalue()


def gnuplot_script(csv_path: str, columns: Sequence[str], title: str) -> str:
    """Companion gnuplot script plotting every column against the first."""
    log_x = columns[0] in ("d_um", "beta_rho_g_per_l")
    lines = [
        "set datafile separator ','",
        "set datafile commentschars '#'",
        "set key autotitle columnhead",
        f"set title '{title}'",
        f"set xlabel '{columns[0]}'",
    ]
    if log_x:
        lines.append("set logscale x")
    plots = [f"'{csv_path}' using 1:{i} with linespoints" for i in range(2, len(columns) + 1)]
    lines.append("plot " + ", \\\n     ".join(plots))
    return "\n".join(lines) + "\n"
