# backend/experiment/services/figures.py

"""
Datasets behind the four standard plots.

fig1  chameleon pressure vs d (vacuum and one gas density) and the
      screening percentage for several beta*rho.
fig2  chameleon pressure at fixed d vs beta*rho for several n.
fig3  change of the chameleon pressure vs gas pressure for several beta,
      with the change of the patch pressure.
fig4  change of the total pressure vs gas pressure for several beta,
      with the no-chameleon baseline.

Changes are value(P) - value(0).
"""

import dataclasses
import logging
from typing import Callable, Dict, Optional

import numpy as np

from plates_core.exceptions import DomainError
from units.constants import MICRO
from units.conversions import g_per_l_to_natural, length_to_natural

from ..domain import COMPONENTS, FIGURES, Dataset, ExperimentConfig
from .pressures import breakdown_at, chameleon_lab_pressure, screening_percentage
from .sweeps import map_points

logger = logging.getLogger(__name__)


def _tag(value: float) -> str:
    return f"{value:g}"


def _fig1(config: ExperimentConfig, workers) -> Dataset:
    fig = config.figure
    model = config.model
    ratios = fig.beta_rho_g_per_l
    columns = (
        ("d_um", "F_vacuum", f"F_rho{_tag(fig.rho_g_per_l)}")
        + tuple(f"screening_pct_br{_tag(br)}" for br in ratios)
    )

    def row(d_um: float):
        d_nat = length_to_natural(d_um * MICRO)
        screening = tuple(
            screening_percentage(model, g_per_l_to_natural(br / model.beta), d_nat) for br in ratios
        )
        return (
            d_um,
            chameleon_lab_pressure(model, 0.0, d_um),
            chameleon_lab_pressure(model, fig.rho_g_per_l, d_um),
        ) + screening

    grid = [float(v) for v in np.geomspace(*fig.d_range_um, fig.points)]
    return Dataset(columns, tuple(map_points(row, grid, variable="d_um", workers=workers)), "fig1")


def _fig2(config: ExperimentConfig, workers) -> Dataset:
    fig = config.figure
    models = [dataclasses.replace(config.model, n=n) for n in fig.n_values]
    columns = ("beta_rho_g_per_l",) + tuple(f"F_n{n}" for n in fig.n_values)

    def row(beta_rho: float):
        rho = beta_rho / config.model.beta
        return (beta_rho,) + tuple(chameleon_lab_pressure(m, rho, config.d_um) for m in models)

    grid = [float(v) for v in np.geomspace(*fig.beta_rho_range_g_per_l, fig.points)]
    return Dataset(columns, tuple(map_points(row, grid, variable="beta_rho", workers=workers)), "fig2")


def _pressure_series(config: ExperimentConfig, workers, extract: Callable, last: Callable, name: str, labels):
    """Rows of value(P) - value(0) per beta, plus one beta-independent column."""
    fig = config.figure
    configs = [
        dataclasses.replace(
            config,
            model=dataclasses.replace(config.model, beta=beta),
            include=frozenset(COMPONENTS),
        )
        for beta in fig.beta_values
    ]

    def absolute(p_atm: float):
        rows = [breakdown_at(c, config.d_um, p_atm) for c in configs]
        return tuple(extract(b) for b in rows) + (last(rows[0]),)

    reference = absolute(0.0)
    grid = [float(v) for v in np.linspace(*fig.pressure_range_atm, fig.points)]
    values = map_points(absolute, grid, variable="P_atm", workers=workers)
    rows = tuple(
        (p_atm,) + tuple(v - r for v, r in zip(point, reference))
        for p_atm, point in zip(grid, values)
    )
    columns = ("P_atm",) + tuple(f"{labels[0]}{_tag(b)}" for b in fig.beta_values) + (labels[1],)
    return Dataset(columns, rows, name)


def _fig3(config: ExperimentConfig, workers) -> Dataset:
    return _pressure_series(
        config, workers,
        extract=lambda b: b.chameleon,
        last=lambda b: b.electrostatic,
        name="fig3",
        labels=("dF_cham_beta", "dF_el"),
    )


def _fig4(config: ExperimentConfig, workers) -> Dataset:
    return _pressure_series(
        config, workers,
        extract=lambda b: b.total,
        last=lambda b: b.casimir + b.electrostatic,
        name="fig4",
        labels=("dF_total_beta", "dF_baseline"),
    )


_BUILDERS: Dict[str, Callable] = {
    "fig1": _fig1,
    "fig2": _fig2,
    "fig3": _fig3,
    "fig4": _fig4,
}


def figure_dataset(which: str, config: ExperimentConfig, workers: Optional[int] = None) -> Dataset:
    if which not in FIGURES:
        raise DomainError(f"Unknown figure {which!r}; choose from {', '.join(FIGURES)}")
    logger.info("Building %s dataset", which)
    return _BUILDERS[which](config, workers)
