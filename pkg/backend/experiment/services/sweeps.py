# backend/experiment/services/sweeps.py

"""
Sweeps evaluate independent points, optionally on a thread pool. Results are
always returned in grid order, so output does not depend on the worker count.
"""

import logging
from concurrent.futures import ThreadPoolExecutor
from typing import Callable, List, Optional, Sequence, TypeVar

from plates_core.conf import plates_setting
from plates_core.exceptions import PlatesError

from ..domain import SWEEP_BETA_RHO, SWEEP_D, SWEEP_P, ExperimentConfig, PressureBreakdown
from ..exceptions import SweepPointError
from .pressures import breakdown_at

logger = logging.getLogger(__name__)

T = TypeVar("T")


def map_points(
    func: Callable[[float], T],
    values: Sequence[float],
    *,
    variable: str = "x",
    workers: Optional[int] = None,
) -> List[T]:
    """func over values in order; a failing point raises SweepPointError."""
    workers = int(workers or plates_setting("WORKERS"))

    def evaluate(indexed):
        index, value = indexed
        try:
            return func(value)
        except PlatesError as exc:
            logger.error("Sweep point %d (%s=%r) failed: %s", index, variable, value, exc)
            raise SweepPointError(index, variable, value, exc) from exc

    indexed = list(enumerate(values))
    if workers <= 1 or len(indexed) < 2:
        return [evaluate(item) for item in indexed]

    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(evaluate, indexed))


def _point_for(config: ExperimentConfig) -> Callable[[float], PressureBreakdown]:
    variable = config.sweep.variable
    if variable == SWEEP_D:
        return lambda d_um: breakdown_at(config, d_um, config.pressure_atm)
    if variable == SWEEP_P:
        return lambda p_atm: breakdown_at(config, config.d_um, p_atm)
    if variable != SWEEP_BETA_RHO:
        raise ValueError(f"Unknown sweep variable {variable!r}")

    def at_beta_rho(beta_rho: float) -> PressureBreakdown:
        # The gas pressure that puts rho = beta_rho / beta between the plates.
        rho = beta_rho / config.model.beta
        return breakdown_at(config, config.d_um, rho / config.gas.density_coeff)

    return at_beta_rho


def sweep(config: ExperimentConfig, workers: Optional[int] = None) -> List[PressureBreakdown]:
    values = config.sweep.values()
    logger.info(
        "Sweeping %s over %d points [%g, %g]", config.sweep.variable, len(values), values[0], values[-1],
    )
    return map_points(_point_for(config), values, variable=config.sweep.variable, workers=workers)


def pressure_changes(values: Sequence[float], reference: float) -> List[float]:
    """value(P) - value(0) for a series evaluated along a gas-pressure sweep."""
    return [v - reference for v in values]
