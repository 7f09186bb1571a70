# backend/experiment/services/pressures.py

import logging
import math

from background.services import casimir_pressure, electrostatic_pressure, gas_state
from chameleon.domain import ALGEBRAIC, ChameleonModel
from chameleon.services import energy_ratio, solve_pressure, vacuum_asymptotic_pressure
from units.constants import MICRO
from units.conversions import g_per_l_to_natural, length_to_natural, pressure_natural_to_lab

from ..domain import CASIMIR, CHAMELEON, ELECTROSTATIC, ExperimentConfig, PressureBreakdown

logger = logging.getLogger(__name__)


def breakdown_at(config: ExperimentConfig, d_um: float, pressure_atm: float) -> PressureBreakdown:
    """
    All included pressure components at separation d_um with the gas at
    pressure_atm. Every component sees the same gas state; at P = 0 the
    chameleon takes its vacuum asymptote.
    """
    gas = gas_state(config.gas, pressure_atm)
    d_m = d_um * MICRO
    model = config.model

    chameleon = 0.0
    regime = ""
    m_b_d = math.nan
    oracle_ratio = math.nan
    fully_screened = False
    warnings = ("gas outside low-density model",) if gas.outside_validity else ()

    if CHAMELEON in config.include:
        d_nat = length_to_natural(d_m)
        if gas.rho == 0.0:
            result = vacuum_asymptotic_pressure(model, d_nat)
            oracle_ratio = ((model.n + 1) / model.n) ** 2
        else:
            plate_rho = None
            if config.plate_rho_g_per_l is not None:
                plate_rho = g_per_l_to_natural(config.plate_rho_g_per_l)
            bulk, profile, result = solve_pressure(
                model, g_per_l_to_natural(gas.rho), d_nat, plate_rho=plate_rho,
            )
            oracle_ratio = energy_ratio(model, bulk, profile)
        chameleon = pressure_natural_to_lab(result.value)
        regime = result.regime or ALGEBRAIC
        m_b_d = result.m_b_d
        fully_screened = result.fully_screened
        warnings += result.warnings

    casimir = casimir_pressure(d_m, gas.eps_rel) if CASIMIR in config.include else 0.0
    electrostatic = (
        electrostatic_pressure(config.patch, d_m, gas.eps_rel) if ELECTROSTATIC in config.include else 0.0
    )

    return PressureBreakdown(
        d_um=d_um,
        pressure_atm=pressure_atm,
        rho_g_per_l=gas.rho,
        chameleon=chameleon,
        casimir=casimir,
        electrostatic=electrostatic,
        total=chameleon + casimir + electrostatic,
        regime=regime,
        m_b_d=m_b_d,
        oracle_ratio=oracle_ratio,
        fully_screened=fully_screened,
        warnings=warnings,
    )


def chameleon_lab_pressure(model: ChameleonModel, rho_g_per_l: float, d_um: float) -> float:
    """Chameleon pressure in pN/cm^2; rho = 0 gives the vacuum asymptote."""
    d_nat = length_to_natural(d_um * MICRO)
    if rho_g_per_l == 0.0:
        return pressure_natural_to_lab(vacuum_asymptotic_pressure(model, d_nat).value)
    _, _, result = solve_pressure(model, g_per_l_to_natural(rho_g_per_l), d_nat)
    return pressure_natural_to_lab(result.value)


def screening_percentage(model: ChameleonModel, rho: float, d: float) -> float:
    """
    Percentage drop of the chameleon pressure at density rho (GeV^4) and
    separation d (GeV^-1) relative to the vacuum asymptote, clamped to [0, 100].
    """
    if rho == 0.0:
        return 0.0
    _, _, result = solve_pressure(model, rho, d)
    vacuum = vacuum_asymptotic_pressure(model, d).value
    percent = 100.0 * (1.0 - result.value / vacuum)
    return min(100.0, max(0.0, percent))
