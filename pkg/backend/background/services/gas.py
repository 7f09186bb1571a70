# backend/background/services/gas.py

import difflib
import logging
from typing import Dict

from plates_core.conf import plates_setting
from plates_core.exceptions import DomainError
from units.constants import ATM_TO_PA, get_constants

from ..domain import GasSpec, GasState

logger = logging.getLogger(__name__)

_REGISTRY: Dict[str, GasSpec] = {}


def _seed_registry() -> None:
    for name, fields in plates_setting("GASES").items():
        _REGISTRY.setdefault(name, GasSpec(name=name, **fields))


def register_gas(spec: GasSpec) -> GasSpec:
    """Add (or replace) a named gas for later lookup by get_gas."""
    _seed_registry()
    _REGISTRY[spec.name] = spec
    logger.debug("Registered gas %s", spec)
    return spec


def get_gas(name: str) -> GasSpec:
    _seed_registry()
    try:
        return _REGISTRY[name]
    except KeyError:
        close = difflib.get_close_matches(name, _REGISTRY.keys())
        hint = f" (did you mean: {', '.join(close)}?)" if close else ""
        raise DomainError(f"Unknown gas {name!r}{hint}") from None


def gas_state(spec: GasSpec, pressure_atm: float) -> GasState:
    """
    Mass density from the gas's empirical density law, number density from the
    ideal gas law, permittivity from the low-density Lorentz-Lorenz limit.
    """
    if not pressure_atm >= 0:
        raise DomainError(f"Gas pressure cannot be negative, got {pressure_atm!r}")

    consts = get_constants()
    outside = pressure_atm > plates_setting("GAS_VALIDITY_MAX_ATM")
    if outside:
        logger.warning("%s at %.3g atm is outside the low-density model", spec.name, pressure_atm)

    number_density = pressure_atm * ATM_TO_PA / (consts.boltzmann * spec.temperature)
    return GasState(
        pressure=pressure_atm,
        rho=spec.density_coeff * pressure_atm,
        number_density=number_density,
        eps_rel=1.0 + number_density * spec.alpha / consts.vacuum_permittivity,
        outside_validity=outside,
    )
