# backend/background/services/casimir.py

import math

from plates_core.exceptions import DomainError
from units.constants import get_constants
from units.conversions import pressure_pa_to_lab


def casimir_pressure(d: float, eps_rel: float = 1.0) -> float:
    """
    Ideal-conductor, zero-temperature Casimir pressure at separation d (m),
    reduced by 1/sqrt(eps_rel) for a gas-filled gap. Returns pN/cm^2.
    """
    if not (math.isfinite(d) and d > 0):
        raise DomainError(f"Separation must be positive, got {d!r}")
    if not eps_rel >= 1.0:
        raise DomainError(f"Relative permittivity must be >= 1, got {eps_rel!r}")

    consts = get_constants()
    pascal = math.pi ** 2 * consts.hbar * consts.c / (240.0 * d ** 4)
    return pressure_pa_to_lab(pascal / math.sqrt(eps_rel))
