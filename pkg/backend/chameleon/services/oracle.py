# backend/chameleon/services/oracle.py

"""
Independent checks of the profile and pressure formulas, working directly in
phi instead of through z and the h_p functions.
"""

import logging
import math
from typing import Tuple

import numpy as np

from plates_core.exceptions import DomainError

from numerics.quadrature import integrate_endpoint_singular

from ..domain import BulkState, ChameleonModel, ProfileSolution
from .potential import coupling, log_potential_scale
from .pressure import pressure_value
from .profile import z_from_separation

logger = logging.getLogger(__name__)

ENERGY_SPREAD_WARN = 0.01


def oracle_separation(model: ChameleonModel, bulk: BulkState, phi_0: float) -> float:
    """
    d = 2 int_0^phi_0 dphi / sqrt(2 [V(phi) - V(phi_0)]) with the linearized
    potential, substituting phi = phi_0 v. Agrees with separation_from_z only
    when the model uses the linearized bulk mass.
    """
    if not 0.0 < phi_0 < bulk.phi_b:
        raise DomainError(f"phi_0 must lie in (0, phi_b), got {phi_0!r}")

    n = model.n
    amplitude = math.exp(log_potential_scale(model) - n * math.log(phi_0))
    slope = coupling(model, bulk.rho) * phi_0

    def f(v, left, right):
        log_v = np.where(right < 0.5, np.log1p(-right), np.log(left))
        vn = np.exp(n * log_v)
        # Divided by the distance to v = 1 so nothing underflows next to that end.
        scaled = amplitude * (-np.expm1(n * log_v) / right) - slope * vn
        return np.exp(0.5 * n * log_v) / (np.sqrt(2.0 * right) * np.sqrt(scaled))

    return 2.0 * phi_0 * integrate_endpoint_singular(f, 0.0, 1.0, model.quadrature, with_offsets=True)


def potential_difference(model: ChameleonModel, bulk: BulkState, profile: ProfileSolution) -> float:
    """V_lin(phi_0) - V_lin(phi_b), both terms taken relative to phi_b."""
    log_z = math.log1p(-profile.one_minus_z)
    p = model.p
    k_term = math.exp(log_potential_scale(model) - model.n * math.log(bulk.phi_b))
    return k_term * math.expm1((p - 1.0) * log_z) + coupling(model, bulk.rho) * bulk.phi_b * math.expm1(p * log_z)


def energy_ratio(model: ChameleonModel, bulk: BulkState, profile: ProfileSolution) -> float:
    """Pressure over potential difference for one solved profile; nan when screened out."""
    if profile.fully_screened:
        return math.nan
    pressure = pressure_value(model, bulk, profile.z, one_minus_z=profile.one_minus_z)
    return pressure / potential_difference(model, bulk, profile)


def oracle_energy_pressure(model: ChameleonModel, bulk: BulkState, d: float, delta: float) -> float:
    """
    Ratio of the pressure to the potential difference at d, also evaluated at
    d +- delta. The ratio is ((n+1)/n)^2 for every separation, so a spread
    between the three points flags a broken inversion.
    """
    if not (delta > 0 and d - delta > 0):
        raise DomainError("Need 0 < delta < d")

    ratios: Tuple[float, ...] = tuple(
        energy_ratio(model, bulk, z_from_separation(model, bulk, sep))
        for sep in (d - delta, d, d + delta)
    )
    finite = [r for r in ratios if math.isfinite(r)]
    if finite and (max(finite) - min(finite)) > ENERGY_SPREAD_WARN * abs(ratios[1]):
        logger.warning("Energy ratio varies across d +- delta: %r", ratios)
    return ratios[1]
