# backend/chameleon/services/pressure.py

"""
Chameleon pressure on the plates.

With the mid-plane ratio z known,

    F = ((n+1)/n) Lambda^(4+n) / phi_b^n * z^(p-1) [h_(1-p)(z) - z h_(-p)(z)],

which is ((n+1)/n)^2 times the difference of the linearized effective
potential between mid-plane and bulk (see oracle.energy_ratio).
As m_b d -> 0 it approaches c_n Lambda^4 (Lambda d)^(-2n/(n+2)), independent of rho.
"""

import functools
import logging
import math
from typing import List, Tuple

from plates_core.conf import plates_setting
from plates_core.exceptions import DomainError

from numerics.quadrature import QuadratureSpec

from ..domain import (
    ALGEBRAIC,
    SCREENED,
    BulkState,
    ChameleonModel,
    ChameleonPressure,
    ProfileSolution,
    classify_regime,
)
from .potential import bulk_state, h, log_potential_scale
from .profile import profile_constant, separation_from_z, z_from_separation

logger = logging.getLogger(__name__)


def pressure_bracket(p: float, one_minus_z: float, *, use_series: bool = None) -> float:
    """
    h_(1-p)(z) - z h_(-p)(z) as a function of 1 - z.

    Near z = 1 the two terms cancel to second order; below SERIES_SWITCH_DELTA
    the expansion in tau = -ln z is used instead.
    """
    if not 0.0 <= one_minus_z <= 1.0:
        raise DomainError(f"1 - z must lie in [0, 1], got {one_minus_z!r}")
    if one_minus_z == 0.0:
        return 0.0
    if use_series is None:
        use_series = one_minus_z < plates_setting("SERIES_SWITCH_DELTA")

    if use_series:
        tau = -math.log1p(-one_minus_z)
        return 0.5 * tau ** 2 + (p - 2.0) * tau ** 3 / 6.0

    z = 1.0 - one_minus_z
    if z == 0.0:
        return 1.0 / (1.0 - p)
    return h(1.0 - p, z) - z * h(-p, z)


def pressure_value(model: ChameleonModel, bulk: BulkState, z: float, *, one_minus_z: float = None) -> float:
    """Pressure (GeV^4) of the profile with mid-plane ratio z; 0 at z = 1."""
    if one_minus_z is None:
        if not 0.0 < z <= 1.0:
            raise DomainError(f"z must lie in (0, 1], got {z!r}")
        one_minus_z = 1.0 - z
    elif not 0.0 <= one_minus_z < 1.0:
        raise DomainError(f"1 - z must lie in [0, 1), got {one_minus_z!r}")

    p, n = model.p, model.n
    bracket = pressure_bracket(p, one_minus_z)
    if bracket == 0.0:
        return 0.0

    log_z = math.log1p(-one_minus_z)
    log_prefactor = math.log((n + 1) / n) + log_potential_scale(model) - n * math.log(bulk.phi_b)
    return math.exp(log_prefactor + (p - 1.0) * log_z) * bracket


def pressure_from_z(model: ChameleonModel, bulk: BulkState, z: float, *, one_minus_z: float = None) -> ChameleonPressure:
    """pressure_value together with the separation and regime of that profile."""
    value = pressure_value(model, bulk, z, one_minus_z=one_minus_z)
    delta = 1.0 - z if one_minus_z is None else one_minus_z
    if delta == 0.0:
        return ChameleonPressure(value=0.0, fully_screened=True, m_b_d=math.inf, regime=SCREENED)

    m_b_d = separation_from_z(model, bulk, z, one_minus_z=one_minus_z) * bulk.profile_mass(model)
    return ChameleonPressure(value=value, m_b_d=m_b_d, regime=classify_regime(m_b_d))


def chameleon_pressure(model: ChameleonModel, rho: float, d: float, *, plate_rho: float = None) -> ChameleonPressure:
    """
    Pressure at separation d (GeV^-1) with gas density rho (GeV^4) between the
    plates. Passing plate_rho checks that the plates themselves are thick
    enough to screen the field.
    """
    return solve_pressure(model, rho, d, plate_rho=plate_rho)[2]


def solve_pressure(
    model: ChameleonModel, rho: float, d: float, *, plate_rho: float = None,
) -> Tuple[BulkState, ProfileSolution, ChameleonPressure]:
    """chameleon_pressure together with the bulk state and profile behind it."""
    if not (math.isfinite(d) and d > 0):
        raise DomainError(f"Separation must be positive, got {d!r}")

    warnings: List[str] = []
    bulk = bulk_state(model, rho)
    if bulk.linearization_warning:
        warnings.append(f"linearized coupling: beta phi_b / m_Pl = {bulk.linearization_ratio:.3e}")

    if plate_rho is not None:
        plate = bulk_state(model, plate_rho)
        plate_m_d = plate.m_b * d
        if plate_m_d < plates_setting("PLATE_VALIDITY_MIN"):
            logger.warning("Plates weakly screening: m_c d = %.3g", plate_m_d)
            warnings.append(f"plate screening: m_c d = {plate_m_d:.3g}")

    profile = z_from_separation(model, bulk, d)
    if profile.fully_screened:
        value = 0.0
    else:
        value = pressure_value(model, bulk, profile.z, one_minus_z=profile.one_minus_z)

    logger.debug(
        "chameleon pressure n=%d beta=%g rho=%.3e d=%.3e: %.6e GeV^4 (%s, m_b d=%.3g)",
        model.n, model.beta, rho, d, value, profile.regime, profile.m_b_d,
    )
    return bulk, profile, ChameleonPressure(
        value=value,
        fully_screened=profile.fully_screened,
        m_b_d=profile.m_b_d,
        regime=profile.regime,
        warnings=tuple(warnings),
    )


@functools.lru_cache(maxsize=64)
def _vacuum_prefactor(n: int, spec: QuadratureSpec) -> float:
    c_p = profile_constant(n, spec)
    exponent = n / (n + 2.0)
    return ((n + 1.0) / n) ** 2 * (n * (n + 1.0)) ** (-exponent) * (math.sqrt(2.0) * c_p) ** (2.0 * exponent)


def vacuum_prefactor(n: int, spec: QuadratureSpec = None) -> float:
    """c_n in F_vac = c_n Lambda^4 (Lambda d)^(-2n/(n+2))."""
    if isinstance(n, bool) or not isinstance(n, int) or n < 1:
        raise DomainError(f"n must be ≥ 1, got {n!r}")
    return _vacuum_prefactor(n, spec or QuadratureSpec())


def vacuum_asymptotic_pressure(model: ChameleonModel, d: float) -> ChameleonPressure:
    if not (math.isfinite(d) and d > 0):
        raise DomainError(f"Separation must be positive, got {d!r}")
    n = model.n
    lam = model.lambda_gev
    value = vacuum_prefactor(n, model.quadrature) * lam ** 4 * (lam * d) ** (-2.0 * n / (n + 2.0))
    return ChameleonPressure(value=value, fully_screened=False, m_b_d=0.0, regime=ALGEBRAIC)
