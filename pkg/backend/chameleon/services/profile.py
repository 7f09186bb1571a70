# backend/chameleon/services/profile.py

"""
Between the plates the field peaks at phi_0 < phi_b at mid-plane and falls to
nearly zero at the dense walls. With z = (phi_0 / phi_b)^(n+1) the plate separation is

    m_b d = sqrt(2) z^((1+p)/2) I(z),
    I(z)  = int_0^1 x^(p-1) / sqrt(h_(p-1)(x) - z h_p(x)) dx,

a strictly increasing map of z in [0, 1) onto [0, inf).
"""

import functools
import logging
import math

import numpy as np

from plates_core.conf import plates_setting
from plates_core.exceptions import DomainError

from numerics.exceptions import RootFindingError
from numerics.quadrature import QuadratureSpec, integrate_endpoint_singular
from numerics.roots import RootSpec, find_root_bracketed

from ..domain import SCREENED, BulkState, ChameleonModel, ProfileSolution, classify_regime

logger = logging.getLogger(__name__)

_SQRT2 = math.sqrt(2.0)
_SERIES_T = 0.05
_SERIES_TERMS = 12
# z = exp(-700) is about the smallest mid-plane ratio still representable.
_U_FLOOR = -700.0
_U_START = -20.0


def _gap(p: float, t: np.ndarray) -> np.ndarray:
    """h_(p-1)(x) - h_p(x) with t = -ln x, cancellation-free near x = 1."""
    q = 1.0 - p
    direct = np.expm1(q * t) / q + np.expm1(-p * t) / p

    series = np.zeros_like(t)
    term = np.ones_like(t)
    for k in range(1, _SERIES_TERMS + 1):
        term = term * t / k
        if k >= 2:
            series = series + term * (q ** (k - 1) - (-p) ** (k - 1))

    return np.where(t < _SERIES_T, series, direct)


def _integrand(p: float, one_minus_z: float):
    def f(x, left, right):
        # -ln x from whichever offset is accurate.
        t = np.where(right < 0.5, -np.log1p(-right), -np.log(left))
        h_p = -np.expm1(-p * t) / p
        # radicand / t stays of order 1 - z as t -> 0, where the radicand itself underflows.
        scaled = _gap(p, t) / t + one_minus_z * (h_p / t)
        return np.exp((1.0 - p) * t) / (np.sqrt(t) * np.sqrt(scaled))
    return f


def _check_z(z: float, one_minus_z):
    if one_minus_z is None:
        if not 0.0 <= z < 1.0:
            raise DomainError(f"z must lie in [0, 1), got {z!r}")
        return 1.0 - z
    if not 0.0 < one_minus_z <= 1.0:
        raise DomainError(f"1 - z must lie in (0, 1], got {one_minus_z!r}")
    return one_minus_z


def separation_integral(model: ChameleonModel, z: float, *, one_minus_z: float = None, spec: QuadratureSpec = None) -> float:
    """
    I(z). Pass one_minus_z when z is too close to 1 for 1 - z to be formed
    by subtraction.
    """
    delta = _check_z(z, one_minus_z)
    return integrate_endpoint_singular(
        _integrand(model.p, delta), 0.0, 1.0, spec or model.quadrature, with_offsets=True,
    )


@functools.lru_cache(maxsize=64)
def _profile_constant(n: int, spec: QuadratureSpec) -> float:
    p = 1.0 / (n + 1)
    return integrate_endpoint_singular(_integrand(p, 1.0), 0.0, 1.0, spec, with_offsets=True)


def profile_constant(n: int, spec: QuadratureSpec = None) -> float:
    """C_p = I(0), which fixes the vacuum asymptote."""
    if isinstance(n, bool) or not isinstance(n, int) or n < 1:
        raise DomainError(f"n must be ≥ 1, got {n!r}")
    return _profile_constant(n, spec or QuadratureSpec())


def _scaled_log_separation(model: ChameleonModel, log_z: float, one_minus_z: float) -> float:
    """ln(m_b d) as a function of ln z and 1 - z."""
    integral = separation_integral(model, 0.0, one_minus_z=one_minus_z)
    return math.log(_SQRT2) + 0.5 * (1.0 + model.p) * log_z + math.log(integral)


def separation_from_z(model: ChameleonModel, bulk: BulkState, z: float, *, one_minus_z: float = None) -> float:
    """Plate separation d (GeV^-1) of the profile with mid-plane ratio z."""
    delta = _check_z(z, one_minus_z)
    if delta == 1.0:
        return 0.0
    z_value = z if one_minus_z is None else 1.0 - delta
    log_z = math.log1p(-delta) if delta < 0.5 else math.log(z_value)
    return math.exp(_scaled_log_separation(model, log_z, delta)) / bulk.profile_mass(model)


def _split_logit(u: float):
    """ln z and ln(1 - z) for z = 1 / (1 + e^-u)."""
    return -float(np.logaddexp(0.0, -u)), -float(np.logaddexp(0.0, u))


def z_from_separation(model: ChameleonModel, bulk: BulkState, d: float) -> ProfileSolution:
    """
    Invert d(z). The search variable is u = ln(z / (1 - z)), which resolves
    both z -> 0 and 1 - z -> 0. When even 1 - z = FULL_SCREENING_DELTA gives
    a separation below d the profile is reported as fully screened.
    """
    if not (math.isfinite(d) and d > 0):
        raise DomainError(f"Separation must be positive, got {d!r}")

    m_b_d = bulk.profile_mass(model) * d
    target = math.log(m_b_d)

    def objective(u: float) -> float:
        log_z, log_delta = _split_logit(u)
        return _scaled_log_separation(model, log_z, math.exp(log_delta)) - target

    delta_min = float(plates_setting("FULL_SCREENING_DELTA"))
    u_hi = math.log((1.0 - delta_min) / delta_min)
    if objective(u_hi) < 0.0:
        logger.info("Profile fully screened at m_b d = %.4g (1 - z below %.1e)", m_b_d, delta_min)
        return ProfileSolution(
            z=1.0,
            phi_0=bulk.phi_b,
            d=d,
            regime=SCREENED,
            m_b_d=m_b_d,
            one_minus_z=0.0,
            fully_screened=True,
        )

    u_lo = _U_START
    while objective(u_lo) > 0.0:
        if u_lo <= _U_FLOOR:
            raise DomainError(f"Separation {d!r} is too small to resolve (m_b d = {m_b_d:.3e})")
        u_lo = max(2.0 * u_lo, _U_FLOOR)

    try:
        u = find_root_bracketed(objective, RootSpec((u_lo, u_hi)))
    except RootFindingError:
        logger.error("Profile inversion failed at d=%r (m_b d = %.4g)", d, m_b_d)
        raise

    log_z, log_delta = _split_logit(u)
    z = math.exp(log_z)
    return ProfileSolution(
        z=z,
        phi_0=bulk.phi_b * math.exp(model.p * log_z),
        d=d,
        regime=classify_regime(m_b_d),
        m_b_d=m_b_d,
        one_minus_z=math.exp(log_delta),
    )
