# backend/chameleon/services/potential.py

"""
Potential, bulk equilibrium and the h_p helper.
"""

import logging
import math

import numpy as np

from plates_core.conf import plates_setting
from plates_core.exceptions import DomainError, NumericalError

from ..domain import BulkState, ChameleonModel

logger = logging.getLogger(__name__)

# Below this |p| the log series replaces (1 - x^p) / p.
_H_SERIES_P = 1e-8


def h(p_index, x):
    """
    h_p(x) = (1 - x^p) / p, continued to -ln x at p = 0.

    Accepts scalars or numpy arrays; x must be positive.
    """
    x_arr = np.asarray(x, dtype=float)
    if np.any(~(x_arr > 0)):
        raise DomainError("h_p(x) needs x > 0")

    log_x = np.log(x_arr)
    if abs(p_index) < _H_SERIES_P:
        out = -log_x - 0.5 * p_index * log_x ** 2
    else:
        out = -np.expm1(p_index * log_x) / p_index

    return float(out) if np.ndim(out) == 0 else out


def coupling(model: ChameleonModel, rho: float) -> float:
    """beta rho / m_Pl, the slope of the linearized matter term."""
    return model.beta * rho / model.m_pl_gev


def log_potential_scale(model: ChameleonModel) -> float:
    """ln Lambda^(4+n); Lambda^(4+n) itself underflows for large n."""
    return (4 + model.n) * math.log(model.lambda_gev)


def potential(model: ChameleonModel, phi: float) -> float:
    if not phi > 0:
        raise DomainError("phi must be positive")
    return model.lambda_gev ** 4 + math.exp(log_potential_scale(model) - model.n * math.log(phi))


def effective_potential(model: ChameleonModel, rho: float, phi: float) -> float:
    """V(phi) + rho exp(beta phi / m_Pl)."""
    return potential(model, phi) + rho * math.exp(model.beta * phi / model.m_pl_gev)


def linearized_potential(model: ChameleonModel, rho: float, phi: float) -> float:
    """Lambda^(4+n) / phi^n + (beta rho / m_Pl) phi, constants dropped."""
    if not phi > 0:
        raise DomainError("phi must be positive")
    return math.exp(log_potential_scale(model) - model.n * math.log(phi)) + coupling(model, rho) * phi


def bulk_state(model: ChameleonModel, rho: float) -> BulkState:
    """
    Equilibrium field and mass in a medium of density rho (GeV^4).

    phi_b minimizes the linearized effective potential. m_b is the full
    curvature of V_eff at phi_b; m_b_linear drops the exp(beta phi / m_Pl) term.
    """
    if not math.isfinite(rho) or rho < 0:
        raise DomainError(f"Density must be a finite non-negative number, got {rho!r}")
    if rho == 0:
        raise DomainError("No bulk minimum at rho = 0; use the vacuum asymptote instead")

    n = model.n
    s = coupling(model, rho)
    log_k = log_potential_scale(model)
    log_phi_b = (math.log(n) + log_k - math.log(s)) / (n + 1)
    phi_b = math.exp(log_phi_b)

    # dV_eff/dphi = -n K phi^-(n+1) + s must vanish at phi_b.
    slope = math.exp(math.log(n) + log_k - (n + 1) * log_phi_b)
    residual = abs(slope - s) / s
    if residual > 1e-10:
        raise NumericalError(f"Bulk minimum residual {residual:.3e} too large")

    m_b_linear = math.exp(0.5 * (math.log(n * (n + 1)) + log_k - (n + 2) * log_phi_b))
    m_b_sq = s * ((n + 1) / phi_b + model.beta / model.m_pl_gev)
    m_b = math.sqrt(m_b_sq)

    ratio = model.beta * phi_b / model.m_pl_gev
    warn = ratio > plates_setting("LINEARIZATION_WARN")
    if warn:
        logger.warning(
            "Linearized coupling questionable: beta phi_b / m_Pl = %.3e (n=%d, beta=%g, rho=%.3e GeV^4)",
            ratio, n, model.beta, rho,
        )

    return BulkState(
        rho=rho,
        phi_b=phi_b,
        m_b=m_b,
        m_b_linear=m_b_linear,
        linearization_ratio=ratio,
        linearization_warning=warn,
    )
