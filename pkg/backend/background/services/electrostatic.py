# backend/background/services/electrostatic.py

"""
Patch-potential pressure between grounded plates:

    F/A = eps0 eps_r [ sigma_l^2 / (2 d^2)
                       + 2 sigma_s^2 / (k_max^2 - k_min^2) int k^3 / sinh^2(k d) dk ].
"""

import math

import numpy as np

from numerics.quadrature import QuadratureSpec, integrate_endpoint_singular
from plates_core.exceptions import DomainError
from units.constants import get_constants
from units.conversions import pressure_pa_to_lab

from ..domain import PatchModel


def _x3_over_sinh2(x):
    # 1 / sinh^2 x = 4 e^{-2x} / (1 - e^{-2x})^2; underflows cleanly for large x
    e = np.exp(-2.0 * x)
    return x ** 3 * 4.0 * e / np.expm1(-2.0 * x) ** 2


def patch_k_integral(patch: PatchModel, d: float, spec: QuadratureSpec = None) -> float:
    """int_{k_min}^{k_max} k^3 / sinh^2(k d) dk in m^-4, integrated in x = k d."""
    if not (math.isfinite(d) and d > 0):
        raise DomainError(f"Separation must be positive, got {d!r}")
    dimensionless = integrate_endpoint_singular(_x3_over_sinh2, patch.k_min * d, patch.k_max * d, spec)
    return dimensionless / d ** 4


def electrostatic_pressure(patch: PatchModel, d: float, eps_rel: float = 1.0) -> float:
    """Patch pressure in pN/cm^2 at separation d (m) in a medium of permittivity eps_rel."""
    if not eps_rel >= 1.0:
        raise DomainError(f"Relative permittivity must be >= 1, got {eps_rel!r}")

    if not (math.isfinite(d) and d > 0):
        raise DomainError(f"Separation must be positive, got {d!r}")

    eps0 = get_constants().vacuum_permittivity
    long_wave = patch.sigma_l ** 2 / (2.0 * d ** 2)
    short_wave = 0.0
    if patch.sigma_s:
        window = patch.k_max ** 2 - patch.k_min ** 2
        short_wave = 2.0 * patch.sigma_s ** 2 / window * patch_k_integral(patch, d)

    return eps_rel * pressure_pa_to_lab(eps0 * (long_wave + short_wave))
