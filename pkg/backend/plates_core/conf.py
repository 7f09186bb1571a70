# backend/plates_core/conf.py

"""
Access to the ``CHAMELEON_PLATES`` settings dict.

The library modules are plain Python and must also work when Django settings
are not configured (e.g. imported from a notebook), so every key has a
built-in default here.
"""

from typing import Any, Dict

from django.conf import settings

DEFAULTS: Dict[str, Any] = {
    # Theory scales (GeV)
    "M_PL_GEV": 2.0e18,
    "LAMBDA_GEV": 2.4e-12,
    # Quadrature / root finding
    "QUAD_REL_TOL": 1e-10,
    "QUAD_ABS_TOL": 0.0,
    "QUAD_MAX_LEVELS": 12,
    "ROOT_REL_TOL": 1e-12,
    "ROOT_MAX_ITER": 200,
    # Reporting thresholds on m_b * d
    "REGIME_ALGEBRAIC_MAX": 0.1,
    "REGIME_SCREENED_MIN": 10.0,
    # Profile parametrization limits on 1 - z
    "FULL_SCREENING_DELTA": 1e-15,
    "SERIES_SWITCH_DELTA": 1e-6,
    # Validity warnings
    "LINEARIZATION_WARN": 1e-2,
    "PLATE_VALIDITY_MIN": 10.0,
    "GAS_VALIDITY_MAX_ATM": 1.0,
    # Sweep parallelism
    "WORKERS": 1,
    # Named gases: density coefficient in (g/l)/atm, polarizability in F m^2, T in K
    "GASES": {
        "Xe": {
            "density_coeff": 5.462,
            "alpha": 4.0e-40,
            "temperature": 293.15,
        },
    },
}


def plates_setting(name: str) -> Any:
    """
    Return one CHAMELEON_PLATES value, falling back to DEFAULTS.
    """
    if name not in DEFAULTS:
        raise KeyError(f"Unknown CHAMELEON_PLATES setting: {name}")

    overrides: Dict[str, Any] = {}
    if settings.configured:
        overrides = getattr(settings, "CHAMELEON_PLATES", {}) or {}

    return overrides.get(name, DEFAULTS[name])
