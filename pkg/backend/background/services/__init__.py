# backend/background/services/__init__.py

"""
Backgrounds competing with the chameleon pressure.

Exports:
- gas_state / get_gas / register_gas: gas density and permittivity vs pressure.
- casimir_pressure:      ideal Casimir pressure with the 1/sqrt(eps) medium factor.
- electrostatic_pressure / patch_k_integral: patch-potential pressure.
"""

from .casimir import casimir_pressure
from .electrostatic import electrostatic_pressure, patch_k_integral
from .gas import gas_state, get_gas, register_gas

__all__ = [
    "casimir_pressure",
    "electrostatic_pressure",
    "patch_k_integral",
    "gas_state",
    "get_gas",
    "register_gas",
]
