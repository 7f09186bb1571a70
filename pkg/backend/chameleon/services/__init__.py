# backend/chameleon/services/__init__.py

"""
Service layer for the chameleon field between two plates.

Exports:
- bulk_state:                 equilibrium field and mass in a medium.
- separation_from_z / z_from_separation: the profile map and its inverse.
- chameleon_pressure:         pressure at a separation for a bulk density.
- pressure_from_z:            pressure of a profile given its mid-plane ratio.
- vacuum_asymptotic_pressure: the rho -> 0 limit.
- oracle_separation / oracle_energy_pressure: independent cross-checks.
"""

from .potential import bulk_state, effective_potential, h, linearized_potential, potential
from .profile import profile_constant, separation_from_z, separation_integral, z_from_separation
from .pressure import (
    chameleon_pressure,
    pressure_bracket,
    pressure_from_z,
    pressure_value,
    solve_pressure,
    vacuum_asymptotic_pressure,
    vacuum_prefactor,
)
from .oracle import energy_ratio, oracle_energy_pressure, oracle_separation, potential_difference

__all__ = [
    "bulk_state",
    "effective_potential",
    "h",
    "linearized_potential",
    "potential",
    "profile_constant",
    "separation_from_z",
    "separation_integral",
    "z_from_separation",
    "chameleon_pressure",
    "pressure_bracket",
    "pressure_from_z",
    "pressure_value",
    "solve_pressure",
    "vacuum_asymptotic_pressure",
    "vacuum_prefactor",
    "energy_ratio",
    "oracle_energy_pressure",
    "oracle_separation",
    "potential_difference",
]
