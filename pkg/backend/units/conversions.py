# backend/units/conversions.py

"""
Conversions between natural units (GeV powers) and SI / laboratory units.

Chameleon-sector quantities are computed in GeV powers, electromagnetic-sector
quantities in SI. Only the experiment app crosses between the two, through the
functions below. All of them go through units.quantities.Quantity so that the
conversion factors exist in exactly one place.
"""

from plates_core.exceptions import DomainError

from .constants import ATM_TO_PA, G_PER_L_TO_KG_PER_M3, PA_TO_PN_PER_CM2
from .quantities import Quantity


# ---------- lengths ----------

def length_from_inverse_energy(energy_gev: float) -> float:
    """hbar c / E, in metres, for an energy in GeV."""
    if not energy_gev > 0:
        raise DomainError(f"Energy must be positive, got {energy_gev!r}")
    return Quantity.natural(1.0 / energy_gev, -1).to_si(m=1).value


def energy_from_inverse_length(length_m: float) -> float:
    """hbar c / L, in GeV, for a length in metres."""
    if not length_m > 0:
        raise DomainError(f"Length must be positive, got {length_m!r}")
    return 1.0 / length_to_natural(length_m)


def length_to_natural(length_m: float) -> float:
    """Length in metres -> GeV^-1."""
    return Quantity.si(length_m, m=1).to_natural().value


def length_to_si(length_inv_gev: float) -> float:
    """Length in GeV^-1 -> metres."""
    return Quantity.natural(length_inv_gev, -1).to_si(m=1).value


# ---------- densities ----------

def mass_density_to_natural(rho_kg_m3: float) -> float:
    """Mass density in kg/m^3 -> energy density rho c^2 in GeV^4."""
    if rho_kg_m3 < 0:
        raise DomainError(f"Density cannot be negative, got {rho_kg_m3!r}")
    return Quantity.si(rho_kg_m3, kg=1, m=-3).to_natural().value


def mass_density_to_si(rho_gev4: float) -> float:
    """Energy density in GeV^4 -> mass density in kg/m^3."""
    return Quantity.natural(rho_gev4, 4).to_si(kg=1, m=-3).value


def g_per_l_to_natural(rho_g_per_l: float) -> float:
    return mass_density_to_natural(rho_g_per_l * G_PER_L_TO_KG_PER_M3)


# ---------- pressures ----------

def pressure_natural_to_si(pressure_gev4: float) -> float:
    """GeV^4 -> Pa."""
    return Quantity.natural(pressure_gev4, 4).to_si(kg=1, m=-1, s=-2).value


def pressure_pa_to_lab(pressure_pa: float) -> float:
    """Pa -> pN/cm^2."""
    return pressure_pa * PA_TO_PN_PER_CM2


def pressure_lab_to_pa(pressure_lab: float) -> float:
    """pN/cm^2 -> Pa."""
    return pressure_lab / PA_TO_PN_PER_CM2


def pressure_natural_to_lab(pressure_gev4: float) -> float:
    """GeV^4 -> pN/cm^2."""
    return pressure_pa_to_lab(pressure_natural_to_si(pressure_gev4))


def atm_to_pa(pressure_atm: float) -> float:
    return pressure_atm * ATM_TO_PA
