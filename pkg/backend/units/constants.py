# backend/units/constants.py

"""
Single table of physical constants.

SI values come from scipy.constants (CODATA). The theory scales Lambda and the
reduced Planck mass follow the rounded values used throughout the chameleon
literature and can be overridden through settings.CHAMELEON_PLATES.
"""

from dataclasses import dataclass, field

from scipy import constants as sp

from plates_core.conf import plates_setting


@dataclass(frozen=True)
class Constants:
    """Base constants. Everything else in the units app is derived from these."""

    # Reduced Planck constant (J s)
    hbar: float = sp.hbar

    # Speed of light (m/s)
    c: float = sp.c

    # Joule per electron volt
    eV_to_joule: float = sp.eV

    # Vacuum permittivity (F/m)
    vacuum_permittivity: float = sp.epsilon_0

    # Boltzmann constant (J/K)
    boltzmann: float = sp.k

    # Theory scales (GeV)
    planck_mass_reduced: float = field(default_factory=lambda: float(plates_setting("M_PL_GEV")))
    lambda_de: float = field(default_factory=lambda: float(plates_setting("LAMBDA_GEV")))

    @property
    def gev_to_joule(self) -> float:
        return self.eV_to_joule * sp.giga

    @property
    def hbar_c(self) -> float:
        """hbar * c in GeV m."""
        return self.hbar * self.c / self.gev_to_joule

    @property
    def hbar_gev_s(self) -> float:
        """hbar in GeV s."""
        return self.hbar / self.gev_to_joule


def get_constants() -> Constants:
    """Constants with the theory scales resolved from the current settings."""
    return Constants()


# SI prefixes and laboratory units, all taken from scipy.constants.
MICRO = sp.micro
MILLI = sp.milli
NANO = sp.nano
ATM_TO_PA = sp.atm
G_PER_L_TO_KG_PER_M3 = sp.gram / sp.liter
# 1 Pa = 1 N/m^2 = (1/pico) pN / (1/centi)^2 cm^2
PA_TO_PN_PER_CM2 = sp.centi ** 2 / sp.pico
