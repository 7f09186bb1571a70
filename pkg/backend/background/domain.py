# backend/background/domain.py

"""
Value types of the background app. Everything here is in SI or laboratory units.
"""

import math
from dataclasses import dataclass

from plates_core.exceptions import DomainError


@dataclass(frozen=True)
class GasSpec:
    name: str
    density_coeff: float  # (g/l) / atm
    alpha: float  # atomic polarizability, F m^2
    temperature: float  # K

    def __post_init__(self):
        if not self.name:
            raise DomainError("Gas name cannot be empty")
        for label in ("density_coeff", "alpha", "temperature"):
            value = getattr(self, label)
            if not (math.isfinite(value) and value > 0):
                raise DomainError(f"{label} must be positive, got {value!r}")


@dataclass(frozen=True)
class GasState:
    pressure: float  # atm
    rho: float  # g/l
    number_density: float  # m^-3
    eps_rel: float
    outside_validity: bool = False


@dataclass(frozen=True)
class PatchModel:
    """
    Residual surface potentials. sigma_l / sigma_s are the long and short
    wavelength amplitudes (V); the short-wavelength spectrum is flat between
    lambda_min and lambda_max (m).
    """

    sigma_l: float = 0.05
    sigma_s: float = 0.05
    lambda_min: float = 20e-6
    lambda_max: float = 200e-6

    def __post_init__(self):
        if self.sigma_l < 0 or self.sigma_s < 0:
            raise DomainError("Patch potentials cannot be negative")
        if not 0 < self.lambda_min < self.lambda_max:
            raise DomainError(
                f"Need 0 < lambda_min < lambda_max, got {self.lambda_min!r}, {self.lambda_max!r}"
            )

    @property
    def k_min(self) -> float:
        return 2.0 * math.pi / self.lambda_max

    @property
    def k_max(self) -> float:
        return 2.0 * math.pi / self.lambda_min
