# backend/experiment/domain.py

"""
Run configuration and result rows of the experiment app.

Lengths are in microns, gas pressures in atm, densities in g/l and pressures
in pN/cm^2; conversion to natural units happens inside the services.
"""

import math
from dataclasses import dataclass, field
from typing import FrozenSet, List, Optional, Tuple

import numpy as np

from background.domain import GasSpec, PatchModel
from background.services import get_gas
from chameleon.domain import ChameleonModel
from plates_core.exceptions import DomainError

CHAMELEON = "chameleon"
CASIMIR = "casimir"
ELECTROSTATIC = "electrostatic"
COMPONENTS = (CHAMELEON, CASIMIR, ELECTROSTATIC)

SWEEP_D = "d"
SWEEP_P = "P"
SWEEP_BETA_RHO = "beta_rho"
SWEEP_VARIABLES = (SWEEP_D, SWEEP_P, SWEEP_BETA_RHO)

LINEAR = "linear"
LOG = "log"

FIGURES = ("fig1", "fig2", "fig3", "fig4")


@dataclass(frozen=True)
class SweepSpec:
    """Grid over d (um), P (atm) or beta*rho (g/l)."""

    variable: str = SWEEP_P
    start: float = 0.0
    stop: float = 0.5
    points: int = 11
    spacing: str = LINEAR

    def __post_init__(self):
        if self.variable not in SWEEP_VARIABLES:
            raise DomainError(f"Unknown sweep variable {self.variable!r}")
        if self.spacing not in (LINEAR, LOG):
            raise DomainError(f"Unknown sweep spacing {self.spacing!r}")
        if self.points < 2:
            raise DomainError("A sweep needs at least 2 points")
        if not (math.isfinite(self.start) and math.isfinite(self.stop)) or self.start >= self.stop:
            raise DomainError(f"Sweep needs start < stop, got {self.start!r}, {self.stop!r}")
        # Only a linear gas-pressure sweep may start at vacuum.
        may_start_at_zero = self.variable == SWEEP_P and self.spacing == LINEAR
        if self.start < 0 or (self.start == 0 and not may_start_at_zero):
            raise DomainError("Sweep bounds must be positive")

    def values(self) -> List[float]:
        if self.spacing == LOG:
            grid = np.geomspace(self.start, self.stop, self.points)
        else:
            grid = np.linspace(self.start, self.stop, self.points)
        return [float(v) for v in grid]


@dataclass(frozen=True)
class FigureSettings:
    points: int = 19
    d_range_um: Tuple[float, float] = (10.0, 100.0)
    rho_g_per_l: float = 5.0
    beta_rho_g_per_l: Tuple[float, ...] = (1e4, 5e4, 1e5)
    beta_rho_range_g_per_l: Tuple[float, float] = (1e2, 1e6)
    n_values: Tuple[int, ...] = (1, 2, 4, 6)
    beta_values: Tuple[float, ...] = (1e3, 1e4, 1e5)
    pressure_range_atm: Tuple[float, float] = (0.0, 0.5)

    def __post_init__(self):
        if self.points < 2:
            raise DomainError("figure.points must be at least 2")
        if not 0 < self.d_range_um[0] < self.d_range_um[1]:
            raise DomainError("figure.d range must be positive and increasing")
        if not 0 < self.beta_rho_range_g_per_l[0] < self.beta_rho_range_g_per_l[1]:
            raise DomainError("figure.beta_rho range must be positive and increasing")
        if not 0 <= self.pressure_range_atm[0] < self.pressure_range_atm[1]:
            raise DomainError("figure.pressure range must be non-negative and increasing")
        if not self.n_values or not self.beta_values or not self.beta_rho_g_per_l:
            raise DomainError("figure value lists cannot be empty")


@dataclass(frozen=True)
class ExperimentConfig:
    model: ChameleonModel = field(default_factory=lambda: ChameleonModel(n=4, beta=1e4))
    gas: GasSpec = field(default_factory=lambda: get_gas("Xe"))
    patch: PatchModel = field(default_factory=PatchModel)
    d_um: float = 30.0
    pressure_atm: float = 0.0
    # Plate material density; None skips the plate screening check.
    plate_rho_g_per_l: Optional[float] = None
    sweep: SweepSpec = field(default_factory=SweepSpec)
    include: FrozenSet[str] = frozenset(COMPONENTS)
    figure: FigureSettings = field(default_factory=FigureSettings)
    # Pressure change (pN/cm^2) the sensitivity estimate is solved for.
    sensitivity_target: float = 0.01

    def __post_init__(self):
        if not self.d_um > 0:
            raise DomainError(f"d must be positive, got {self.d_um!r}")
        if not self.pressure_atm >= 0:
            raise DomainError(f"Gas pressure cannot be negative, got {self.pressure_atm!r}")
        if not self.sensitivity_target > 0:
            raise DomainError("sensitivity target must be positive")
        if not self.include:
            raise DomainError("include cannot be empty")
        unknown = set(self.include) - set(COMPONENTS)
        if unknown:
            raise DomainError(f"Unknown components: {', '.join(sorted(unknown))}")


@dataclass(frozen=True)
class PressureBreakdown:
    d_um: float
    pressure_atm: float
    rho_g_per_l: float
    chameleon: float
    casimir: float
    electrostatic: float
    total: float
    regime: str
    m_b_d: float
    oracle_ratio: float
    fully_screened: bool = False
    warnings: Tuple[str, ...] = ()


@dataclass(frozen=True)
class SensitivityResult:
    delta_sigma: float  # V
    delta_d: float  # m


@dataclass(frozen=True)
class Dataset:
    """A CSV-ready table."""

    columns: Tuple[str, ...]
    rows: Tuple[Tuple, ...]
    name: str = ""

    def column(self, label: str) -> List:
        index = self.columns.index(label)
        return [row[index] for row in self.rows]
