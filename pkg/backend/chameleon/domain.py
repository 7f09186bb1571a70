# backend/chameleon/domain.py

"""
Value types of the chameleon app.

Chameleon-sector quantities are in natural units: energies and fields in GeV,
densities and pressures in GeV^4, lengths in GeV^-1.
"""

from dataclasses import dataclass, field
from typing import Optional, Tuple

from plates_core.conf import plates_setting
from plates_core.exceptions import DomainError

from numerics.quadrature import QuadratureSpec

ALGEBRAIC = "algebraic"
INTERMEDIATE = "intermediate"
SCREENED = "screened"

REGIME_CHOICES = [
    (ALGEBRAIC, "Algebraic decay (m_b d small)"),
    (INTERMEDIATE, "Intermediate"),
    (SCREENED, "Exponentially screened (m_b d large)"),
]


def classify_regime(m_b_d: float) -> str:
    """Reporting tag only; every regime uses the same parametric evaluation."""
    if m_b_d < plates_setting("REGIME_ALGEBRAIC_MAX"):
        return ALGEBRAIC
    if m_b_d > plates_setting("REGIME_SCREENED_MIN"):
        return SCREENED
    return INTERMEDIATE


@dataclass(frozen=True)
class ChameleonModel:
    """
    Inverse power-law chameleon, V = Lambda^4 + Lambda^(4+n) / phi^n, coupled to
    matter through rho * exp(beta phi / m_Pl).
    """

    n: int
    beta: float
    lambda_gev: float = field(default_factory=lambda: float(plates_setting("LAMBDA_GEV")))
    m_pl_gev: float = field(default_factory=lambda: float(plates_setting("M_PL_GEV")))
    # Use n(n+1) Lambda^(4+n) / phi_b^(n+2) instead of the full bulk mass in d(z).
    linearized_mass: bool = False
    quadrature: QuadratureSpec = field(default_factory=QuadratureSpec)

    def __post_init__(self):
        if isinstance(self.n, bool) or not isinstance(self.n, int) or self.n < 1:
            raise DomainError(f"n must be ≥ 1, got {self.n!r}")
        if not self.beta > 0:
            raise DomainError(f"beta must be positive, got {self.beta!r}")
        if not self.lambda_gev > 0 or not self.m_pl_gev > 0:
            raise DomainError("Lambda and m_Pl must be positive")

    @property
    def p(self) -> float:
        return 1.0 / (self.n + 1)


@dataclass(frozen=True)
class BulkState:
    rho: float
    phi_b: float
    m_b: float
    m_b_linear: float
    linearization_ratio: float
    linearization_warning: bool = False

    def profile_mass(self, model: ChameleonModel) -> float:
        """Bulk mass entering the separation integral."""
        return self.m_b_linear if model.linearized_mass else self.m_b


@dataclass(frozen=True)
class ProfileSolution:
    z: float
    phi_0: float
    d: float
    regime: str
    m_b_d: float
    # 1 - z carried separately; z itself rounds to 1 long before this underflows.
    one_minus_z: float
    fully_screened: bool = False


@dataclass(frozen=True)
class ChameleonPressure:
    value: float
    fully_screened: bool = False
    m_b_d: Optional[float] = None
    regime: Optional[str] = None
    warnings: Tuple[str, ...] = ()
