# backend/units/quantities.py

"""
Minimal dimensioned quantity used at the boundary between the two unit systems.

Natural units (hbar = c = 1) carry a single exponent over energy (GeV).
SI quantities carry exponents over (kg, m, s, A, K). A kg^a m^b s^c quantity
maps to GeV^(a - b - c); current and temperature have no natural-unit image here.
"""

from dataclasses import dataclass
from typing import Tuple, Union

from plates_core.exceptions import DomainError

from .constants import Constants

NATURAL = "natural"
SI = "SI"

SI_BASE = ("kg", "m", "s", "A", "K")

Number = Union[int, float]


class DimensionError(DomainError):
    """Arithmetic or conversion between incompatible dimensions."""
    pass


# Conversion factors from one SI base unit to natural units. These three numbers
# are the only place SI and natural units meet; every conversion goes through them.
_BASE = Constants()
_KG_IN_GEV = _BASE.c ** 2 / _BASE.gev_to_joule
_M_IN_INV_GEV = 1.0 / _BASE.hbar_c
_S_IN_INV_GEV = 1.0 / _BASE.hbar_gev_s


@dataclass(frozen=True)
class Quantity:
    value: float
    dimension: Tuple[int, ...]
    unit_system: str

    def __post_init__(self):
        expected = 1 if self.unit_system == NATURAL else len(SI_BASE)
        if self.unit_system not in (NATURAL, SI):
            raise DimensionError(f"Unknown unit system {self.unit_system!r}")
        if len(self.dimension) != expected:
            raise DimensionError(
                f"{self.unit_system} quantities need {expected} exponents, got {self.dimension}"
            )

    # ---------- constructors ----------

    @classmethod
    def natural(cls, value: Number, energy_power: int) -> "Quantity":
        return cls(float(value), (int(energy_power),), NATURAL)

    @classmethod
    def si(cls, value: Number, kg: int = 0, m: int = 0, s: int = 0, A: int = 0, K: int = 0) -> "Quantity":
        return cls(float(value), (kg, m, s, A, K), SI)

    # ---------- arithmetic ----------

    def _check_compatible(self, other: "Quantity", op: str) -> None:
        if self.unit_system != other.unit_system or self.dimension != other.dimension:
            raise DimensionError(
                f"Cannot {op} {self.describe()} and {other.describe()}"
            )

    def __add__(self, other: "Quantity") -> "Quantity":
        if not isinstance(other, Quantity):
            return NotImplemented
        self._check_compatible(other, "add")
        return Quantity(self.value + other.value, self.dimension, self.unit_system)

    def __sub__(self, other: "Quantity") -> "Quantity":
        if not isinstance(other, Quantity):
            return NotImplemented
        self._check_compatible(other, "subtract")
        return Quantity(self.value - other.value, self.dimension, self.unit_system)

    def __neg__(self) -> "Quantity":
        return Quantity(-self.value, self.dimension, self.unit_system)

    def __mul__(self, other: Union["Quantity", Number]) -> "Quantity":
        if isinstance(other, Quantity):
            if other.unit_system != self.unit_system:
                raise DimensionError(f"Cannot multiply {self.describe()} by {other.describe()}")
            dims = tuple(a + b for a, b in zip(self.dimension, other.dimension))
            return Quantity(self.value * other.value, dims, self.unit_system)
        return Quantity(self.value * float(other), self.dimension, self.unit_system)

    __rmul__ = __mul__

    def __truediv__(self, other: Union["Quantity", Number]) -> "Quantity":
        if isinstance(other, Quantity):
            if other.unit_system != self.unit_system:
                raise DimensionError(f"Cannot divide {self.describe()} by {other.describe()}")
            dims = tuple(a - b for a, b in zip(self.dimension, other.dimension))
            return Quantity(self.value / other.value, dims, self.unit_system)
        return Quantity(self.value / float(other), self.dimension, self.unit_system)

    def __pow__(self, power: int) -> "Quantity":
        if not isinstance(power, int):
            raise DimensionError("Quantities can only be raised to integer powers")
        dims = tuple(a * power for a in self.dimension)
        return Quantity(self.value ** power, dims, self.unit_system)

    # ---------- conversions ----------

    def energy_power(self) -> int:
        """Exponent over GeV of the natural-unit image of this quantity."""
        if self.unit_system == NATURAL:
            return self.dimension[0]
        kg, m, s, amp, kelvin = self.dimension
        if amp or kelvin:
            raise DimensionError(f"{self.describe()} has no natural-unit counterpart")
        return kg - m - s

    def to_natural(self) -> "Quantity":
        if self.unit_system == NATURAL:
            return self
        kg, m, s, _, _ = self.dimension
        self.energy_power()
        factor = _KG_IN_GEV ** kg * _M_IN_INV_GEV ** m * _S_IN_INV_GEV ** s
        return Quantity.natural(self.value * factor, kg - m - s)

    def to_si(self, kg: int = 0, m: int = 0, s: int = 0) -> "Quantity":
        """
        Express a natural-unit quantity in SI with the requested (kg, m, s) dimension.

        Natural units collapse mass, length and time onto energy, so the target
        dimension must be named; it has to carry the same energy exponent.
        """
        if self.unit_system == SI:
            if self.dimension[:3] != (kg, m, s):
                raise DimensionError(f"{self.describe()} is not kg^{kg} m^{m} s^{s}")
            return self
        if kg - m - s != self.dimension[0]:
            raise DimensionError(
                f"GeV^{self.dimension[0]} cannot be expressed as kg^{kg} m^{m} s^{s}"
            )
        factor = _KG_IN_GEV ** kg * _M_IN_INV_GEV ** m * _S_IN_INV_GEV ** s
        return Quantity.si(self.value / factor, kg=kg, m=m, s=s)

    def describe(self) -> str:
        if self.unit_system == NATURAL:
            return f"GeV^{self.dimension[0]}"
        parts = [f"{name}^{exp}" for name, exp in zip(SI_BASE, self.dimension) if exp]
        return " ".join(parts) or "dimensionless (SI)"
