# backend/numerics/exceptions.py

from typing import Optional

from plates_core.exceptions import NumericalError


class QuadratureError(NumericalError):
    """Quadrature did not converge, or the integrand produced a non-finite value."""

    def __init__(self, message: str, estimate: Optional[float] = None, error: Optional[float] = None):
        self.estimate = estimate
        self.error = error
        if error is not None:
            message = f"{message} (last estimate {estimate!r}, error {error!r})"
        super().__init__(message)


class RootFindingError(NumericalError):
    """The bracket has no sign change or the iteration budget ran out."""
    pass
