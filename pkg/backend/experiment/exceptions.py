# backend/experiment/exceptions.py

from plates_core.exceptions import NumericalError


class SweepPointError(NumericalError):
    """A single sweep point failed; carries its position so the run can report it."""

    def __init__(self, index: int, variable: str, value: float, cause: Exception):
        self.index = index
        self.variable = variable
        self.value = value
        self.cause = cause
        super().__init__(f"sweep point {index} ({variable}={value!r}) failed: {cause}")
