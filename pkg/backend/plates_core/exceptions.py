# backend/plates_core/exceptions.py

from typing import Optional, Sequence


class PlatesError(Exception):
    """Base class for every error raised by the library."""
    pass


class DomainError(PlatesError, ValueError):
    """An input outside the domain of an operation (negative density, z >= 1, ...)."""
    pass


class NumericalError(PlatesError, ArithmeticError):
    """A numerical engine failed to deliver a result to the requested tolerance."""
    pass


class ConfigError(PlatesError):
    """
    Invalid run configuration.

    Carries the offending key, the 1-based line number in the configuration text
    (None for overrides given on the command line) and close matches for unknown keys.
    """

    def __init__(
        self,
        message: str,
        key: Optional[str] = None,
        line: Optional[int] = None,
        suggestions: Sequence[str] = (),
    ):
        self.key = key
        self.line = line
        self.suggestions = tuple(suggestions)

        where = ""
        if key is not None:
            where = f"{key}: " if line is None else f"line {line}, {key}: "
        hint = ""
        if self.suggestions:
            hint = f" (did you mean: {', '.join(self.suggestions)}?)"
        super().__init__(f"{where}{message}{hint}")
