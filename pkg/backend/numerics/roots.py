# backend/numerics/roots.py

"""
Bracketed root finding for monotone maps (used to invert d(z)).

Brent's method keeps a sign-changing bracket at every step and mixes bisection
with secant / inverse quadratic steps, so the objective is never evaluated
outside [lo, hi] and no derivatives are needed.
"""

import logging
import math
import sys
from dataclasses import dataclass, field
from typing import Callable, Tuple

from scipy import optimize

from plates_core.conf import plates_setting
from plates_core.exceptions import DomainError

from .exceptions import RootFindingError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class RootSpec:
    bracket: Tuple[float, float]
    rel_tol: float = field(default_factory=lambda: float(plates_setting("ROOT_REL_TOL")))
    max_iter: int = field(default_factory=lambda: int(plates_setting("ROOT_MAX_ITER")))
    # Absolute abscissa tolerance; 0 means rel_tol scaled by the bracket magnitude.
    abs_tol: float = 0.0

    def __post_init__(self):
        lo, hi = self.bracket
        if not (math.isfinite(lo) and math.isfinite(hi)) or not lo < hi:
            raise DomainError(f"Bracket must satisfy lo < hi, got {self.bracket!r}")
        if not self.rel_tol > 0 or self.max_iter < 1:
            raise DomainError("rel_tol must be positive and max_iter at least 1")


def find_root_bracketed(g: Callable[[float], float], spec: RootSpec) -> float:
    """
    Root of g inside spec.bracket. The signs of g at the two ends are checked
    before iterating; identical inputs give bit-identical results.
    """
    lo, hi = spec.bracket
    g_lo, g_hi = g(lo), g(hi)
    if math.isnan(g_lo) or math.isnan(g_hi):
        raise RootFindingError(f"Objective is NaN at the bracket ends {spec.bracket!r}")
    if g_lo == 0.0:
        return lo
    if g_hi == 0.0:
        return hi
    if (g_lo > 0) == (g_hi > 0):
        raise RootFindingError(
            f"No sign change on [{lo!r}, {hi!r}]: g(lo)={g_lo!r}, g(hi)={g_hi!r}"
        )

    xtol = spec.abs_tol or spec.rel_tol * max(abs(lo), abs(hi))
    # brentq rejects rtol below 4 eps.
    rtol = max(spec.rel_tol, 4.0 * sys.float_info.epsilon)

    root, info = optimize.brentq(
        g, lo, hi,
        xtol=xtol,
        rtol=rtol,
        maxiter=spec.max_iter,
        full_output=True,
        disp=False,
    )
    if not info.converged:
        logger.warning("brentq stopped after %d iterations: %s", info.iterations, info.flag)
        raise RootFindingError(
            f"Root not found within {spec.max_iter} iterations on [{lo!r}, {hi!r}]"
        )
    return float(root)
