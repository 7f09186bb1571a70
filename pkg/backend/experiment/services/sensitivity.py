# backend/experiment/services/sensitivity.py

"""
How stable the patch potentials and the separation must be so that their
drift stays below a target pressure change.
"""

import dataclasses
import logging
import math

from background.domain import PatchModel
from background.services import electrostatic_pressure
from numerics.roots import RootSpec, find_root_bracketed
from plates_core.exceptions import DomainError, NumericalError

from ..domain import SensitivityResult

logger = logging.getLogger(__name__)

_MAX_DOUBLINGS = 200


def _bracket_upward(g, hi: float, limit: float = math.inf) -> float:
    """Grow hi until g(hi) > 0, given g(0) < 0."""
    for _ in range(_MAX_DOUBLINGS):
        if g(hi) > 0:
            return hi
        if hi >= limit:
            break
        hi = min(2.0 * hi, limit)
    raise NumericalError("Could not bracket the sensitivity root")


def sensitivity_requirements(patch: PatchModel, d: float, target: float) -> SensitivityResult:
    """
    delta_sigma: shift of sigma_l and sigma_s together (V) that changes the
    patch pressure at d (m) by target (pN/cm^2). delta_d: smallest change of
    d (m), in either direction, with the same effect.
    """
    if not (math.isfinite(target) and target > 0):
        raise DomainError(f"target must be positive, got {target!r}")
    if not (math.isfinite(d) and d > 0):
        raise DomainError(f"Separation must be positive, got {d!r}")

    base = electrostatic_pressure(patch, d)

    def sigma_gap(delta: float) -> float:
        shifted = dataclasses.replace(patch, sigma_l=patch.sigma_l + delta, sigma_s=patch.sigma_s + delta)
        return electrostatic_pressure(shifted, d) - base - target

    sigma_scale = max(patch.sigma_l, patch.sigma_s, 1e-6) * 1e-6
    hi = _bracket_upward(sigma_gap, sigma_scale)
    delta_sigma = find_root_bracketed(sigma_gap, RootSpec((0.0, hi)))

    def closer_gap(delta: float) -> float:
        return electrostatic_pressure(patch, d - delta) - base - target

    def farther_gap(delta: float) -> float:
        return base - electrostatic_pressure(patch, d + delta) - target

    candidates = []
    start = d * 1e-9
    hi = _bracket_upward(closer_gap, start, limit=0.5 * d)
    candidates.append(find_root_bracketed(closer_gap, RootSpec((0.0, hi))))
    try:
        hi = _bracket_upward(farther_gap, start)
        candidates.append(find_root_bracketed(farther_gap, RootSpec((0.0, hi))))
    except NumericalError:
        # Pressure far away may never drop by target.
        logger.info("No separation increase changes the patch pressure by %g pN/cm^2", target)

    delta_d = min(candidates)
    logger.info("Sensitivity at d=%.3g m: delta_sigma=%.3e V, delta_d=%.3e m", d, delta_sigma, delta_d)
    return SensitivityResult(delta_sigma=delta_sigma, delta_d=delta_d)
