# backend/numerics/quadrature.py

"""
Quadrature for integrals with integrable endpoint singularities.

The primary engine is the double-exponential (tanh-sinh) rule: x = tanh(pi/2 sinh t)
sends both endpoints to infinity in t, node density grows doubly exponentially toward
the endpoints and the trapezoidal rule in t converges geometrically. Halving the
step only adds the odd nodes, so each level reuses the previous sum.

Integrands are called on numpy arrays. With ``with_offsets=True`` they are called as
``f(x, left, right)`` where ``left`` and ``right`` are the distances from x to the
lower and upper limit, computed directly from the node formula instead of by
subtraction. Near a singular endpoint
those offsets reach ~1e-300 while ``x`` itself would round onto the endpoint.

The adaptive-subdivision method (QUADPACK via scipy.integrate.quad) is kept as a
cross-check.
"""

import logging
import math
from dataclasses import dataclass, field
from typing import Callable

import numpy as np
from scipy import integrate

from plates_core.conf import plates_setting
from plates_core.exceptions import DomainError

from .exceptions import QuadratureError

logger = logging.getLogger(__name__)

DOUBLE_EXPONENTIAL = "double_exponential"
ADAPTIVE_SUBDIVISION = "adaptive_subdivision"
METHOD_CHOICES = (DOUBLE_EXPONENTIAL, ADAPTIVE_SUBDIVISION)

MIN_REL_TOL = 1e-13
MAX_LEVELS = 14

# Beyond |t| = 6.5 the node offsets underflow for any interval of length <= 1e8.
_T_MAX = 6.5
_HALF_PI = 0.5 * math.pi
# Nodes closer to an endpoint than this (relative to the half length) are dropped;
# an integrable singularity contributes about offset**(1 - s) from below it.
_MIN_OFFSET = 1e-250
_MIN_LEVEL = 3
_EPS = np.finfo(float).eps


@dataclass(frozen=True)
class QuadratureSpec:
    method: str = DOUBLE_EXPONENTIAL
    rel_tol: float = field(default_factory=lambda: float(plates_setting("QUAD_REL_TOL")))
    abs_tol: float = field(default_factory=lambda: float(plates_setting("QUAD_ABS_TOL")))
    max_levels: int = field(default_factory=lambda: int(plates_setting("QUAD_MAX_LEVELS")))

    def __post_init__(self):
        if self.method not in METHOD_CHOICES:
            raise DomainError(f"Unknown quadrature method {self.method!r}")
        if not self.rel_tol >= MIN_REL_TOL:
            raise DomainError(f"rel_tol must be >= {MIN_REL_TOL}, got {self.rel_tol!r}")
        if self.abs_tol < 0:
            raise DomainError("abs_tol cannot be negative")
        if not 1 <= self.max_levels <= MAX_LEVELS:
            raise DomainError(f"max_levels must be in [1, {MAX_LEVELS}], got {self.max_levels!r}")


@dataclass(frozen=True)
class QuadratureResult:
    value: float
    error: float
    levels: int
    evaluations: int


Integrand = Callable[..., np.ndarray]


def integrate_endpoint_singular(
    f: Integrand,
    a: float,
    b: float,
    spec: QuadratureSpec = None,
    *,
    with_offsets: bool = False,
) -> float:
    """
    Integral of f over (a, b) for integrands with at worst power-law endpoint
    singularities of exponent > -1. f is never evaluated at a or b.
    """
    return integrate_with_estimate(f, a, b, spec, with_offsets=with_offsets).value


def integrate_with_estimate(
    f: Integrand,
    a: float,
    b: float,
    spec: QuadratureSpec = None,
    *,
    with_offsets: bool = False,
) -> QuadratureResult:
    spec = spec or QuadratureSpec()
    if not (math.isfinite(a) and math.isfinite(b)):
        raise DomainError("Integration limits must be finite")
    if a == b:
        return QuadratureResult(0.0, 0.0, 0, 0)
    if a > b:
        flipped = integrate_with_estimate(f, b, a, spec, with_offsets=with_offsets)
        return QuadratureResult(-flipped.value, flipped.error, flipped.levels, flipped.evaluations)

    if spec.method == ADAPTIVE_SUBDIVISION:
        return _adaptive(f, a, b, spec, with_offsets)
    return _tanh_sinh(f, a, b, spec, with_offsets)


# ---------- tanh-sinh ----------

def _node_table(t: np.ndarray, half_length: float):
    """Distance to the nearer endpoint, to the farther one, and dx/dt for t >= 0."""
    u = _HALF_PI * np.sinh(t)
    e = np.exp(-2.0 * u)
    complement = 2.0 * e / (1.0 + e)  # 1 - tanh(u)
    near = half_length * complement
    far = half_length * (2.0 - complement)
    weight = half_length * _HALF_PI * np.cosh(t) * 4.0 * e / (1.0 + e) ** 2
    return near, far, weight


def _level_sum(f, a, b, t, with_offsets):
    """Sum of w(t) f(x(t)) over +t and -t for the given t > 0 (and t == 0 once)."""
    half_length = 0.5 * (b - a)
    near, far, weight = _node_table(t, half_length)

    keep = (near > _MIN_OFFSET * half_length) & (weight > 0.0)
    near, far, weight, t = near[keep], far[keep], weight[keep], t[keep]

    x_right = b - near
    x_left = a + near
    if not with_offsets:
        # Offsets below the spacing of floats at a or b land on the endpoint.
        ok_right = x_right < b
        ok_left = x_left > a
    else:
        ok_right = ok_left = np.ones_like(near, dtype=bool)

    # The t == 0 node is the midpoint; count it once.
    ok_left = ok_left & (t > 0.0)

    xs = np.concatenate([x_right[ok_right], x_left[ok_left]])
    ws = np.concatenate([weight[ok_right], weight[ok_left]])
    if xs.size == 0:
        return 0.0, 0.0, 0

    with np.errstate(over="ignore", under="ignore", divide="ignore", invalid="ignore"):
        if with_offsets:
            lefts = np.concatenate([far[ok_right], near[ok_left]])
            rights = np.concatenate([near[ok_right], far[ok_left]])
            values = np.asarray(f(xs, lefts, rights), dtype=float)
        else:
            values = np.asarray(f(xs), dtype=float)

    values = np.broadcast_to(values, xs.shape)
    if not np.all(np.isfinite(values)):
        bad = xs[~np.isfinite(values)][0]
        raise QuadratureError(f"Integrand is not finite at x={bad!r}")

    terms = ws * values
    return float(math.fsum(terms)), float(np.sum(np.abs(terms))), int(xs.size)


def _tanh_sinh(f, a, b, spec: QuadratureSpec, with_offsets: bool) -> QuadratureResult:
    h = 1.0
    t = np.arange(0.0, _T_MAX + 0.5 * h, h)
    raw, raw_abs, evaluations = _level_sum(f, a, b, t, with_offsets)
    total, total_abs = h * raw, h * raw_abs
    error = math.inf

    for level in range(1, spec.max_levels + 1):
        h *= 0.5
        new_t = np.arange(h, _T_MAX + 0.5 * h, 2.0 * h)
        raw, raw_abs, count = _level_sum(f, a, b, new_t, with_offsets)
        evaluations += count

        previous = total
        total = 0.5 * previous + h * raw
        total_abs = 0.5 * total_abs + h * raw_abs

        # Difference of successive levels bounds the error of the coarser one;
        # the floor covers rounding in the sum itself.
        error = max(abs(total - previous), 16.0 * _EPS * total_abs)
        tolerance = max(spec.abs_tol, spec.rel_tol * abs(total))
        if level >= _MIN_LEVEL and error <= tolerance:
            return QuadratureResult(total, error, level, evaluations)

    logger.warning(
        "tanh-sinh did not converge on [%r, %r] after %d levels (error %.3e)",
        a, b, spec.max_levels, error,
    )
    raise QuadratureError(
        f"tanh-sinh quadrature did not converge within {spec.max_levels} levels",
        estimate=total,
        error=error,
    )


# ---------- adaptive subdivision ----------

def _adaptive(f, a, b, spec: QuadratureSpec, with_offsets: bool) -> QuadratureResult:
    if with_offsets:
        def scalar(x):
            return float(f(np.asarray(x), np.asarray(x - a), np.asarray(b - x)))
    else:
        def scalar(x):
            return float(f(np.asarray(x)))

    # QUADPACK refuses relative tolerances below ~50 eps.
    epsrel = max(spec.rel_tol, 50.0 * _EPS)
    result = integrate.quad(
        scalar, a, b,
        epsabs=spec.abs_tol,
        epsrel=epsrel,
        limit=50 * (2 ** spec.max_levels // 64 + 1),
        full_output=1,
    )
    value, error, info = result[0], result[1], result[2]
    if len(result) > 3:
        logger.warning("QUADPACK reported: %s", result[3])
        raise QuadratureError(f"adaptive quadrature failed: {result[3]}", estimate=value, error=error)
    if not math.isfinite(value):
        raise QuadratureError("adaptive quadrature returned a non-finite value")
    return QuadratureResult(value, error, 0, int(info["neval"]))
