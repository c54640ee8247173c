"""Convergent quantities of the map: limit sums, limit functions, conjugacy.

While the orbit stays in the sector every summand satisfies |f| < 1, so the
tails of the alternating sums are geometric: truncating after n terms leaves
at most delta^(-n)/(delta - 1).  That bound is conditional, so every orbit
point feeding a sum is certified to lie in the sector and the operations
raise OrbitLeftS instead of returning an estimate with no valid bound.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

from .core import (
    MapParams,
    Point,
    SaturatedOrbit,
    apply_F,
    apply_L_inverse,
    eval_f,
    iterate,
)
from .regions import in_sector_S

__all__ = [
    "OrbitLeftS",
    "LimitEstimate",
    "ConjugacyImage",
    "INFINITY_FLOOR",
    "delta_limits",
    "h1",
    "h2",
    "phi",
    "phi_n",
    "u_n",
    "mean_value_check",
]

# |denominator| below this flags the value as the point at infinity.
INFINITY_FLOOR = 1e-300

_SQRT2 = math.sqrt(2.0)


class OrbitLeftS(ValueError):
    """An orbit point feeding a certified sum left the sector."""

    def __init__(self, step: int):
        self.step = step
        super().__init__(f"orbit point at step {step} is outside the sector")


@dataclass(frozen=True, slots=True)
class LimitEstimate:
    """Truncated limit value with its geometric tail bound.

    ``truncation_bound`` is delta^(-terms_used)/(delta-1), valid because the
    orbit points used were certified in the sector.  ``at_infinity`` marks a
    value on the sphere's point at infinity; ``value`` is then infinite.
    """

    value: complex
    truncation_bound: float
    terms_used: int
    at_infinity: bool = False


@dataclass(frozen=True, slots=True)
class ConjugacyImage:
    """Image under the linearizing conjugacy plus a distance-to-identity bound."""

    point: Point
    error_bound: float


def _terms_for_tol(delta: float, tol: float) -> tuple[int, float]:
    """Smallest n with tail bound delta^(-n)/(delta-1) <= tol."""
    if tol <= 0.0:
        raise ValueError("tolerance must be positive")
    n = 0
    bound = 1.0 / (delta - 1.0)
    while bound > tol:
        n += 1
        bound = delta**-n / (delta - 1.0)
    return n, bound


def _certified_orbit(p: Point, depth: int, params: MapParams) -> list[Point]:
    """Orbit through ``depth`` whose z-coordinates are all certified in the
    sector; reports the earliest offense (sector exit before saturation)."""
    if p.saturated:
        raise SaturatedOrbit("orbit saturated at step 0")
    pts = [p]
    for step in range(depth + 1):
        if not in_sector_S(pts[step].z):
            raise OrbitLeftS(step)
        if step < depth:
            nxt = apply_F(pts[step], params)
            if nxt.saturated:
                raise SaturatedOrbit(f"orbit saturated at step {step + 1}")
            pts.append(nxt)
    return pts


def delta_limits(
    p: Point, tol: float, params: MapParams
) -> tuple[LimitEstimate, LimitEstimate]:
    """Both limit sums truncated once the geometric tail drops below tol."""
    n, bound = _terms_for_tol(params.delta, tol)
    if n == 0:
        zero = LimitEstimate(0j, bound, 0)
        return zero, zero
    pts = _certified_orbit(p, 2 * n - 1, params)
    d1 = 0j
    d2 = 0j
    coeff = 1.0
    for j in range(1, n + 1):
        coeff /= -params.delta
        # in-sector arguments have Re(z^2) > 0, so f cannot saturate here
        d1 += coeff * eval_f(pts[2 * j - 1].z, params)
        d2 += coeff * eval_f(pts[2 * j - 2].z, params)
    return LimitEstimate(d1, bound, n), LimitEstimate(d2, bound, n)


def h1(p: Point, tol: float, params: MapParams) -> LimitEstimate:
    """First limit function: the limit of z_n/w_n along even steps.

    Evaluates (z + D1)/(w + D2); a vanishing denominator maps to the point
    at infinity (the function takes values on the Riemann sphere).
    """
    d1, d2 = delta_limits(p, tol, params)
    num = p.z + d1.value
    den = p.w + d2.value
    if abs(den) < INFINITY_FLOOR:
        return LimitEstimate(
            complex(math.inf, math.inf), d1.truncation_bound, d1.terms_used, True
        )
    return LimitEstimate(num / den, d1.truncation_bound, d1.terms_used)


def h2(p: Point, tol: float, params: MapParams) -> LimitEstimate:
    """Second limit function, -delta/h1 (the odd-step coordinate ratio)."""
    est = h1(p, tol, params)
    if est.at_infinity:
        return LimitEstimate(0j, est.truncation_bound, est.terms_used)
    if abs(est.value) < INFINITY_FLOOR:
        return LimitEstimate(
            complex(math.inf, math.inf), est.truncation_bound, est.terms_used, True
        )
    return LimitEstimate(
        -params.delta / est.value, est.truncation_bound, est.terms_used
    )


def phi(p: Point, tol: float, params: MapParams) -> ConjugacyImage:
    """Linearizing conjugacy (z + D1, w + D2).

    ``error_bound`` certifies the distance to the identity: sqrt(2) times the
    largest truncated sum plus its tail, itself strictly below sqrt(2) when
    the orbit stays in the sector.
    """
    d1, d2 = delta_limits(p, tol, params)
    spread = max(abs(d1.value), abs(d2.value)) + d1.truncation_bound
    return ConjugacyImage(Point(p.z + d1.value, p.w + d2.value), _SQRT2 * spread)


def phi_n(p: Point, n: int, params: MapParams) -> Point:
    """Finite-stage conjugacy, literally L^(-n) of F^n(P) (validation path)."""
    if n < 0:
        raise ValueError("step count must be nonnegative")
    orbit = iterate(p, n, params)
    if orbit.saturated_at is not None:
        raise SaturatedOrbit(f"orbit saturated at step {orbit.saturated_at}")
    cur = orbit.points[n]
    for _ in range(n):
        cur = apply_L_inverse(cur, params)
    return cur


def u_n(p: Point, n: int, params: MapParams) -> float:
    """Escape diagnostic -Re(z_n^2)/n; very negative on the invariant cones."""
    if n < 1:
        raise ValueError("step index must be >= 1")
    orbit = iterate(p, n, params)
    if orbit.saturated_at is not None:
        raise SaturatedOrbit(f"orbit saturated at step {orbit.saturated_at}")
    zn = orbit.points[n].z
    return -(zn.real * zn.real - zn.imag * zn.imag) / n


def mean_value_check(
    p: Point,
    direction: tuple[complex, complex],
    radius: float,
    n: int,
    quad_points: int,
    params: MapParams,
) -> float:
    """Residual of the mean value property on an affine holomorphic disk.

    The diagnostic composed with zeta -> P + zeta*radius*direction is harmonic
    in zeta, so its exact average over the boundary circle equals the center
    value.  Returns |center - trapezoid average| over quad_points equispaced
    nodes; the trapezoid rule is spectrally accurate for smooth periodic
    integrands, so the residual is dominated by roundoff once converged.
    """
    if quad_points < 1:
        raise ValueError("need at least one quadrature node")
    if radius == 0.0:
        return 0.0
    center = u_n(p, n, params)
    dz, dw = direction
    nodes = (cmath.rect(radius, 2.0 * math.pi * k / quad_points) for k in range(quad_points))
    # fsum keeps the boundary sum correctly rounded; naive accumulation noise
    # would swamp the quadrature error the residual is meant to expose
    total = math.fsum(
        u_n(Point(p.z + zeta * dz, p.w + zeta * dw), n, params) for zeta in nodes
    )
    return abs(center - total / quad_points)
