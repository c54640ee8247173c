"""Arithmetic of the plane automorphism F(z, w) = (exp(-z^2) - delta*w, z).

The map is iterated with plain IEEE doubles.  exp(-z^2) overflows a double
once Re(z^2) < -709 or so; such evaluations are *saturated*: they return an
infinite sentinel and downstream values carry a saturation flag instead of
propagating raw infinities.  Re(z^2) > 709 underflows harmlessly to exact 0.

Direct iteration is the production path.  The closed-form iterate built from
the alternating partial sums is kept as an independent validation path; it
accumulates a (-delta)^n scale factor and therefore overflows sooner.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

__all__ = [
    "EXP_OVERFLOW_LIMIT",
    "SATURATED_VALUE",
    "SaturatedOrbit",
    "MapParams",
    "Point",
    "Orbit",
    "eval_f",
    "is_saturated_value",
    "apply_F",
    "apply_F_inverse",
    "apply_L",
    "apply_L_inverse",
    "iterate",
    "delta_partial_sums",
    "closed_form_iterate",
]

# exp() of a double overflows just above 709.78; stay at the integer below.
EXP_OVERFLOW_LIMIT = 709.0

# Sentinel returned by a saturated exp(-z^2) evaluation.
SATURATED_VALUE = complex(math.inf, math.inf)


class SaturatedOrbit(ValueError):
    """An operation required orbit points beyond a saturation event."""


@dataclass(frozen=True, slots=True)
class MapParams:
    """Fixes the specific map: delta > 2 plus the exp overflow guard."""

    delta: float = 3.0
    exp_guard: float = EXP_OVERFLOW_LIMIT

    def __post_init__(self) -> None:
        if not self.delta > 2.0:
            raise ValueError(f"delta must exceed 2, got {self.delta}")
        if not 0.0 < self.exp_guard <= EXP_OVERFLOW_LIMIT:
            raise ValueError(f"exp_guard must lie in (0, {EXP_OVERFLOW_LIMIT}]")


@dataclass(frozen=True, slots=True)
class Point:
    """A point (z, w) of the dynamical plane.

    Components are finite unless ``saturated`` is set, in which case the
    offending component holds the infinite sentinel.
    """

    z: complex
    w: complex
    saturated: bool = False


@dataclass(frozen=True, slots=True)
class Orbit:
    """Forward orbit segment.  ``points[i+1] == F(points[i])`` for stored i.

    ``saturated_at = s`` means applying the map to ``points[s-1]`` saturated;
    the saturated value itself is not stored.
    """

    points: tuple[Point, ...]
    saturated_at: int | None = None


def is_saturated_value(value: complex) -> bool:
    return not cmath.isfinite(value)


def eval_f(z: complex, params: MapParams) -> complex:
    """exp(-z^2), saturating instead of overflowing.

    Returns the infinite sentinel when the magnitude (or, for absurdly large
    inputs, the phase) is not representable; returns exact 0 on underflow.
    """
    re, im = z.real, z.imag
    re_sq = re * re - im * im  # Re(z^2); may itself overflow to +-inf
    if math.isnan(re_sq):
        return SATURATED_VALUE
    if re_sq > params.exp_guard:
        return 0j
    if re_sq < -params.exp_guard:
        return SATURATED_VALUE
    im_sq = 2.0 * re * im  # Im(z^2)
    if math.isinf(im_sq):
        return SATURATED_VALUE
    return cmath.exp(complex(-re_sq, -im_sq))


def apply_F(p: Point, params: MapParams) -> Point:
    """One forward step: (z, w) -> (exp(-z^2) - delta*w, z)."""
    if p.saturated:
        return p
    fz = eval_f(p.z, params)
    if is_saturated_value(fz):
        return Point(SATURATED_VALUE, p.z, saturated=True)
    z1 = fz - params.delta * p.w
    if not cmath.isfinite(z1):
        # the linear part itself left double range (coordinates near 1e308)
        return Point(SATURATED_VALUE, p.z, saturated=True)
    return Point(z1, p.z)


def apply_F_inverse(p: Point, params: MapParams) -> Point:
    """Inverse step, solved from the map: (Z, W) -> (W, (exp(-W^2) - Z)/delta)."""
    if p.saturated:
        return p
    fw = eval_f(p.w, params)
    if is_saturated_value(fw):
        return Point(p.w, SATURATED_VALUE, saturated=True)
    w1 = (fw - p.z) / params.delta
    if not cmath.isfinite(w1):
        return Point(p.w, SATURATED_VALUE, saturated=True)
    return Point(p.w, w1)


def apply_L(p: Point, params: MapParams) -> Point:
    """Linear part L(z, w) = (-delta*w, z)."""
    return Point(-params.delta * p.w, p.z, p.saturated)


def apply_L_inverse(p: Point, params: MapParams) -> Point:
    """L^(-1)(Z, W) = (W, -Z/delta)."""
    return Point(p.w, -p.z / params.delta, p.saturated)


def iterate(p: Point, n: int, params: MapParams) -> Orbit:
    """Orbit (P, F(P), ..., F^n(P)), stopping early at the first saturation."""
    if n < 0:
        raise ValueError("step count must be nonnegative")
    if p.saturated:
        return Orbit((), saturated_at=0)
    pts = [p]
    for step in range(1, n + 1):
        nxt = apply_F(pts[-1], params)
        if nxt.saturated:
            return Orbit(tuple(pts), saturated_at=step)
        pts.append(nxt)
    return Orbit(tuple(pts))


def _partial_sums(
    p: Point, n_odd: int, n_even: int, params: MapParams
) -> tuple[complex, complex]:
    """Alternating sums over the orbit.

    First component sums (-delta)^(-j) * f(z_{2j-1}) for j = 1..n_odd, second
    sums (-delta)^(-j) * f(z_{2j-2}) for j = 1..n_even.
    """
    depth = max(2 * n_odd - 1, 2 * n_even - 2, 0)
    orbit = iterate(p, depth, params)
    if orbit.saturated_at is not None:
        raise SaturatedOrbit(
            f"orbit saturated at step {orbit.saturated_at}, need step {depth}"
        )
    d1 = 0j
    d2 = 0j
    coeff = 1.0
    for j in range(1, max(n_odd, n_even) + 1):
        coeff /= -params.delta
        if j <= n_odd:
            term = eval_f(orbit.points[2 * j - 1].z, params)
            if is_saturated_value(term):
                raise SaturatedOrbit(f"f(z_{2 * j - 1}) saturated")
            d1 += coeff * term
        if j <= n_even:
            term = eval_f(orbit.points[2 * j - 2].z, params)
            if is_saturated_value(term):
                raise SaturatedOrbit(f"f(z_{2 * j - 2}) saturated")
            d2 += coeff * term
    return d1, d2


def delta_partial_sums(p: Point, n: int, params: MapParams) -> tuple[complex, complex]:
    """n-term truncations of the two limit sums, by direct summation.

    Requires the orbit through step 2n-1; raises SaturatedOrbit otherwise.
    """
    if n < 0:
        raise ValueError("term count must be nonnegative")
    if n == 0:
        return 0j, 0j
    return _partial_sums(p, n, n, params)


def closed_form_iterate(p: Point, n: int, params: MapParams) -> Point:
    """F^n(P) assembled from the closed-form expressions (validation path).

    Even order 2m:   (-delta)^m * (z0 + D1_m,  w0 + D2_m)
    Odd order 2m+1:  (-delta)^m * (-delta*(w0 + D2_{m+1}),  z0 + D1_m)

    where D1, D2 are the alternating partial sums over the orbit.
    """
    if n < 0:
        raise ValueError("step count must be nonnegative")
    if n == 0:
        return p
    m, odd = divmod(n, 2)
    if odd:
        d1, d2 = _partial_sums(p, m, m + 1, params)
        scale = (-params.delta) ** m
        return Point(scale * -params.delta * (p.w + d2), scale * (p.z + d1))
    d1, d2 = _partial_sums(p, m, m, params)
    scale = (-params.delta) ** m
    return Point(scale * (p.z + d1), scale * (p.w + d2))
