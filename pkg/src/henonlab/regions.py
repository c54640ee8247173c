"""Membership predicates and schedules for the invariant sectors and cones.

All region predicates use strict inequalities (the sets are open); boundary
points classify as outside.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .core import Point

__all__ = [
    "QuadrantLabel",
    "PP",
    "MP",
    "MM",
    "PM",
    "QUADRANT_PATTERNS",
    "in_sector_S",
    "point_in_S",
    "quadrant",
    "sigma",
    "sigma_inverse",
    "sigma_power",
    "in_W_kR",
    "r0_min",
    "ConeSchedule",
    "in_Wn",
    "in_W",
    "AbsorbingParams",
    "in_I",
    "point_in_IxI",
    "tan2theta_bound",
]


@dataclass(frozen=True, slots=True)
class QuadrantLabel:
    """Signs (a, b) of (Re z, Re w); exactly four values exist."""

    a: int
    b: int

    def __post_init__(self) -> None:
        if self.a not in (-1, 1) or self.b not in (-1, 1):
            raise ValueError("label components must be +1 or -1")

    def __str__(self) -> str:
        return ("+" if self.a > 0 else "-") + ("+" if self.b > 0 else "-")

    @classmethod
    def from_str(cls, text: str) -> "QuadrantLabel":
        signs = {"+": 1, "-": -1}
        if len(text) != 2 or text[0] not in signs or text[1] not in signs:
            raise ValueError(f"bad quadrant label {text!r}")
        return cls(signs[text[0]], signs[text[1]])


PP = QuadrantLabel(1, 1)
MP = QuadrantLabel(-1, 1)
MM = QuadrantLabel(-1, -1)
PM = QuadrantLabel(1, -1)

# Quadrant pattern of the n-th cone rung, indexed by n mod 4.
QUADRANT_PATTERNS = (PP, MP, MM, PM)


def in_sector_S(z: complex) -> bool:
    """Open double cone around the real axis: |Im z| < |Re z|."""
    return abs(z.imag) < abs(z.real)


def point_in_S(p: Point) -> bool:
    return in_sector_S(p.z) and in_sector_S(p.w)


def quadrant(p: Point) -> QuadrantLabel | None:
    """Label by the signs of Re z, Re w; None if either real part is 0."""
    if p.z.real == 0.0 or p.w.real == 0.0:
        return None
    return QuadrantLabel(1 if p.z.real > 0.0 else -1, 1 if p.w.real > 0.0 else -1)


def sigma(q: QuadrantLabel) -> QuadrantLabel:
    """Quadrant cycle induced by one map step: (a, b) -> (-b, a).  Order 4."""
    return QuadrantLabel(-q.b, q.a)


def sigma_inverse(q: QuadrantLabel) -> QuadrantLabel:
    return QuadrantLabel(q.b, -q.a)


def sigma_power(q: QuadrantLabel, m: int) -> QuadrantLabel:
    """m-fold cycle application; m may be negative (reduced mod 4)."""
    for _ in range(m % 4):
        q = sigma(q)
    return q


def in_W_kR(z: complex, k: float, R: float) -> bool:
    """Open cone |Im z| < k*|Re z| with inner radius |Re z| > R."""
    return abs(z.imag) < k * abs(z.real) and abs(z.real) > R


def r0_min(delta: float) -> float:
    """Least admissible base radius for the cone schedule at this delta.

    Maximizes (2/delta)^((n+1)/2) * (n+2)*(n+3) over n >= 0 (the terms tend
    to 0, so the supremum is attained), floored at 2.  The scan stops early
    once ten consecutive terms decreased below the running maximum; the term
    ratio sqrt(2/delta)*(n+4)/(n+2) < 1 eventually, so this is safe.
    """
    if not delta > 2.0:
        raise ValueError(f"delta must exceed 2, got {delta}")
    best = 0.0
    prev = math.inf
    decreasing = 0
    for n in range(1001):
        term = (2.0 / delta) ** ((n + 1) / 2.0) * (n + 2) * (n + 3)
        if term > best:
            best = term
        decreasing = decreasing + 1 if term < prev else 0
        if decreasing >= 10 and term < best:
            break
        prev = term
    return max(2.0, best)


@dataclass(frozen=True, slots=True)
class ConeSchedule:
    """Aperture/radius ladder: k_n = 1 - 1/(n+2), R_n = (delta/2)^(n/2) * r0.

    r0 must strictly exceed r0_min(delta) so the ladder is forward invariant
    with margin to spare under roundoff.
    """

    delta: float
    r0: float

    def __post_init__(self) -> None:
        if not self.delta > 2.0:
            raise ValueError(f"delta must exceed 2, got {self.delta}")
        if not self.r0 > r0_min(self.delta):
            raise ValueError(
                f"r0 must exceed r0_min({self.delta}) = {r0_min(self.delta)}"
            )

    def k(self, n: int) -> float:
        return 1.0 - 1.0 / (n + 2)

    def R(self, n: int) -> float:
        if n == -1:
            return self.r0
        if n < -1:
            raise ValueError("radius index must be >= -1")
        return (self.delta / 2.0) ** (n / 2.0) * self.r0

    @classmethod
    def for_delta(cls, delta: float, margin: float = 1.001) -> "ConeSchedule":
        """Default schedule: computed minimum radius plus a 0.1% margin."""
        return cls(delta, r0_min(delta) * margin)


def in_Wn(p: Point, n: int, sched: ConeSchedule) -> bool:
    """Rung n: z in cone (k_n, R_n), w in cone (k_n, R_{n-1}), pattern n mod 4."""
    if n < 0:
        raise ValueError("rung index must be nonnegative")
    pat = QUADRANT_PATTERNS[n % 4]
    return (
        pat.a * p.z.real > 0.0
        and pat.b * p.w.real > 0.0
        and in_W_kR(p.z, sched.k(n), sched.R(n))
        and in_W_kR(p.w, sched.k(n), sched.R(n - 1))
    )


def in_W(p: Point, sched: ConeSchedule, n_max: int) -> int | None:
    """Smallest rung index n <= n_max containing p, or None.

    Only rungs whose pattern matches the point's quadrant can contain it, so
    the scan walks one residue class mod 4; it stops once the growing inner
    radii exceed the point's real parts.
    """
    q = quadrant(p)
    if q is None:
        return None
    az = abs(p.z.real)
    aw = abs(p.w.real)
    for n in range(QUADRANT_PATTERNS.index(q), n_max + 1, 4):
        if sched.R(n) >= az or sched.R(n - 1) >= aw:
            break
        if in_W_kR(p.z, sched.k(n), sched.R(n)) and in_W_kR(
            p.w, sched.k(n), sched.R(n - 1)
        ):
            return n
    return None


@dataclass(frozen=True, slots=True)
class AbsorbingParams:
    """Threshold C >= 1 for the absorbing region Re(z^2) > C^2."""

    big_c: float = 1.0

    def __post_init__(self) -> None:
        if not self.big_c >= 1.0:
            raise ValueError(f"C must be >= 1, got {self.big_c}")


def in_I(z: complex, params: AbsorbingParams) -> bool:
    """Re(z^2) > C^2, i.e. the hyperbolic core of the sector."""
    return z.real * z.real - z.imag * z.imag > params.big_c * params.big_c


def point_in_IxI(p: Point, params: AbsorbingParams) -> bool:
    return in_I(p.z, params) and in_I(p.w, params)


def tan2theta_bound(k: float) -> float:
    """Bound on |Im z^2 / Re z^2| given |Im z / Re z| <= k < 1: 2k/(1-k^2)."""
    if not 0.0 <= k < 1.0:
        raise ValueError(f"k must lie in [0, 1), got {k}")
    return 2.0 * k / (1.0 - k * k)
