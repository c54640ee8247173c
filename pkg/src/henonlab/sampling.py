"""Seeded sampling streams and region samplers for the verification suites.

The generator is splitmix64, written out so any implementation can reproduce
the streams bit for bit:

    state = (state + 0x9E3779B97F4A7C15) mod 2^64
    z = state
    z = ((z xor (z >> 30)) * 0xBF58476D1CE4E5B9) mod 2^64
    z = ((z xor (z >> 27)) * 0x94D049BB133111EB) mod 2^64
    output = z xor (z >> 31)

Doubles in [0, 1) take the top 53 bits of the output.  Per-suite sub-seeds
are the FNV-1a 64-bit hash of the suite name xor the master seed, passed
through one extra splitmix64 output step.
"""

from __future__ import annotations

import cmath
import math

from .core import Point
from .regions import (
    QUADRANT_PATTERNS,
    AbsorbingParams,
    ConeSchedule,
    QuadrantLabel,
    in_I,
    in_sector_S,
    in_W_kR,
    in_Wn,
)

__all__ = [
    "SplitMix64",
    "derive_seed",
    "sample_sector",
    "sample_S_point",
    "sample_cone",
    "sample_Wn",
    "sample_W",
    "sample_IxI_point",
    "sample_box",
]

_MASK64 = (1 << 64) - 1
_GOLDEN = 0x9E3779B97F4A7C15
_MIX1 = 0xBF58476D1CE4E5B9
_MIX2 = 0x94D049BB133111EB
_FNV_OFFSET = 0xCBF29CE484222325
_FNV_PRIME = 0x100000001B3


class SplitMix64:
    """Deterministic 64-bit stream; see the module docstring for the update."""

    __slots__ = ("state",)

    def __init__(self, seed: int):
        self.state = seed & _MASK64

    def next_u64(self) -> int:
        self.state = (self.state + _GOLDEN) & _MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * _MIX1) & _MASK64
        z = ((z ^ (z >> 27)) * _MIX2) & _MASK64
        return z ^ (z >> 31)

    def uniform(self) -> float:
        return (self.next_u64() >> 11) * 2.0**-53

    def uniform_in(self, lo: float, hi: float) -> float:
        return lo + (hi - lo) * self.uniform()

    def log_uniform(self, lo: float, hi: float) -> float:
        return math.exp(self.uniform_in(math.log(lo), math.log(hi)))

    def sign(self) -> int:
        return 1 if self.next_u64() & 1 else -1

    def randint(self, lo: int, hi: int) -> int:
        """Uniform integer in [lo, hi]; modulo bias is negligible at 64 bits."""
        return lo + self.next_u64() % (hi - lo + 1)


def derive_seed(seed: int, tag: str) -> int:
    h = _FNV_OFFSET
    for byte in tag.encode("utf-8"):
        h = ((h ^ byte) * _FNV_PRIME) & _MASK64
    return SplitMix64(h ^ (seed & _MASK64)).next_u64()


def sample_sector(
    rng: SplitMix64, mod_lo: float, mod_hi: float, sign: int | None = None
) -> complex:
    """z with |Im z| < |Re z|: modulus log-uniform, argument uniform in the
    open aperture, real-part sign as requested (random when None)."""
    while True:
        m = rng.log_uniform(mod_lo, mod_hi)
        theta = rng.uniform_in(-math.pi / 4, math.pi / 4)
        s = rng.sign() if sign is None else sign
        z = cmath.rect(m, theta)
        if s < 0:
            z = -z
        if in_sector_S(z):  # guards argument draws rounding onto the boundary
            return z


def sample_S_point(
    rng: SplitMix64,
    mod_lo: float = 1e-3,
    mod_hi: float = 1e3,
    label: QuadrantLabel | None = None,
) -> Point:
    a = None if label is None else label.a
    b = None if label is None else label.b
    return Point(
        sample_sector(rng, mod_lo, mod_hi, a), sample_sector(rng, mod_lo, mod_hi, b)
    )


def sample_cone(
    rng: SplitMix64,
    k: float,
    radius: float,
    hi_factor: float = 100.0,
    sign: int | None = None,
) -> complex:
    """Point of the open cone |Im z| < k|Re z|, |Re z| > radius.

    Modulus log-uniform in [1.01 * radius, hi_factor * radius], argument
    uniform in the aperture; draws whose real part lands under the inner
    radius (argument near the aperture edge) are rejected and redrawn.
    """
    half = math.atan(k)
    s = rng.sign() if sign is None else sign
    while True:
        z = cmath.rect(
            rng.log_uniform(1.01 * radius, hi_factor * radius),
            rng.uniform_in(-half, half),
        )
        if s < 0:
            z = -z
        if in_W_kR(z, k, radius):
            return z


def sample_Wn(
    rng: SplitMix64, n: int, sched: ConeSchedule, mod_hi_factor: float = 100.0
) -> Point:
    """Point of rung n: each coordinate from its cone, quadrant pattern applied."""
    pat = QUADRANT_PATTERNS[n % 4]
    p = Point(
        sample_cone(rng, sched.k(n), sched.R(n), mod_hi_factor, pat.a),
        sample_cone(rng, sched.k(n), sched.R(n - 1), mod_hi_factor, pat.b),
    )
    if not in_Wn(p, n, sched):
        raise RuntimeError("rung sampler produced a point outside its rung")
    return p


def sample_W(
    rng: SplitMix64, sched: ConeSchedule, n_lo: int = 0, n_hi: int = 12
) -> tuple[Point, int]:
    """Rung drawn uniformly from [n_lo, n_hi], then a point of that rung."""
    n = rng.randint(n_lo, n_hi)
    return sample_Wn(rng, n, sched), n


def _core_coord(rng: SplitMix64, params: AbsorbingParams, mod_hi: float, sign: int) -> complex:
    c = params.big_c
    while True:
        x = rng.log_uniform(1.01 * c, mod_hi)
        y = rng.uniform_in(-0.99, 0.99) * math.sqrt(x * x - c * c)
        z = complex(sign * x, y)
        if in_I(z, params):
            return z


def sample_IxI_point(
    rng: SplitMix64,
    params: AbsorbingParams,
    mod_hi: float = 1e3,
    label: QuadrantLabel | None = None,
) -> Point:
    a = rng.sign() if label is None else label.a
    b = rng.sign() if label is None else label.b
    return Point(
        _core_coord(rng, params, mod_hi, a), _core_coord(rng, params, mod_hi, b)
    )


def sample_box(
    rng: SplitMix64, bounds: tuple[float, float, float, float]
) -> complex:
    """Uniform complex draw from [re_lo, re_hi] x [im_lo, im_hi]."""
    re_lo, re_hi, im_lo, im_hi = bounds
    return complex(rng.uniform_in(re_lo, re_hi), rng.uniform_in(im_lo, im_hi))
