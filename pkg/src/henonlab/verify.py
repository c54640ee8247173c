"""Property-test harness: named suites, seeded sampling, machine-readable reports.

Each suite checks one quantitative statement about the map on a seeded sample
stream.  A sample that fails a suite's precondition counts as inadmissible,
not failed.  ``worst_violation`` is the largest signed margin by which the
asserted inequality was approached (negative) or broken (nonnegative); for
discrete assertions the margin is a sign-distance with the same convention.

Reports are reproducible: the same (seed, parameters) give the same counts
and the same worst_violation to the last bit.  Suites draw from sub-seeds
derived from their own names, so they are order-independent.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import BinaryIO, Callable, Union
import os

from .classify import ClassifyConfig, Status, classify
from .core import MapParams, Point, apply_F, apply_L, eval_f, iterate
from .limits import delta_limits, h1, h2, mean_value_check, phi
from .regions import (
    QUADRANT_PATTERNS,
    AbsorbingParams,
    ConeSchedule,
    in_sector_S,
    in_W_kR,
    in_Wn,
    point_in_IxI,
    point_in_S,
    quadrant,
    sigma,
    tan2theta_bound,
)
from .sampling import (
    SplitMix64,
    derive_seed,
    sample_cone,
    sample_S_point,
    sample_sector,
    sample_W,
    sample_Wn,
)

__all__ = [
    "UnknownSuite",
    "SamplerSpec",
    "SuiteReport",
    "SUITE_NAMES",
    "default_sampler",
    "run_suite",
    "run_all",
    "emit_report",
]


class UnknownSuite(ValueError):
    """Requested suite name is not in the catalog."""


@dataclass(frozen=True, slots=True)
class SamplerSpec:
    """Sampling region, scale and seed for one suite run.

    ``region`` names the sample source; suite-specific knobs (rung range,
    aperture ratio k, core threshold C, modulus range) ride along and are
    read only by the suites that need them.
    """

    region: str
    count: int
    seed: int
    n_max: int = 12
    k: float = 0.5
    big_c: float = 1.0
    mod_lo: float = 1e-3
    mod_hi: float = 1e3

    def __post_init__(self) -> None:
        if self.count < 1:
            raise ValueError("count must be >= 1")


@dataclass(frozen=True, slots=True)
class SuiteReport:
    suite: str
    attempted: int
    admissible: int
    failures: int
    worst_violation: float
    seed: int
    delta: float
    r0: float
    big_c: float


class _Tally:
    """Aggregates per-sample margins; failure means margin >= 0."""

    __slots__ = ("attempted", "admissible", "failures", "worst")

    def __init__(self) -> None:
        self.attempted = 0
        self.admissible = 0
        self.failures = 0
        self.worst = -math.inf

    def skip(self) -> None:
        self.attempted += 1

    def record(self, margin: float, failed: bool | None = None) -> None:
        self.attempted += 1
        self.admissible += 1
        if margin > self.worst:
            self.worst = margin
        if failed if failed is not None else margin >= 0.0:
            self.failures += 1


def _require(condition: bool, suite: str) -> None:
    if not condition:
        raise RuntimeError(f"sampler self-check failed in suite {suite!r}")


def _norm(p: Point, q: Point) -> float:
    return math.hypot(abs(p.z - q.z), abs(p.w - q.w))


def _suite_sector_f_bound(spec, params, sched, rng) -> _Tally:
    # inside the sector Re(z^2) > 0, so |exp(-z^2)| < 1 strictly
    t = _Tally()
    for _ in range(spec.count):
        z = sample_sector(rng, spec.mod_lo, spec.mod_hi)
        _require(in_sector_S(z), "sector-f-bound")
        t.record(abs(eval_f(z, params)) - 1.0)
    return t


def _suite_quadrant_cycle(spec, params, sched, rng) -> _Tally:
    # one map step sends quadrant (a, b) to (-b, a) once |Re w| > 1/delta
    t = _Tally()
    for _ in range(spec.count):
        label = QUADRANT_PATTERNS[rng.randint(0, 3)]
        p = sample_S_point(rng, spec.mod_lo, spec.mod_hi, label)
        _require(point_in_S(p) and quadrant(p) == label, "quadrant-cycle")
        fp = apply_F(p, params)
        if abs(p.w.real) <= 1.0 / params.delta or fp.saturated or not point_in_S(fp):
            t.skip()
            continue
        expected = sigma(label)
        margin = max(-expected.a * fp.z.real, -expected.b * fp.w.real)
        t.record(margin, failed=quadrant(fp) != expected)
    return t


def _suite_real_growth(spec, params, sched, rng) -> _Tally:
    # real parts grow by at least 1 per double step on the invariant cones
    t = _Tally()
    for _ in range(spec.count):
        p, rung = sample_W(rng, sched, 0, spec.n_max)
        _require(in_Wn(p, rung, sched), "real-growth")
        orbit = iterate(p, 20, params)
        if orbit.saturated_at is not None:
            t.skip()
            continue
        margin = -math.inf
        for n in range(1, 11):
            even = abs(p.z.real) + n - abs(orbit.points[2 * n].z.real)
            odd = abs(p.w.real) + n - abs(orbit.points[2 * n - 1].z.real)
            margin = max(margin, even, odd)
        t.record(margin)
    return t


def _suite_cone_step(spec, params, sched, rng) -> _Tally:
    # one step sharpens the w-aperture to k and keeps z within the next one
    t = _Tally()
    for _ in range(spec.count):
        idx = rng.randint(0, spec.n_max)
        k, k_next = sched.k(idx), sched.k(idx + 1)
        r2 = sched.R(idx - 1)
        _require(r2 > 2.0 / (params.delta * (k_next - k)), "cone-step")
        p = Point(
            sample_cone(rng, k, sched.R(idx)), sample_cone(rng, k, r2)
        )
        _require(in_W_kR(p.z, k, sched.R(idx)) and in_W_kR(p.w, k, r2), "cone-step")
        fp = apply_F(p, params)
        margin = max(
            abs(fp.z.imag / fp.z.real) - k_next, abs(fp.w.imag / fp.w.real) - k
        )
        t.record(margin)
    return t


def _suite_ladder_invariance(spec, params, sched, rng) -> _Tally:
    # the map sends rung n strictly inside rung n+1
    t = _Tally()
    for _ in range(spec.count):
        rung = rng.randint(0, spec.n_max)
        p = sample_Wn(rng, rung, sched)
        fp = apply_F(p, params)
        pat = QUADRANT_PATTERNS[(rung + 1) % 4]
        k = sched.k(rung + 1)
        margin = max(
            abs(fp.z.imag) - k * abs(fp.z.real),
            sched.R(rung + 1) - abs(fp.z.real),
            abs(fp.w.imag) - k * abs(fp.w.real),
            sched.R(rung) - abs(fp.w.real),
            -pat.a * fp.z.real,
            -pat.b * fp.w.real,
        )
        t.record(margin, failed=not in_Wn(fp, rung + 1, sched))
    return t


def _suite_delta_bound(spec, params, sched, rng) -> _Tally:
    # 20 certified terms use orbit points z_0..z_39; the full sum stays
    # below the geometric total 1/(delta - 1)
    t = _Tally()
    cap = 1.0 / (params.delta - 1.0) + 1e-12
    for _ in range(spec.count):
        p, _ = sample_W(rng, sched, 0, spec.n_max)
        orbit = iterate(p, 39, params)
        if orbit.saturated_at is not None or not all(
            in_sector_S(pt.z) for pt in orbit.points
        ):
            t.skip()
            continue
        d1 = 0j
        d2 = 0j
        coeff = 1.0
        for j in range(1, 21):
            coeff /= -params.delta
            d1 += coeff * eval_f(orbit.points[2 * j - 1].z, params)
            d2 += coeff * eval_f(orbit.points[2 * j - 2].z, params)
        t.record(max(abs(d1), abs(d2)) - cap)
    return t


def _suite_h_product(spec, params, sched, rng) -> _Tally:
    # the two limit functions multiply to -delta by construction
    t = _Tally()
    for _ in range(spec.count):
        p, _ = sample_W(rng, sched, 0, spec.n_max)
        e1 = h1(p, 1e-12, params)
        e2 = h2(p, 1e-12, params)
        d1, d2 = delta_limits(p, 1e-12, params)
        independent = -params.delta * (p.w + d2.value) / (p.z + d1.value)
        margin = max(
            abs(e1.value * e2.value + params.delta) - 1e-9 * params.delta,
            abs(e2.value - independent) - 1e-10,
        )
        t.record(margin)
    return t


def _suite_conjugacy_distance(spec, params, sched, rng) -> _Tally:
    # the linearizer moves sector-confined points by less than sqrt(2)
    t = _Tally()
    root2 = math.sqrt(2.0)
    for _ in range(spec.count):
        p, _ = sample_W(rng, sched, 0, spec.n_max)
        image = phi(p, 1e-12, params).point
        t.record(_norm(image, p) - root2)
    return t


def _suite_conjugacy_equation(spec, params, sched, rng) -> _Tally:
    # conjugacy functional equation: phi then L equals F then phi
    t = _Tally()
    for _ in range(spec.count):
        p, _ = sample_W(rng, sched, 0, spec.n_max)
        lhs = phi(apply_F(p, params), 1e-12, params).point
        rhs = apply_L(phi(p, 1e-12, params).point, params)
        scale = max(math.hypot(abs(rhs.z), abs(rhs.w)), 1.0)
        t.record(_norm(lhs, rhs) / scale - 1e-9)
    return t


def _suite_phi_image_in_s(spec, params, sched, rng) -> _Tally:
    t = _Tally()
    for _ in range(spec.count):
        p, _ = sample_W(rng, sched, 0, spec.n_max)
        q = phi(p, 1e-12, params).point
        t.record(max(abs(q.z.imag) - abs(q.z.real), abs(q.w.imag) - abs(q.w.real)))
    return t


def _suite_un_decay(spec, params, sched, rng) -> _Tally:
    # the escape diagnostic falls below -delta^(n/2)/n; asserted for
    # 4 <= n <= 20 (the statement is asymptotic, the cutoff is empirical)
    t = _Tally()
    for _ in range(spec.count):
        p, _ = sample_W(rng, sched, 0, spec.n_max)
        orbit = iterate(p, 20, params)
        if orbit.saturated_at is not None:
            t.skip()
            continue
        margin = -math.inf
        for n in range(4, 21):
            zn = orbit.points[n].z
            u = -(zn.real * zn.real - zn.imag * zn.imag) / n
            margin = max(margin, u + params.delta ** (n / 2.0) / n)
        t.record(margin)
    return t


def _suite_tan2theta(spec, params, sched, rng) -> _Tally:
    # squaring at most doubles the angle: ratio bound 2k/(1-k^2)
    t = _Tally()
    cap = tan2theta_bound(spec.k) + 1e-12
    for _ in range(spec.count):
        re = rng.sign() * rng.log_uniform(spec.mod_lo, spec.mod_hi)
        z = complex(re, rng.uniform_in(-spec.k, spec.k) * re)
        _require(abs(z.imag) <= spec.k * abs(z.real), "tan2theta")
        re_sq = z.real * z.real - z.imag * z.imag
        t.record(abs(2.0 * z.real * z.imag / re_sq) - cap)
    return t


def _suite_mean_value(spec, params, sched, rng) -> _Tally:
    # harmonic mean-value residual on affine disks: small at 512 nodes and
    # shrinking at least 3x when the radius is halved (1e-12 roundoff slack)
    t = _Tally()
    direction = (1 + 0j, 0j)
    for _ in range(spec.count):
        p, _ = sample_W(rng, sched, 0, min(spec.n_max, 4))
        res = mean_value_check(p, direction, 0.1, 1, 512, params)
        res_half = mean_value_check(p, direction, 0.05, 1, 512, params)
        t.record(max(res - 1e-6, res_half - (res / 3.0 + 1e-12)))
    return t


def _suite_halfplane_limits(spec, params, sched, rng) -> _Tally:
    # captured points have Re h1 > 0 exactly on the equal-sign components;
    # the modulus spread over the ++ component witnesses nonconstancy
    t = _Tally()
    cfg = ClassifyConfig(schedule=sched, budget=4)
    lo = math.inf
    hi = -math.inf
    for _ in range(spec.count):
        residue = rng.randint(0, 3)
        rung = residue + 4 * rng.randint(0, 2)
        label = QUADRANT_PATTERNS[residue]
        p = sample_Wn(rng, rung, sched)
        result = classify(p, cfg, params)
        if result.status is not Status.CAPTURED or result.h1_at_point is None:
            t.skip()
            continue
        _require(result.label == label, "halfplane-limits")
        expected_sign = 1.0 if label.a == label.b else -1.0
        t.record(-expected_sign * result.h1_at_point.real)
        if residue == 0:
            lo = min(lo, abs(result.h1_at_point))
            hi = max(hi, abs(result.h1_at_point))
    spread = hi / lo if lo < math.inf and lo > 0.0 else 0.0
    t.record(2.0 - spread, failed=spread <= 2.0)
    return t


def _suite_wi_cycle(spec, params, sched, rng) -> _Tally:
    # captured proxies with both coordinates in the absorbing core keep the
    # core and cycle their quadrant at every step
    t = _Tally()
    absorbing = AbsorbingParams(spec.big_c)
    c_sq = spec.big_c * spec.big_c
    for _ in range(spec.count):
        p, _ = sample_W(rng, sched, 0, spec.n_max)
        if not point_in_IxI(p, absorbing):
            t.skip()
            continue
        expected = quadrant(p)
        cur = p
        margin = -math.inf
        failed = False
        for _step in range(20):
            cur = apply_F(cur, params)
            expected = sigma(expected)
            if cur.saturated:
                failed = True
                break
            re_z = cur.z.real * cur.z.real - cur.z.imag * cur.z.imag
            re_w = cur.w.real * cur.w.real - cur.w.imag * cur.w.imag
            margin = max(
                margin,
                c_sq - re_z,
                c_sq - re_w,
                -expected.a * cur.z.real,
                -expected.b * cur.w.real,
            )
            failed = failed or quadrant(cur) != expected or not point_in_IxI(cur, absorbing)
        t.record(margin, failed=failed)
    return t


_SUITES: dict[str, Callable[[SamplerSpec, MapParams, ConeSchedule, SplitMix64], _Tally]] = {
    "sector-f-bound": _suite_sector_f_bound,
    "quadrant-cycle": _suite_quadrant_cycle,
    "real-growth": _suite_real_growth,
    "cone-step": _suite_cone_step,
    "ladder-invariance": _suite_ladder_invariance,
    "delta-bound": _suite_delta_bound,
    "h-product": _suite_h_product,
    "conjugacy-distance": _suite_conjugacy_distance,
    "conjugacy-equation": _suite_conjugacy_equation,
    "phi-image-in-S": _suite_phi_image_in_s,
    "un-decay": _suite_un_decay,
    "tan2theta": _suite_tan2theta,
    "mean-value": _suite_mean_value,
    "halfplane-limits": _suite_halfplane_limits,
    "wI-cycle": _suite_wi_cycle,
}

SUITE_NAMES = tuple(_SUITES)

_DEFAULT_COUNTS = {
    "sector-f-bound": 100_000,
    "quadrant-cycle": 25_000,
    "real-growth": 1_000,
    "cone-step": 10_000,
    "ladder-invariance": 10_000,
    "delta-bound": 1_000,
    "h-product": 1_000,
    "conjugacy-distance": 1_000,
    "conjugacy-equation": 1_000,
    "phi-image-in-S": 1_000,
    "un-decay": 100,
    "tan2theta": 10_000,
    "mean-value": 20,
    "halfplane-limits": 4_000,
    "wI-cycle": 1_000,
}

_DEFAULT_REGIONS = {
    "sector-f-bound": "S",
    "quadrant-cycle": "S",
    "real-growth": "W",
    "cone-step": "W",
    "ladder-invariance": "W",
    "delta-bound": "W",
    "h-product": "W",
    "conjugacy-distance": "W",
    "conjugacy-equation": "W",
    "phi-image-in-S": "W",
    "un-decay": "W",
    "tan2theta": "box",
    "mean-value": "W",
    "halfplane-limits": "W",
    "wI-cycle": "W",
}


def default_sampler(name: str, seed: int, count: int | None = None) -> SamplerSpec:
    if name not in _SUITES:
        raise UnknownSuite(name)
    return SamplerSpec(
        region=_DEFAULT_REGIONS[name],
        count=count if count is not None else _DEFAULT_COUNTS[name],
        seed=seed,
    )


def run_suite(name: str, sampler: SamplerSpec, params: MapParams) -> SuiteReport:
    """Run one catalog suite on its own sub-seeded stream."""
    if name not in _SUITES:
        raise UnknownSuite(name)
    sched = ConeSchedule.for_delta(params.delta)
    rng = SplitMix64(derive_seed(sampler.seed, name))
    tally = _SUITES[name](sampler, params, sched, rng)
    return SuiteReport(
        suite=name,
        attempted=tally.attempted,
        admissible=tally.admissible,
        failures=tally.failures,
        worst_violation=tally.worst,
        seed=sampler.seed,
        delta=params.delta,
        r0=sched.r0,
        big_c=sampler.big_c,
    )


def run_all(
    params: MapParams, seed: int, count: int | None = None
) -> list[SuiteReport]:
    """Run the full catalog in fixed order; ``count`` overrides every scale."""
    return [
        run_suite(name, default_sampler(name, seed, count), params)
        for name in SUITE_NAMES
    ]


_REPORT_HEADER = "suite\tattempted\tadmissible\tfailures\tworst_violation\tseed\tdelta\tr0\tC"


def emit_report(
    reports: list[SuiteReport],
    destination: Union[str, os.PathLike, BinaryIO, None] = None,
) -> bytes:
    """Stable tab-separated document, one line per suite; returns the bytes."""
    lines = [_REPORT_HEADER]
    for r in reports:
        lines.append(
            "\t".join(
                (
                    r.suite,
                    str(r.attempted),
                    str(r.admissible),
                    str(r.failures),
                    repr(r.worst_violation),
                    str(r.seed),
                    repr(r.delta),
                    repr(r.r0),
                    repr(r.big_c),
                )
            )
        )
    payload = ("\n".join(lines) + "\n").encode("utf-8")
    if isinstance(destination, (str, os.PathLike)):
        with open(destination, "wb") as fh:
            fh.write(payload)
    elif destination is not None:
        destination.write(payload)
    return payload
