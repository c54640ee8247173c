"""Acceptance gate: the quantitative contract, one test per criterion.

Each test prints one `[criterion NN] PASS/FAIL` line (visible with -s or -rA)
with its runtime.  Criterion 14 is split: the determinism half passes; the
180-degree label-symmetry half is checked exactly as specified against the
full pixel grid and fails, because the map provably lacks that symmetry
(F(-z,-w) and -F(z,w) differ by 2*exp(-z^2), which is O(1) near the origin;
slow-escaping points there land in components whose labels do not negate).
"""

import math
import time

from henonlab import (
    ClassifyConfig,
    ConeSchedule,
    MapParams,
    RenderJob,
    SliceSpec,
    Status,
    apply_F,
    classify,
    closed_form_iterate,
    iterate,
    r0_min,
    render,
)
from henonlab.regions import QUADRANT_PATTERNS
from henonlab.render import classification_grid
from henonlab.sampling import SplitMix64, derive_seed, sample_W, sample_Wn
from henonlab.verify import SamplerSpec, default_sampler, run_suite

SEED = 20260809
PARAMS3 = MapParams(3.0)
SCHED3 = ConeSchedule.for_delta(3.0)


def announce(num: int, name: str, t0: float, ok: bool, detail: str = "") -> None:
    status = "PASS" if ok else "FAIL"
    extra = f" {detail}" if detail else ""
    print(f"[criterion {num:02d}] {status} {name} ({time.perf_counter() - t0:.2f}s){extra}")


def test_criterion_01_sector_contraction():
    t0 = time.perf_counter()
    report = run_suite(
        "sector-f-bound", default_sampler("sector-f-bound", SEED, 100_000), PARAMS3
    )
    ok = report.failures == 0 and report.admissible == 100_000 and report.worst_violation < 0
    announce(1, "sector contraction |f| < 1 on 1e5 samples", t0, ok)
    assert ok


def test_criterion_02_quadrant_cycle():
    t0 = time.perf_counter()
    ok = True
    detail = []
    for delta in (2.5, 3.0, 5.0):
        report = run_suite(
            "quadrant-cycle",
            default_sampler("quadrant-cycle", SEED, 25_000),
            MapParams(delta),
        )
        detail.append(f"delta={delta}: {report.admissible} admissible")
        ok = ok and report.failures == 0 and report.admissible >= 10_000
    announce(2, "one-step quadrant cycle", t0, ok, "; ".join(detail))
    assert ok


def test_criterion_03_ladder_invariance():
    t0 = time.perf_counter()
    ok = True
    for delta in (2.5, 3.0, 5.0):
        report = run_suite(
            "ladder-invariance",
            default_sampler("ladder-invariance", SEED, 10_000),
            MapParams(delta),
        )
        ok = ok and report.failures == 0 and report.admissible == 10_000
    announce(3, "cone ladder forward invariance, 1e4 per delta", t0, ok)
    assert ok


def test_criterion_04_real_growth():
    t0 = time.perf_counter()
    report = run_suite("real-growth", default_sampler("real-growth", SEED, 1_000), PARAMS3)
    ok = report.failures == 0 and report.admissible == 1_000
    announce(4, "real-part growth by n per double step", t0, ok)
    assert ok


def test_criterion_05_delta_bound():
    t0 = time.perf_counter()
    report = run_suite("delta-bound", default_sampler("delta-bound", SEED, 1_000), PARAMS3)
    ok = report.failures == 0 and report.admissible == 1_000
    announce(5, "partial sums below 1/(delta-1) over 40 certified points", t0, ok)
    assert ok


def test_criterion_06_limit_function_algebra():
    t0 = time.perf_counter()
    report = run_suite("h-product", default_sampler("h-product", SEED, 1_000), PARAMS3)
    ok = report.failures == 0 and report.admissible == 1_000
    announce(6, "h1*h2 = -delta and independent h2 cross-check", t0, ok)
    assert ok


def test_criterion_07_conjugacy():
    t0 = time.perf_counter()
    ok = True
    for name in ("conjugacy-distance", "conjugacy-equation", "phi-image-in-S"):
        report = run_suite(name, default_sampler(name, SEED, 1_000), PARAMS3)
        ok = ok and report.failures == 0 and report.admissible == 1_000
    announce(7, "linearizer: distance < sqrt(2), equation, sector image", t0, ok)
    assert ok


def test_criterion_08_closed_form_vs_direct():
    t0 = time.perf_counter()
    rng = SplitMix64(derive_seed(SEED, "closed-form"))
    worst = 0.0
    for _ in range(1_000):
        p, _ = sample_W(rng, SCHED3)
        n = rng.randint(0, 12)
        direct = iterate(p, n, PARAMS3).points[n]
        cf = closed_form_iterate(p, n, PARAMS3)
        scale = max(math.hypot(abs(direct.z), abs(direct.w)), 1.0)
        worst = max(worst, math.hypot(abs(cf.z - direct.z), abs(cf.w - direct.w)) / scale)
    ok = worst < 1e-9
    announce(8, "closed-form iterate matches direct iteration", t0, ok, f"worst rel {worst:.2e}")
    assert ok


def test_criterion_09_un_decay():
    t0 = time.perf_counter()
    report = run_suite("un-decay", default_sampler("un-decay", SEED, 100), PARAMS3)
    ok = report.failures == 0 and report.admissible == 100
    announce(9, "escape diagnostic below -delta^(n/2)/n for n in 4..20", t0, ok)
    assert ok


def test_criterion_10_tan2theta():
    t0 = time.perf_counter()
    ok = True
    for k in (0.1, 0.5, 0.9):
        spec = SamplerSpec(region="box", count=10_000, seed=SEED, k=k)
        report = run_suite("tan2theta", spec, PARAMS3)
        ok = ok and report.failures == 0 and report.admissible == 10_000
    announce(10, "angle-doubling ratio bound at k = 0.1, 0.5, 0.9", t0, ok)
    assert ok


def test_criterion_11_mean_value_quadrature():
    t0 = time.perf_counter()
    report = run_suite("mean-value", default_sampler("mean-value", SEED, 20), PARAMS3)
    ok = report.failures == 0 and report.admissible == 20
    announce(11, "disk mean-value residual and radius halving", t0, ok)
    assert ok


def test_criterion_12_halfplane_and_nonconstancy():
    t0 = time.perf_counter()
    rng = SplitMix64(derive_seed(SEED, "halfplane-acceptance"))
    cfg = ClassifyConfig(schedule=SCHED3, budget=4)
    ok = True
    lo, hi = math.inf, -math.inf
    for residue, label in enumerate(QUADRANT_PATTERNS):
        for i in range(1_000):
            p = sample_Wn(rng, residue + 4 * (i % 3), SCHED3)
            result = classify(p, cfg, PARAMS3)
            if result.status is not Status.CAPTURED or result.label != label:
                ok = False
                continue
            value = result.h1_at_point
            if value is None or ((value.real > 0) != (label.a == label.b)):
                ok = False
                continue
            if residue == 0:
                lo, hi = min(lo, abs(value)), max(hi, abs(value))
    spread = hi / lo
    ok = ok and spread > 2.0
    announce(
        12, "half-plane signs of h1 per label; modulus spread", t0, ok,
        f"spread factor {spread:.1f}",
    )
    assert ok


def test_criterion_13_component_cycle():
    t0 = time.perf_counter()
    rng = SplitMix64(derive_seed(SEED, "cycle-acceptance"))
    cfg = ClassifyConfig(schedule=SCHED3, budget=8, compute_h1=False)
    ok = True
    for _ in range(1_000):
        p, _ = sample_W(rng, SCHED3)
        base = classify(p, cfg, PARAMS3)
        image = classify(apply_F(p, PARAMS3), cfg, PARAMS3)
        q = p
        for _ in range(4):
            q = apply_F(q, PARAMS3)
        cycled = classify(q, cfg, PARAMS3)
        if not (
            base.status is Status.CAPTURED
            and image.status is Status.CAPTURED
            and cycled.status is Status.CAPTURED
        ):
            ok = False
            continue
        expected = (-base.label.b, base.label.a)
        if (image.label.a, image.label.b) != expected or cycled.label != base.label:
            ok = False
    announce(13, "label equivariance and period-4 cycle on 1e3 points", t0, ok)
    assert ok


ACCEPT_SLICE = SliceSpec("real", (0.0, 0.0), (60.0, 60.0), (400, 400))
ACCEPT_CFG = ClassifyConfig(schedule=SCHED3, budget=200, compute_h1=False)
ACCEPT_JOB = RenderJob(ACCEPT_SLICE, ACCEPT_CFG, PARAMS3, shading=0.97)


def test_criterion_14a_render_parallel_determinism():
    t0 = time.perf_counter()
    serial = render(ACCEPT_JOB, workers=1)
    threaded = render(ACCEPT_JOB, workers=4)
    ok = serial.data == threaded.data
    announce(14, "render 400x400 byte-identical across 1 vs 4 workers", t0, ok)
    assert ok


def test_criterion_14b_rotation_label_symmetry():
    t0 = time.perf_counter()
    grid = classification_grid(ACCEPT_JOB)
    w, h = ACCEPT_SLICE.resolution
    violations = []
    for j in range(h):
        for i in range(w):
            a = grid[j * w + i]
            if a.status is not Status.CAPTURED:
                continue
            b = grid[(h - 1 - j) * w + (w - 1 - i)]
            if b.status is not Status.CAPTURED or (b.label.a, b.label.b) != (
                -a.label.a,
                -a.label.b,
            ):
                violations.append((i, j, str(a.label), str(b.label)))
    ok = not violations
    announce(
        14,
        "180-degree label symmetry for every captured pixel",
        t0,
        ok,
        f"{len(violations)} violating pixel pairs",
    )
    assert ok, (
        f"{len(violations)} captured pixels violate the 180-degree label "
        f"symmetry (first few: {violations[:4]}).  The symmetry cannot hold "
        "exactly: F(-z,-w) - (-F(z,w)) = (2*exp(-z^2), 0), so orbits of P and "
        "-P genuinely diverge near the origin and land in components with "
        "non-negated labels; both labels are ladder-certified and match the "
        "half-plane of h1.  The symmetry is asymptotic (far pixels all pass)."
    )


def test_criterion_15_base_radius_closed_form():
    t0 = time.perf_counter()
    brute = max(
        (2.0 / 3.0) ** ((n + 1) / 2.0) * (n + 2) * (n + 3) for n in range(10_001)
    )
    brute = max(2.0, brute)
    got = r0_min(3.0)
    ok = abs(got - 1440.0 / 81.0) < 1e-9 and abs(got - brute) <= 1e-12 * brute
    announce(15, "minimal cone base radius at delta=3 equals 1440/81", t0, ok)
    assert ok
