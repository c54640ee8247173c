"""Sector/cone membership, quadrant cycle, schedules, base-radius bound."""

import pytest
from hypothesis import given, strategies as st

from henonlab import (
    AbsorbingParams,
    ConeSchedule,
    Point,
    QuadrantLabel,
    apply_F,
    in_I,
    in_sector_S,
    in_W,
    in_W_kR,
    in_Wn,
    point_in_IxI,
    point_in_S,
    quadrant,
    r0_min,
    sigma,
    sigma_inverse,
    sigma_power,
    tan2theta_bound,
)
from henonlab.regions import MM, MP, PM, PP, QUADRANT_PATTERNS
from henonlab.sampling import SplitMix64, sample_IxI_point, sample_W, sample_Wn

ALL_LABELS = (PP, MP, MM, PM)


def test_sector_membership():
    assert in_sector_S(1 + 0.5j)
    assert not in_sector_S(1j)
    assert not in_sector_S(1 + 1j)  # boundary excluded
    assert not in_sector_S(0j)
    assert point_in_S(Point(2 - 1j, -3 + 0.5j))
    assert not point_in_S(Point(2 - 1j, 1 + 2j))


def test_quadrant_labels():
    assert quadrant(Point(1 + 0.5j, -2 + 0j)) == PM
    assert quadrant(Point(-3 + 0j, -4 + 0j)) == MM
    assert quadrant(Point(2j, 1 + 0j)) is None
    assert str(PM) == "+-" and str(MP) == "-+"
    assert QuadrantLabel.from_str("-+") == MP
    with pytest.raises(ValueError):
        QuadrantLabel(0, 1)
    with pytest.raises(ValueError):
        QuadrantLabel.from_str("+")


def test_sigma_cycle():
    assert sigma(PP) == MP
    assert sigma(MP) == MM and sigma(MM) == PM and sigma(PM) == PP
    for q in ALL_LABELS:
        assert sigma_power(q, 4) == q
        assert sigma_power(q, 2) != q
        assert sigma_inverse(sigma(q)) == q
        assert sigma_power(q, -1) == sigma_inverse(q)
        assert sigma_power(q, 7) == sigma_power(q, 3)
    assert sigma_inverse(MP) == PP
    assert len({sigma(q) for q in ALL_LABELS}) == 4  # bijection


def test_cone_predicate():
    assert not in_W_kR(10 + 6j, 0.5, 8.0)  # 6 > 0.5 * 10
    assert in_W_kR(10 + 4j, 0.5, 8.0)
    assert not in_W_kR(10 + 4j, 0.5, 12.0)
    assert not in_W_kR(-10 - 4j, 0.3, 8.0)
    assert in_W_kR(-10 - 2j, 0.3, 8.0)


def brute_force_r0(delta: float, n_max: int = 10_000) -> float:
    # direct scan, independent of the early-exit logic in r0_min
    sup = max(
        (2.0 / delta) ** ((n + 1) / 2.0) * (n + 2) * (n + 3) for n in range(n_max + 1)
    )
    return max(2.0, sup)


def test_r0_min_values():
    assert abs(r0_min(3.0) - 1440.0 / 81.0) < 1e-9
    assert r0_min(8.0) == 3.0
    for delta in (2.1, 2.5, 3.0, 5.0, 8.0, 20.0):
        want = brute_force_r0(delta)
        assert abs(r0_min(delta) - want) <= 1e-12 * want
        assert r0_min(delta) >= 2.0
    with pytest.raises(ValueError):
        r0_min(2.0)


def test_schedule_values_and_validation():
    sched = ConeSchedule(3.0, 18.0)
    assert sched.k(0) == 0.5 and sched.k(1) == pytest.approx(2.0 / 3.0)
    assert sched.R(-1) == 18.0 and sched.R(0) == 18.0
    assert sched.R(2) == pytest.approx(1.5 * 18.0)
    with pytest.raises(ValueError):
        ConeSchedule(3.0, 17.0)  # below the admissible base radius
    with pytest.raises(ValueError):
        sched.R(-2)


@pytest.mark.parametrize("delta", [2.5, 3.0, 5.0])
def test_schedule_sanity(delta):
    sched = ConeSchedule.for_delta(delta)
    for n in range(101):
        assert sched.k(n) < sched.k(n + 1) < 1.0
        assert sched.R(n + 1) < delta * sched.R(n - 1) - 1.0


def test_rung_membership_examples():
    sched = ConeSchedule(3.0, 18.0)
    p = Point(20 + 0j, 20 + 0j)
    assert in_Wn(p, 0, sched)
    assert in_W(p, sched, 64) == 0

    q = Point(20 + 0j, -20 + 0j)  # pattern (+,-) needs rung 3, but R_3 > 20
    assert not in_Wn(q, 0, sched)
    assert not in_Wn(q, 3, sched)
    assert sched.R(3) == pytest.approx(1.5**1.5 * 18.0)
    assert in_W(q, sched, 64) is None

    deep = Point(40 + 0j, -30 + 0j)  # clears rung 3 radii (33.07, 27)
    assert in_W(deep, sched, 64) == 3
    assert in_W(deep, sched, 2) is None  # n_max cuts the scan

    assert in_W(Point(2j, 20 + 0j), sched, 64) is None  # Re z = 0


def test_rung_sampler_respects_regions(sched3):
    rng = SplitMix64(9)
    for _ in range(200):
        n = rng.randint(0, 12)
        p = sample_Wn(rng, n, sched3)
        assert in_Wn(p, n, sched3)
        assert point_in_S(p)
        assert quadrant(p) == QUADRANT_PATTERNS[n % 4]


@pytest.mark.parametrize("delta", [2.5, 3.0, 5.0])
def test_ladder_invariance_quick(delta):
    from henonlab import MapParams

    params = MapParams(delta)
    sched = ConeSchedule.for_delta(delta)
    rng = SplitMix64(13)
    for _ in range(500):
        n = rng.randint(0, 12)
        p = sample_Wn(rng, n, sched)
        assert in_Wn(apply_F(p, params), n + 1, sched)


def test_quadrant_cycle_on_cones(params3, sched3):
    rng = SplitMix64(17)
    for _ in range(500):
        p, _ = sample_W(rng, sched3)
        assert quadrant(apply_F(p, params3)) == sigma(quadrant(p))


def test_absorbing_core():
    c1 = AbsorbingParams(1.0)
    assert in_I(2 + 0j, c1)  # Re(z^2) = 4 > 1
    assert not in_I(1 + 1j, c1)  # Re(z^2) = 0
    assert point_in_IxI(Point(3 + 1j, -2 + 0j), c1)
    with pytest.raises(ValueError):
        AbsorbingParams(0.5)

    rng = SplitMix64(23)
    c2 = AbsorbingParams(2.0)
    for _ in range(1000):
        p = sample_IxI_point(rng, c2)
        assert point_in_IxI(p, c2)
        # the core sits inside the sector with |Re z| beyond the threshold
        assert in_sector_S(p.z) and abs(p.z.real) > 2.0


def test_tan2theta_bound_values():
    assert tan2theta_bound(0.0) == 0.0
    assert tan2theta_bound(0.5) == pytest.approx(4.0 / 3.0)
    with pytest.raises(ValueError):
        tan2theta_bound(1.0)
    with pytest.raises(ValueError):
        tan2theta_bound(-0.1)


def test_tan2theta_bound_sampled():
    rng = SplitMix64(29)
    for _ in range(10_000):
        k = rng.uniform_in(0.0, 0.95)
        re = rng.sign() * rng.log_uniform(1e-3, 1e3)
        z = complex(re, rng.uniform_in(-k, k) * re)
        ratio = abs(2.0 * z.real * z.imag / (z.real * z.real - z.imag * z.imag))
        assert ratio <= tan2theta_bound(k) + 1e-12


@given(st.floats(0.0, 0.9), st.floats(-0.999, 0.999), st.floats(0.01, 100.0))
def test_tan2theta_property(k, frac, scale):
    z = complex(scale, frac * k * scale)
    re_sq = z.real * z.real - z.imag * z.imag
    assert abs(2.0 * z.real * z.imag / re_sq) <= tan2theta_bound(k) + 1e-12
