"""Assign points to the four escaping components via capture in the cone ladder.

The capture criterion is membership in the forward-invariant rung ladder, not
in the absorbing set (whose definition quantifies over all future iterates and
is not directly decidable).  A point captured at step m in a rung with
observed quadrant q is labeled by pulling q back m steps through the period-4
quadrant cycle.  The classifier is sound for positives and incomplete for
negatives: budget exhaustion or leaving the sector certifies nothing.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .core import MapParams, Point, SaturatedOrbit, apply_F
from .limits import OrbitLeftS, h1
from .regions import (
    ConeSchedule,
    QuadrantLabel,
    in_W,
    in_Wn,
    point_in_S,
    quadrant,
    sigma_power,
)

__all__ = ["Status", "ClassifyConfig", "ClassificationResult", "classify", "classify_grid"]


class Status(enum.Enum):
    CAPTURED = "Captured"
    SATURATED = "Saturated"
    BUDGET_EXHAUSTED = "BudgetExhausted"
    LEFT_S = "LeftS"


@dataclass(frozen=True, slots=True)
class ClassifyConfig:
    """Iteration budget and capture/validation knobs.

    ``validate_steps`` extra iterations re-check the ladder step invariance
    after capture, guarding against roundoff right at a cone boundary.
    ``compute_h1`` can be disabled for bulk rendering where the limit value
    is not needed.
    """

    schedule: ConeSchedule
    budget: int = 200
    validate_steps: int = 8
    ladder_depth: int = 64
    compute_h1: bool = True
    h1_tol: float = 1e-12

    def __post_init__(self) -> None:
        if self.budget < 0:
            raise ValueError("budget must be nonnegative")
        if self.validate_steps < 0:
            raise ValueError("validate_steps must be nonnegative")


@dataclass(frozen=True, slots=True)
class ClassificationResult:
    """Outcome of one classification; label present iff status is CAPTURED."""

    status: Status
    label: QuadrantLabel | None = None
    capture_step: int | None = None
    h1_at_point: complex | None = None


def _pullback_h1(captured: Point, step: int, cfg: ClassifyConfig, params: MapParams):
    """Limit value at the original point, evaluated at the capture point.

    The capture point's orbit stays in the sector, so the certified evaluation
    applies there; one cycle step inverts the limit (even pullback is the
    identity, odd pullback is v -> -delta/v).
    """
    try:
        est = h1(captured, cfg.h1_tol, params)
    except (OrbitLeftS, SaturatedOrbit):
        return None
    if est.at_infinity:
        return 0j if step % 2 else None
    if step % 2 == 0:
        return est.value
    if abs(est.value) < 1e-300:
        return None
    return -params.delta / est.value


def classify(p: Point, cfg: ClassifyConfig, params: MapParams) -> ClassificationResult:
    """Iterate until ladder capture, then pull the quadrant label back.

    Total function: saturation, budget exhaustion and sector departure are
    reported as statuses, never raised.
    """
    cur = p
    left_sector = False
    for step in range(cfg.budget + 1):
        if cur.saturated:
            return ClassificationResult(Status.SATURATED)
        rung = in_W(cur, cfg.schedule, cfg.ladder_depth)
        if rung is not None:
            probe = cur
            for j in range(1, cfg.validate_steps + 1):
                probe = apply_F(probe, params)
                if probe.saturated or not in_Wn(probe, rung + j, cfg.schedule):
                    return ClassificationResult(Status.BUDGET_EXHAUSTED)
            label = sigma_power(quadrant(cur), -step)
            h1_val = _pullback_h1(cur, step, cfg, params) if cfg.compute_h1 else None
            return ClassificationResult(Status.CAPTURED, label, step, h1_val)
        if not point_in_S(cur):
            left_sector = True
        if step < cfg.budget:
            cur = apply_F(cur, params)
    return ClassificationResult(Status.LEFT_S if left_sector else Status.BUDGET_EXHAUSTED)


def classify_grid(
    points: list[Point], cfg: ClassifyConfig, params: MapParams
) -> list[ClassificationResult]:
    """Element-wise classification; order-preserving and deterministic."""
    return [classify(p, cfg, params) for p in points]
