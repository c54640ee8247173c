"""Numerical laboratory for the plane automorphism (z, w) -> (exp(-z^2) - delta*w, z).

Iterates the map and its closed forms, evaluates its limit functions and
linearizing conjugacy with explicit truncation bounds, classifies points into
the four escaping components, property-tests the quantitative structure, and
renders phase-plane slices to PPM images.
"""

from .classify import ClassificationResult, ClassifyConfig, Status, classify, classify_grid
from .core import (
    MapParams,
    Orbit,
    Point,
    SaturatedOrbit,
    apply_F,
    apply_F_inverse,
    apply_L,
    apply_L_inverse,
    closed_form_iterate,
    delta_partial_sums,
    eval_f,
    is_saturated_value,
    iterate,
)
from .limits import (
    ConjugacyImage,
    LimitEstimate,
    OrbitLeftS,
    delta_limits,
    h1,
    h2,
    mean_value_check,
    phi,
    phi_n,
    u_n,
)
from .regions import (
    AbsorbingParams,
    ConeSchedule,
    QuadrantLabel,
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
from .render import (
    DEFAULT_PALETTE,
    ImageBuffer,
    RenderJob,
    SliceSpec,
    classification_grid,
    pixel_to_point,
    render,
    write_ppm,
)
from .verify import (
    SUITE_NAMES,
    SamplerSpec,
    SuiteReport,
    UnknownSuite,
    default_sampler,
    emit_report,
    run_all,
    run_suite,
)

__version__ = "0.1.0"
