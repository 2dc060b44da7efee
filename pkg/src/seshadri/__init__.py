"""Exact Seshadri constants, Seshadri curves and certified section plots for
abelian surfaces, from the integer intersection matrix alone."""

from .elliptic import EllipticMinimum, enumerate_elliptic, eps_elliptic_capped, eps_elliptic_submaximal
from .engine import (
    EngineLimits,
    SeshadriCurve,
    SeshadriResult,
    SubmaximalityWindow,
    candidate_pell_classes,
    guaranteed_volume,
    seshadri_constant,
    submaximality_window,
    transport_curve,
    upper_bound,
    verify_ample_curve,
)
from .envelope import GapReport, Segment, build_envelope, curve_functional_on_section, emit_plot
from .exact import QuadValue, RadicalSum
from .frame import (
    HodgeFrame,
    LatticeBox,
    cross_section_coords,
    diagonalize,
    elliptic_box_radius,
    pell_box_radius,
)
from .lattice import (
    FormProfile,
    IsometryMap,
    Positivity,
    check_isometry,
    pair,
    positivity_class,
    primitive_part,
    reference_ample,
    self_int,
    validate_matrix,
)
from .pell import (
    PellBound,
    PellSolution,
    bounds_coincide,
    eval_bound,
    make_pell_bound,
    pell_fundamental,
    sd_interval,
    sd_length,
)

__version__ = "0.1.0"

__all__ = [
    "EllipticMinimum",
    "EngineLimits",
    "FormProfile",
    "GapReport",
    "HodgeFrame",
    "IsometryMap",
    "LatticeBox",
    "PellBound",
    "PellSolution",
    "Positivity",
    "QuadValue",
    "RadicalSum",
    "Segment",
    "SeshadriCurve",
    "SeshadriResult",
    "SubmaximalityWindow",
    "bounds_coincide",
    "build_envelope",
    "candidate_pell_classes",
    "check_isometry",
    "cross_section_coords",
    "curve_functional_on_section",
    "diagonalize",
    "elliptic_box_radius",
    "emit_plot",
    "enumerate_elliptic",
    "eps_elliptic_capped",
    "eps_elliptic_submaximal",
    "eval_bound",
    "guaranteed_volume",
    "make_pell_bound",
    "pair",
    "pell_box_radius",
    "pell_fundamental",
    "positivity_class",
    "primitive_part",
    "reference_ample",
    "sd_interval",
    "sd_length",
    "self_int",
    "seshadri_constant",
    "submaximality_window",
    "transport_curve",
    "upper_bound",
    "validate_matrix",
    "verify_ample_curve",
]
