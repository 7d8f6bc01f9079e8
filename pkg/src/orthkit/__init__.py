"""Birkhoff-James orthogonality and smoothness of bounded multilinear maps
between finite-dimensional lp spaces, with machine-checkable certificates.
"""

from .spaces import (
    FieldTag,
    SpaceSpec,
    SupportFunctional,
    SupportSet,
    ZeroVectorError,
    DimensionMismatchError,
    lp_norm,
    dual_exponent,
    dual_norm,
    support_functionals,
    is_smooth_point,
    sip,
    dual_certificate_check,
)
from .multilinear import (
    MultilinearMap,
    TuplePoint,
    AttainmentCluster,
    ZeroMapError,
    evaluate,
    norm_bruteforce,
    norm_estimate,
    operator_norm,
    top_right_singular_subspace,
    attainment_set,
    random_map,
)
from .orthogonality import (
    SolverConfig,
    Decision,
    OmegaSample,
    CaratheodoryCertificate,
    SeparatingDirection,
    OrthVerdict,
    RangeRegion,
    omega_samples,
    hull_contains_zero,
    decide_orthogonality,
    numerical_range_contains_zero,
    bs_decide_hilbert,
    maximal_numerical_range,
    oracle_min_norm,
)
from .smoothness import (
    PreconditionError,
    SmoothDecision,
    SmoothnessReport,
    decide_smooth,
    omega_singleton_test,
    right_additivity_probe,
    nilpotent_split_counterexample,
    bs_property_certificate,
    sip_orthogonality_probe,
)
from .mapio import MapFileError, load_map, save_map, emit_plot

__version__ = "0.1.0"
