"""Mappings contracting perimeters of triangles on metric spaces.

Exact-rational tools to compute perimeter-contraction and Lipschitz
coefficients of self-maps, run fixed-point iteration with a priori error
bounds, and rebuild the countable shift space whose shift map contracts
perimeters without being a contraction.
"""
from .analysis import (
    AlphaZeroError,
    AnalysisReport,
    ContinuityResult,
    classify,
    continuity_modulus_check,
    lipschitz_coefficient,
    perimeter_contraction_coefficient,
    perimeter_ratio,
)
from .mapping import (
    MapError,
    OrbitTrace,
    RuleMap,
    SelfMap,
    StopReason,
    TableMap,
    apply,
    find_period_two_violation,
    fixed_points,
    orbit,
)
from .metric import (
    STAR,
    AxiomReport,
    ComputableSpace,
    FiniteSpace,
    MetricSpace,
    Triple,
    UnknownPointError,
    WindowError,
    distance,
    is_between,
    perimeter,
    verify_metric_axioms,
)
from .numeric import CapacityError, Tolerance, format_scalar, parse_scalar
from .paper_spaces import (
    PAPER_ALPHA,
    PaperSpace,
    PaperSpaceParams,
    finite_triple_ratio,
    make_paper_space,
    make_three_point_example,
    prefix_distance,
    star_distance,
    star_triple_ratio,
    step_distance,
)
from .solver import (
    SolveResult,
    SolveStatus,
    apriori_error_bound,
    perimeter_sequence,
    picard_solve,
)

__version__ = "0.1.0"
