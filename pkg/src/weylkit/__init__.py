"""weylkit: exact arithmetic and a certified solvability analyzer for the
first Weyl algebra over the rationals."""

from .element import (
    H,
    ONE,
    P,
    Q,
    ZERO,
    Scalar,
    WeylElement,
    WeylInternalError,
    ad_power,
    as_scalar,
    commutator,
    format_element,
    linear_combine,
    mul,
    normalize_qp,
    power,
    substitute_poly,
)
from .grading import (
    GradeSpan,
    HForm,
    exp_ad,
    from_h_form,
    grade_components,
    grade_span,
    omega,
    to_h_form,
)
from .parser import ExprSyntaxError, element_from_string, eval_ast, parse_expr
from .polygon import (
    NEG_INF,
    Edge,
    PolygonProfile,
    Vertex,
    Weight,
    convex_hull,
    edges,
    leading_split,
    separating_weight,
    support,
    weight_degree,
    weight_polynomial,
    weight_support,
    weight_term,
)
from .polynomials import BiPoly, UniPoly, poly_gcd
from .power_analysis import (
    HomogShape,
    SquarefreeDecomp,
    dehomogenize,
    is_weighted_homogeneous,
    power_index,
    rehomogenize,
    squarefree_decompose,
)
from .solvability import (
    DEFAULT_BOX_BOUND,
    DEFAULT_BOX_CAP,
    Outcome,
    RuleCitation,
    RuleId,
    Verdict,
    analyze,
    dominates_unit,
    find_witness_box,
    verify_witness,
    witness_for_affine,
)

__all__ = [name for name in dir() if not name.startswith("_")]
