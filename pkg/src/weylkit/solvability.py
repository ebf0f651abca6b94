"""Certified solvability analysis: is there a y with [x, y] = 1?

The analyzer runs a fixed ladder of decision rules.  Every "unsolvable"
verdict is backed by a proved criterion about the element's grading or
support geometry, every "solvable" verdict carries an explicit witness
that is re-verified by exact computation, and everything else comes back
"unknown" (the general decision problem is open).  An independent
brute-force oracle searches for witnesses with bounded exponents by
solving the exact linear system [x, y] = 1 in the coefficients of y.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm

from .element import WeylElement, WeylInternalError, commutator
from .grading import grade_span, to_h_form
from .polygon import (
    PolygonProfile,
    Weight,
    convex_hull,
    edges,
    weight_degree,
    weight_polynomial,
)
from .power_analysis import power_index

DEFAULT_BOX_BOUND = 4
DEFAULT_BOX_CAP = 8

_CLOSURE_NOTE = (
    "power indices are computed over the algebraic closure; an element whose "
    "leading polynomial is a proper power only over an extension field may be "
    "reported unknown rather than unsolvable"
)


class Outcome(enum.Enum):
    SOLVABLE = "solvable"
    UNSOLVABLE = "unsolvable"
    UNKNOWN = "unknown"


class RuleId(enum.Enum):
    CONSTANT_ELEMENT = "constant-element"
    LOW_GRADE_BAND = "low-grade-band"
    HOMOGENEOUS_HIGH_DEGREE = "homogeneous-high-degree"
    POLYNOMIAL_IN_GENERATOR = "polynomial-in-generator"
    LINEAR_IN_GENERATOR = "linear-in-generator"
    AFFINE_FAMILY = "affine-family"
    NON_AXIS_EDGE = "non-axis-edge"
    AXIS_POWER_INDEX_ONE = "axis-power-index-one"
    EDGE_GCD_ONE = "edge-gcd-one"
    ORACLE_WITNESS = "oracle-witness"


@dataclass(frozen=True)
class RuleCitation:
    rule: RuleId
    params: dict
    citation: str


@dataclass(frozen=True)
class Verdict:
    outcome: Outcome
    witness: WeylElement | None = None
    reasons: tuple[RuleCitation, ...] = ()
    attempted: tuple[RuleId, ...] = ()
    box_bound: int | None = None
    notes: tuple[str, ...] = ()


def verify_witness(x: WeylElement, y: WeylElement) -> bool:
    """True exactly when [x, y] equals the unit element."""
    return commutator(x, y) == WeylElement.one()


def witness_for_affine(x: WeylElement) -> WeylElement | None:
    """Witness for elements of the shapes a*p + g(q) or a*q + g(p), a != 0.

    [a*p + g(q), q/a] = 1 and [a*q + g(p), -p/a] = 1, so the witness is a
    scaled generator in both cases.  Returns None when x has neither shape.
    """
    pts = x.support()
    if all(pt == (1, 0) or pt[0] == 0 for pt in pts):
        a = x.coeff(1, 0)
        if a:
            y = WeylElement.monomial(0, 1, Fraction(1) / a)
            if not verify_witness(x, y):
                raise WeylInternalError("affine witness failed verification")
            return y
    if all(pt == (0, 1) or pt[1] == 0 for pt in pts):
        a = x.coeff(0, 1)
        if a:
            y = WeylElement.monomial(1, 0, Fraction(-1) / a)
            if not verify_witness(x, y):
                raise WeylInternalError("affine witness failed verification")
            return y
    return None


def dominates_unit(x: WeylElement) -> bool:
    """True iff the weighted degree of x is at least rho + sigma for every
    coprime positive weight.

    Equivalent exact test: the convex hull of the support meets the region
    {z1 >= 1 and z2 >= 1}, decided by clipping the hull to z1 >= 1 and
    comparing the maximal z2 against 1 with rational arithmetic.
    """
    if x.is_zero():
        raise ValueError("zero element never dominates the unit")
    hull = convex_hull(x.support())
    best: Fraction | None = None
    for pt in hull:
        if pt[0] >= 1:
            y = Fraction(pt[1])
            if best is None or y > best:
                best = y
    if len(hull) >= 2:
        for k in range(len(hull)):
            a = hull[k]
            b = hull[(k + 1) % len(hull)]
            if (a[0] - 1) * (b[0] - 1) < 0:
                y = Fraction(a[1]) + Fraction(b[1] - a[1], b[0] - a[0]) * (1 - a[0])
                if best is None or y > best:
                    best = y
    return best is not None and best >= 1


def _solve_fraction_free(rows: list[list[Fraction]], rhs: list[Fraction]) -> list[Fraction] | None:
    """Solve A c = rhs exactly; returns one solution with all free
    variables set to zero, or None when the system is inconsistent.

    Rows are scaled to integers, reduced by fraction-free (Bareiss-style)
    forward elimination with a fixed first-nonzero pivoting order, then
    back-substituted over the rationals.  Fully deterministic.
    """
    ncols = len(rows[0]) if rows else 0
    mat: list[list[int]] = []
    for row, b in zip(rows, rhs):
        scale = lcm(*(c.denominator for c in row), b.denominator)
        mat.append([int(c * scale) for c in row] + [int(b * scale)])
    nrows = len(mat)
    prev = 1
    pivot_rows: list[tuple[int, int]] = []
    r = 0
    for col in range(ncols):
        pivot = next((k for k in range(r, nrows) if mat[k][col]), None)
        if pivot is None:
            continue
        mat[r], mat[pivot] = mat[pivot], mat[r]
        lead = mat[r][col]
        for k in range(r + 1, nrows):
            factor = mat[k][col]
            row_k = mat[k]
            row_r = mat[r]
            for t in range(col, ncols + 1):
                num = lead * row_k[t] - factor * row_r[t]
                quot, rem = divmod(num, prev)
                if rem:
                    raise WeylInternalError("fraction-free elimination lost exactness")
                row_k[t] = quot
        pivot_rows.append((r, col))
        prev = lead
        r += 1
        if r == nrows:
            break
    for k in range(r, nrows):
        if mat[k][ncols] and not any(mat[k][:ncols]):
            return None
    solution = [Fraction(0)] * ncols
    for row_idx, col in reversed(pivot_rows):
        row = mat[row_idx]
        acc = Fraction(row[ncols])
        for t in range(col + 1, ncols):
            if row[t]:
                acc -= row[t] * solution[t]
        solution[col] = acc / row[col]
    return solution


def find_witness_box(x: WeylElement, box: int, cap: int = DEFAULT_BOX_CAP) -> WeylElement | None:
    """Search for a witness supported inside {(i, j): i <= box, j <= box}.

    The commutator is linear in y, so the search is an exact linear solve
    over the rationals; a returned witness is always re-verified.  None
    means only that no witness exists within the box.
    """
    if box > cap:
        raise ValueError(f"box bound {box} exceeds the solver cap {cap}")
    if box < 0:
        raise ValueError("box bound must be nonnegative")
    if x.is_zero():
        raise ValueError("the zero element admits no witness")
    columns = [(i, j) for i in range(box + 1) for j in range(box + 1)]
    brackets = [commutator(x, WeylElement.monomial(i, j)) for i, j in columns]
    row_keys = sorted({pt for br in brackets for pt in br.support()} | {(0, 0)})
    rows = [[br.coeff(*key) for br in brackets] for key in row_keys]
    rhs = [Fraction(1) if key == (0, 0) else Fraction(0) for key in row_keys]
    solution = _solve_fraction_free(rows, rhs)
    if solution is None:
        return None
    y = WeylElement({key: c for key, c in zip(columns, solution) if c})
    if not verify_witness(x, y):
        raise WeylInternalError("box oracle produced a non-verifying witness")
    return y


def _cite(rule: RuleId, params: dict, citation: str) -> RuleCitation:
    return RuleCitation(rule, params, citation)


def _axis_weights(x: WeylElement) -> list[Weight]:
    """Finite list of axis weights that covers every distinct leading
    support an axis direction can expose on x.

    Slopes of hull segments are bounded by the exponent spans, so beyond
    max exponent + 1 the exposed face is stable and one representative
    suffices.
    """
    n_max = max(max(i, j) for i, j in x.support()) + 1
    seen: set[tuple[int, int]] = set()
    out: list[Weight] = []
    for n in range(1, n_max + 1):
        for rho, sigma in ((n, 1), (1, n)):
            if (rho, sigma) not in seen:
                seen.add((rho, sigma))
                out.append(Weight(rho, sigma))
    return out


def analyze(
    x: WeylElement,
    box: int = DEFAULT_BOX_BOUND,
    cap: int = DEFAULT_BOX_CAP,
) -> Verdict:
    """Run the decision ladder on x.

    Rule order: constant element, low grade band (and its mirror),
    homogeneous grade +-1, polynomial in a single generator or in h,
    affine family (solvable), non-axis edge, axis power index one,
    edge gcd one, box oracle (solvable), unknown.  Cheap structural rules
    come first; the first matching unsolvability rule wins, and solvable
    outcomes always carry a verified witness, so the order cannot make a
    verdict unsound.
    """
    attempted: list[RuleId] = []
    notes: list[str] = []

    def unsolvable(cit: RuleCitation) -> Verdict:
        return Verdict(
            Outcome.UNSOLVABLE,
            reasons=(cit,),
            attempted=tuple(attempted),
            box_bound=box,
            notes=tuple(notes),
        )

    def solvable(witness: WeylElement, cit: RuleCitation) -> Verdict:
        if not verify_witness(x, witness):
            raise WeylInternalError("solvable verdict with a failing witness")
        return Verdict(
            Outcome.SOLVABLE,
            witness=witness,
            reasons=(cit,),
            attempted=tuple(attempted),
            box_bound=box,
            notes=tuple(notes),
        )

    attempted.append(RuleId.CONSTANT_ELEMENT)
    if all(pt == (0, 0) for pt in x.support()):
        return unsolvable(
            _cite(
                RuleId.CONSTANT_ELEMENT,
                {"value": str(x)},
                "scalars commute with everything, so [x, y] = 0 can never reach 1",
            )
        )

    span = grade_span(x)

    attempted.append(RuleId.LOW_GRADE_BAND)
    if span.min_grade >= 2 or span.max_grade <= -2:
        side = "min" if span.min_grade >= 2 else "max"
        return unsolvable(
            _cite(
                RuleId.LOW_GRADE_BAND,
                {"min_grade": span.min_grade, "max_grade": span.max_grade, "side": side},
                "every graded component of x sits beyond grade +-1, so no bracket "
                "with x can produce a grade-0 unit",
            )
        )

    attempted.append(RuleId.HOMOGENEOUS_HIGH_DEGREE)
    if span.min_grade == span.max_grade and abs(span.min_grade) == 1:
        s = span.min_grade
        f = to_h_form(x).parts[s]
        if f.degree() >= 1:
            return unsolvable(
                _cite(
                    RuleId.HOMOGENEOUS_HIGH_DEGREE,
                    {"grade": s, "h_degree": f.degree(), "weight": "(1,1)",
                     "weighted_degree": 2 * f.degree() + 1},
                    "x is homogeneous of grade +-1 with (1,1)-degree at least 2; "
                    "a homogeneous solvable element of nonzero grade must have "
                    "weighted degree below rho + sigma at every weight",
                )
            )

    attempted.append(RuleId.POLYNOMIAL_IN_GENERATOR)
    pts = x.support()
    axis_gen = None
    if all(i == 0 for i, _ in pts):
        axis_gen = ("q", max(j for _, j in pts))
    elif all(j == 0 for _, j in pts):
        axis_gen = ("p", max(i for i, _ in pts))
    if axis_gen is not None:
        gen, deg = axis_gen
        if deg >= 2:
            return unsolvable(
                _cite(
                    RuleId.POLYNOMIAL_IN_GENERATOR,
                    {"generator": gen, "degree": deg},
                    f"x is a polynomial of degree {deg} in {gen}; a solvable "
                    "polynomial in a single element must have degree 1",
                )
            )
        witness = witness_for_affine(x)
        if witness is None:
            raise WeylInternalError("degree-1 generator polynomial without affine witness")
        return solvable(
            witness,
            _cite(
                RuleId.LINEAR_IN_GENERATOR,
                {"generator": gen, "witness": str(witness)},
                f"x is affine in {gen}; a scaled complementary generator is a witness",
            ),
        )
    if span.min_grade == span.max_grade == 0:
        f0 = to_h_form(x).parts[0]
        if f0.degree() >= 2:
            return unsolvable(
                _cite(
                    RuleId.POLYNOMIAL_IN_GENERATOR,
                    {"generator": "h", "degree": f0.degree()},
                    f"x = f(h) with deg f = {f0.degree()}; a solvable polynomial "
                    "in a single element must have degree 1",
                )
            )

    attempted.append(RuleId.AFFINE_FAMILY)
    witness = witness_for_affine(x)
    if witness is not None:
        return solvable(
            witness,
            _cite(
                RuleId.AFFINE_FAMILY,
                {"witness": str(witness)},
                "x = a*p + g(q) (or its mirror) is conjugate to a*p by an "
                "exp-ad automorphism; the scaled opposite generator is a witness",
            ),
        )

    profile: PolygonProfile = edges(x)

    attempted.append(RuleId.NON_AXIS_EDGE)
    for e in profile.edges:
        if e.weight.rho >= 2 and e.weight.sigma >= 2 and e.degree > e.weight.rho + e.weight.sigma:
            return unsolvable(
                _cite(
                    RuleId.NON_AXIS_EDGE,
                    {"weight": str(e.weight), "degree": e.degree},
                    "x has an edge at a weight with both components at least 2 and "
                    "weighted degree above rho + sigma; such elements admit no "
                    "nilpotent adjoint action, ruling out [x, y] = 1",
                )
            )

    attempted.append(RuleId.AXIS_POWER_INDEX_ONE)
    saw_power_index_above_one = False
    for w in _axis_weights(x):
        v = weight_degree(x, w)
        if v < w.rho + w.sigma:
            continue
        r = power_index(weight_polynomial(x, w), w)
        if r == 1:
            return unsolvable(
                _cite(
                    RuleId.AXIS_POWER_INDEX_ONE,
                    {"weight": str(w), "weighted_degree": v,
                     "leading_polynomial": str(weight_polynomial(x, w))},
                    "the leading polynomial at an axis weight with weighted degree "
                    "at least rho + sigma is not a proper power; a witness would "
                    "force an impossible leading-polynomial proportionality",
                )
            )
        saw_power_index_above_one = True
    if saw_power_index_above_one:
        notes.append(_CLOSURE_NOTE)

    attempted.append(RuleId.EDGE_GCD_ONE)
    if len(profile.edges) >= 2 and all(e.weight.is_axis() for e in profile.edges) and dominates_unit(x):
        indices = [power_index(e.polynomial, e.weight) for e in profile.edges]
        if gcd(*indices) == 1:
            return unsolvable(
                _cite(
                    RuleId.EDGE_GCD_ONE,
                    {"weights": [str(e.weight) for e in profile.edges],
                     "power_indices": indices},
                    "x dominates the unit and all its edges sit at axis weights "
                    "(required for the rule to apply), yet the edge power indices "
                    "share no common factor; adjacent edges of a solvable element "
                    "must have power indices with gcd above 1",
                )
            )

    attempted.append(RuleId.ORACLE_WITNESS)
    y = find_witness_box(x, box, cap)
    if y is not None:
        return solvable(
            y,
            _cite(
                RuleId.ORACLE_WITNESS,
                {"box": box, "witness": str(y)},
                f"exact linear solve found a witness with exponents at most {box}",
            ),
        )

    return Verdict(
        Outcome.UNKNOWN,
        reasons=(),
        attempted=tuple(attempted),
        box_bound=box,
        notes=tuple(notes),
    )
