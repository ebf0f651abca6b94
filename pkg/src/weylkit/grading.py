"""The integer grading of the Weyl algebra and its standard automorphisms.

Grade s collects the basis monomials p^i q^j with j - i = s, so the algebra
splits as a direct sum with A_i * A_j inside A_{i+j}.  Writing h = p*q, the
grade-s piece of any element is f(h) q^s for s >= 0 and f(h) p^(-s) for
s < 0, with a unique polynomial f; HForm holds that expansion.  The key
shifting identities are

    f(h) p^n = p^n f(h - n),      f(h) q^n = q^n f(h + n),

and p^k q^k = h (h+1) ... (h+k-1), both exercised directly by the tests.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .element import (
    H,
    WeylElement,
    WeylInternalError,
    commutator,
    mul,
    normalize_qp,
    substitute_poly,
)
from .polynomials import UniPoly


@dataclass(frozen=True)
class GradeSpan:
    min_grade: int
    max_grade: int


@dataclass(frozen=True)
class HForm:
    """Map from grade s to the nonzero polynomial f_s of that grade."""

    parts: dict[int, UniPoly]

    def __post_init__(self):
        for s, f in self.parts.items():
            if f.is_zero():
                raise ValueError(f"grade {s} stores a zero polynomial")
        object.__setattr__(self, "parts", dict(self.parts))

    def grades(self) -> list[int]:
        return sorted(self.parts)

    def __eq__(self, other) -> bool:
        if isinstance(other, HForm):
            return self.parts == other.parts
        return NotImplemented


def grade_components(x: WeylElement) -> dict[int, WeylElement]:
    """Split x into its graded pieces, keyed by s = j - i."""
    buckets: dict[int, dict] = {}
    for (i, j), c in x.terms().items():
        buckets.setdefault(j - i, {})[(i, j)] = c
    return {s: WeylElement(terms) for s, terms in sorted(buckets.items())}


def grade_span(x: WeylElement) -> GradeSpan:
    if x.is_zero():
        raise ValueError("zero element has no grade span")
    grades = [j - i for i, j in x.support()]
    return GradeSpan(min(grades), max(grades))


def _rising_factorial(k: int, offset: int = 0) -> UniPoly:
    """(X + offset)(X + offset + 1)...(X + offset + k - 1); equals p^k q^k
    at X = h when offset = 0."""
    out = UniPoly((1,))
    for t in range(k):
        out = out * UniPoly((offset + t, 1))
    return out


def to_h_form(x: WeylElement) -> HForm:
    parts: dict[int, UniPoly] = {}
    for s, comp in grade_components(x).items():
        f = UniPoly()
        if s >= 0:
            # component is sum_i a_i p^i q^(i+s) = (sum_i a_i p^i q^i) q^s
            for (i, _j), c in comp.terms().items():
                f = f + c * _rising_factorial(i)
        else:
            # component is sum_j a_j p^(j+m) q^j = p^m g(h) with m = -s,
            # and f(h) p^m = p^m f(h - m) forces f(X) = g(X + m)
            m = -s
            for (_i, j), c in comp.terms().items():
                f = f + c * _rising_factorial(j, offset=m)
        if not f.is_zero():
            parts[s] = f
    return HForm(parts)


def from_h_form(hf: HForm) -> WeylElement:
    out = WeylElement.zero()
    for s, f in hf.parts.items():
        piece = substitute_poly(f, H)
        if s > 0:
            piece = mul(piece, WeylElement.monomial(0, s))
        elif s < 0:
            piece = mul(piece, WeylElement.monomial(-s, 0))
        out = out + piece
    return out


def omega(x: WeylElement) -> WeylElement:
    """The automorphism p -> -q, q -> p; it swaps grades s and -s."""
    out = WeylElement.zero()
    for (i, j), c in x.terms().items():
        sign = -c if i % 2 else c
        out = out + normalize_qp(i, j).scale(sign)
    return out


def exp_ad(g: WeylElement, x: WeylElement) -> WeylElement:
    """exp(ad g) applied to x, for g a polynomial in q alone or p alone.

    ad g is locally nilpotent for such g, so the series
    sum_k (ad g)^k x / k! has finitely many nonzero terms; division by k!
    is exact over the rationals.  The result is an algebra automorphism
    image: products and commutators are preserved.
    """
    support = g.support()
    on_q_axis = all(i == 0 for i, _ in support)
    on_p_axis = all(j == 0 for _, j in support)
    if not (on_q_axis or on_p_axis):
        raise ValueError("exp-ad requires single-generator polynomial")
    cap = max(x.total_degree(), 0) + max(g.total_degree(), 0) + 2
    out = x
    term = x
    for k in range(1, cap + 1):
        term = commutator(g, term).scale(Fraction(1, k))
        if term.is_zero():
            return out
        out = out + term
    raise WeylInternalError(
        f"exp-ad series did not terminate within {cap} steps; "
        "ad g should be locally nilpotent"
    )
