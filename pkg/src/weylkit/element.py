"""Exact sparse arithmetic in the first Weyl algebra over the rationals.

An element is a finite rational combination of the basis monomials p^i q^j
(all p factors to the left), stored as a sparse map from exponent pairs to
nonzero coefficients.  The generators satisfy p q - q p = 1; every product
is rewritten back into the basis, so two elements are equal exactly when
their coefficient maps are equal.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb
from typing import Iterable, Mapping

Scalar = Fraction
ExponentPair = tuple[int, int]


class WeylInternalError(RuntimeError):
    """An internal invariant was violated; indicates a bug, not bad input."""


def as_scalar(value) -> Fraction:
    """Coerce an exact value to a Fraction.  Floats are rejected on purpose:
    binary floats silently break the exactness guarantees of the whole kit."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    raise TypeError(f"expected an int or Fraction, got {type(value).__name__}")


class WeylElement:
    """A normal-ordered element sum(c_ij * p^i * q^j) with rational c_ij.

    Instances are immutable; all arithmetic returns new elements in
    canonical sparse form (no zero coefficients stored).
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[ExponentPair, object] | None = None):
        data: dict[ExponentPair, Fraction] = {}
        if terms:
            for key, value in terms.items():
                i, j = key
                if not (isinstance(i, int) and isinstance(j, int) and i >= 0 and j >= 0):
                    raise ValueError(f"exponent pair {key!r} is not a pair of nonnegative integers")
                coeff = as_scalar(value)
                if coeff:
                    data[(i, j)] = coeff
        object.__setattr__(self, "_terms", data)
        object.__setattr__(self, "_hash", None)

    @classmethod
    def _raw(cls, data: dict[ExponentPair, Fraction]) -> "WeylElement":
        # internal fast path: data already validated and pruned
        obj = object.__new__(cls)
        object.__setattr__(obj, "_terms", data)
        object.__setattr__(obj, "_hash", None)
        return obj

    @classmethod
    def zero(cls) -> "WeylElement":
        return cls._raw({})

    @classmethod
    def one(cls) -> "WeylElement":
        return cls._raw({(0, 0): Fraction(1)})

    @classmethod
    def monomial(cls, i: int, j: int, coeff=1) -> "WeylElement":
        c = as_scalar(coeff)
        return cls._raw({(i, j): c}) if c else cls.zero()

    def __setattr__(self, name, value):
        raise AttributeError("WeylElement is immutable")

    def terms(self) -> dict[ExponentPair, Fraction]:
        return dict(self._terms)

    def support(self) -> frozenset[ExponentPair]:
        return frozenset(self._terms)

    def coeff(self, i: int, j: int) -> Fraction:
        return self._terms.get((i, j), Fraction(0))

    def is_zero(self) -> bool:
        return not self._terms

    def total_degree(self) -> int:
        """max(i + j) over the support; -1 for the zero element."""
        return max((i + j for i, j in self._terms), default=-1)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, WeylElement):
            return self._terms == other._terms
        return NotImplemented

    def __hash__(self) -> int:
        h = self._hash
        if h is None:
            h = hash(frozenset(self._terms.items()))
            object.__setattr__(self, "_hash", h)
        return h

    def __add__(self, other) -> "WeylElement":
        if not isinstance(other, WeylElement):
            return NotImplemented
        data = dict(self._terms)
        for key, c in other._terms.items():
            s = data.get(key, 0) + c
            if s:
                data[key] = s
            else:
                data.pop(key, None)
        return WeylElement._raw(data)

    def __sub__(self, other) -> "WeylElement":
        if not isinstance(other, WeylElement):
            return NotImplemented
        return self + (-other)

    def __neg__(self) -> "WeylElement":
        return WeylElement._raw({k: -c for k, c in self._terms.items()})

    def __mul__(self, other) -> "WeylElement":
        if isinstance(other, WeylElement):
            return mul(self, other)
        try:
            c = as_scalar(other)
        except TypeError:
            return NotImplemented
        return self.scale(c)

    def __rmul__(self, other) -> "WeylElement":
        try:
            c = as_scalar(other)
        except TypeError:
            return NotImplemented
        return self.scale(c)

    def __pow__(self, n: int) -> "WeylElement":
        return power(self, n)

    def scale(self, c) -> "WeylElement":
        c = as_scalar(c)
        if not c:
            return WeylElement.zero()
        return WeylElement._raw({k: c * v for k, v in self._terms.items()})

    def __str__(self) -> str:
        return format_element(self)

    def __repr__(self) -> str:
        return f"WeylElement({format_element(self)!r})"


def normalize_qp(m: int, n: int) -> WeylElement:
    """Normal form of the word q^m p^n in the p-before-q basis.

    Moving each p left across each q via q p = p q - 1 telescopes into

        q^m p^n = sum_k (-1)^k k! C(m,k) C(n,k) p^(n-k) q^(m-k),

    which is validated in the test suite against a literal single-swap
    rewriting oracle.
    """
    if m < 0 or n < 0:
        raise ValueError("exponents must be nonnegative")
    data: dict[ExponentPair, Fraction] = {}
    coef = 1
    for k in range(min(m, n) + 1):
        if k:
            coef = -(coef * (m - k + 1) * (n - k + 1)) // k
        data[(n - k, m - k)] = Fraction(coef)
    return WeylElement._raw(data)


def mul(x: WeylElement, y: WeylElement) -> WeylElement:
    """Product in the Weyl algebra, returned in canonical sparse form."""
    acc: dict[ExponentPair, Fraction] = {}
    for (a, b), cx in x._terms.items():
        for (c, d), cy in y._terms.items():
            cxy = cx * cy
            coef = 1
            for k in range(min(b, c) + 1):
                if k:
                    coef = -(coef * (b - k + 1) * (c - k + 1)) // k
                key = (a + c - k, b + d - k)
                s = acc.get(key, 0) + cxy * coef
                if s:
                    acc[key] = s
                else:
                    acc.pop(key, None)
    return WeylElement._raw(acc)


def linear_combine(terms: Iterable[tuple[object, WeylElement]]) -> WeylElement:
    """sum(c_k * x_k) in canonical form; zero coefficients pruned."""
    acc: dict[ExponentPair, Fraction] = {}
    for c, x in terms:
        c = as_scalar(c)
        if not c:
            continue
        for key, v in x._terms.items():
            s = acc.get(key, 0) + c * v
            if s:
                acc[key] = s
            else:
                acc.pop(key, None)
    return WeylElement._raw(acc)


def commutator(x: WeylElement, y: WeylElement) -> WeylElement:
    """[x, y] = x y - y x."""
    return mul(x, y) - mul(y, x)


def ad_power(x: WeylElement, y: WeylElement, n: int) -> WeylElement:
    """n-fold nested commutator (ad x)^n y; n = 0 returns y."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    out = y
    for _ in range(n):
        out = commutator(x, out)
    return out


def power(x: WeylElement, n: int) -> WeylElement:
    """x^n by repeated multiplication; x^0 = 1."""
    if n < 0:
        raise ValueError("negative powers are not defined in the Weyl algebra")
    result = WeylElement.one()
    base = x
    while n:
        if n & 1:
            result = mul(result, base)
        n >>= 1
        if n:
            base = mul(base, base)
    return result


def substitute_poly(f, x: WeylElement) -> WeylElement:
    """Evaluate a univariate polynomial at a Weyl element (Horner scheme)."""
    result = WeylElement.zero()
    for c in reversed(f.coeffs()):
        result = mul(result, x) + WeylElement.monomial(0, 0, c)
    return result


P = WeylElement.monomial(1, 0)
Q = WeylElement.monomial(0, 1)
H = WeylElement.monomial(1, 1)  # h = p*q, already normal ordered
ONE = WeylElement.one()
ZERO = WeylElement.zero()


def format_element(x: WeylElement) -> str:
    """Canonical printing: terms sorted by (i+j, i) descending, reduced
    fractional coefficients, p^i*q^j monomials, unit coefficients elided."""
    if x.is_zero():
        return "0"
    parts: list[str] = []
    for (i, j) in sorted(x._terms, key=lambda t: (t[0] + t[1], t[0]), reverse=True):
        c = x._terms[(i, j)]
        mono: list[str] = []
        if i == 1:
            mono.append("p")
        elif i > 1:
            mono.append(f"p^{i}")
        if j == 1:
            mono.append("q")
        elif j > 1:
            mono.append(f"q^{j}")
        mono_str = "*".join(mono)
        mag = abs(c)
        if not mono_str:
            body = str(mag)
        elif mag == 1:
            body = mono_str
        else:
            body = f"{mag}*{mono_str}"
        if not parts:
            parts.append(f"-{body}" if c < 0 else body)
        else:
            parts.append(f" - {body}" if c < 0 else f" + {body}")
    return "".join(parts)
