"""Commutative polynomial helpers over the rationals.

UniPoly is a dense univariate polynomial (coefficient list, ascending);
BiPoly is a sparse bivariate polynomial keyed by (i, j) exponent pairs.
Both are immutable value types used by the grading and support-geometry
machinery; they carry exactly the operations those modules need.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping

from .element import as_scalar


class UniPoly:
    """Univariate polynomial over the rationals, zero coefficients trimmed."""

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Iterable[object] = ()):
        cs = [as_scalar(c) for c in coeffs]
        while cs and not cs[-1]:
            cs.pop()
        object.__setattr__(self, "_coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("UniPoly is immutable")

    @classmethod
    def x(cls) -> "UniPoly":
        return cls((0, 1))

    @classmethod
    def constant(cls, c) -> "UniPoly":
        return cls((c,))

    def coeffs(self) -> tuple[Fraction, ...]:
        return self._coeffs

    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self._coeffs) - 1

    def is_zero(self) -> bool:
        return not self._coeffs

    def is_constant(self) -> bool:
        return len(self._coeffs) <= 1

    def leading(self) -> Fraction:
        if not self._coeffs:
            raise ValueError("zero polynomial has no leading coefficient")
        return self._coeffs[-1]

    def constant_term(self) -> Fraction:
        return self._coeffs[0] if self._coeffs else Fraction(0)

    def coeff(self, k: int) -> Fraction:
        return self._coeffs[k] if 0 <= k < len(self._coeffs) else Fraction(0)

    def __bool__(self) -> bool:
        return bool(self._coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, UniPoly):
            return self._coeffs == other._coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self._coeffs)

    def __add__(self, other) -> "UniPoly":
        if not isinstance(other, UniPoly):
            return NotImplemented
        a, b = self._coeffs, other._coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for k, c in enumerate(b):
            out[k] += c
        return UniPoly(out)

    def __neg__(self) -> "UniPoly":
        return UniPoly(tuple(-c for c in self._coeffs))

    def __sub__(self, other) -> "UniPoly":
        if not isinstance(other, UniPoly):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other) -> "UniPoly":
        if isinstance(other, UniPoly):
            if not self._coeffs or not other._coeffs:
                return UniPoly()
            out = [Fraction(0)] * (len(self._coeffs) + len(other._coeffs) - 1)
            for i, a in enumerate(self._coeffs):
                for j, b in enumerate(other._coeffs):
                    out[i + j] += a * b
            return UniPoly(out)
        try:
            c = as_scalar(other)
        except TypeError:
            return NotImplemented
        return UniPoly(tuple(c * v for v in self._coeffs))

    def __rmul__(self, other) -> "UniPoly":
        try:
            c = as_scalar(other)
        except TypeError:
            return NotImplemented
        return UniPoly(tuple(c * v for v in self._coeffs))

    def __pow__(self, n: int) -> "UniPoly":
        if n < 0:
            raise ValueError("negative power")
        result = UniPoly((1,))
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def __divmod__(self, other: "UniPoly") -> tuple["UniPoly", "UniPoly"]:
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self._coeffs)
        den = other._coeffs
        dq = len(rem) - len(den)
        if dq < 0:
            return UniPoly(), self
        quo = [Fraction(0)] * (dq + 1)
        inv_lead = 1 / den[-1]
        for k in range(dq, -1, -1):
            c = rem[k + len(den) - 1] * inv_lead
            quo[k] = c
            if c:
                for t, d in enumerate(den):
                    rem[k + t] -= c * d
        return UniPoly(quo), UniPoly(rem)

    def __floordiv__(self, other: "UniPoly") -> "UniPoly":
        q, r = divmod(self, other)
        if not r.is_zero():
            raise ValueError("inexact polynomial division")
        return q

    def derivative(self) -> "UniPoly":
        return UniPoly(tuple(k * c for k, c in enumerate(self._coeffs) if k))

    def monic(self) -> "UniPoly":
        if self.is_zero():
            return self
        lead = self._coeffs[-1]
        return UniPoly(tuple(c / lead for c in self._coeffs))

    def eval(self, value) -> Fraction:
        v = as_scalar(value)
        acc = Fraction(0)
        for c in reversed(self._coeffs):
            acc = acc * v + c
        return acc

    def compose(self, other: "UniPoly") -> "UniPoly":
        acc = UniPoly()
        for c in reversed(self._coeffs):
            acc = acc * other + UniPoly((c,))
        return acc

    def shift(self, k) -> "UniPoly":
        """f(X + k)."""
        return self.compose(UniPoly((k, 1)))

    def __str__(self) -> str:
        if not self._coeffs:
            return "0"
        parts: list[str] = []
        for k in range(len(self._coeffs) - 1, -1, -1):
            c = self._coeffs[k]
            if not c:
                continue
            if k == 0:
                body = str(abs(c))
            else:
                var = "X" if k == 1 else f"X^{k}"
                body = var if abs(c) == 1 else f"{abs(c)}*{var}"
            if not parts:
                parts.append(f"-{body}" if c < 0 else body)
            else:
                parts.append(f" - {body}" if c < 0 else f" + {body}")
        return "".join(parts)

    def __repr__(self) -> str:
        return f"UniPoly({str(self)!r})"


def poly_gcd(a: UniPoly, b: UniPoly) -> UniPoly:
    """Monic greatest common divisor over the rationals."""
    while not b.is_zero():
        _, r = divmod(a, b)
        a, b = b, r
    if a.is_zero():
        return a
    return a.monic()


class BiPoly:
    """Sparse commutative polynomial in X, Y over the rationals."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[tuple[int, int], object] | None = None):
        data: dict[tuple[int, int], Fraction] = {}
        if terms:
            for (i, j), value in terms.items():
                if not (isinstance(i, int) and isinstance(j, int) and i >= 0 and j >= 0):
                    raise ValueError(f"exponent pair {(i, j)!r} is not a pair of nonnegative integers")
                c = as_scalar(value)
                if c:
                    data[(i, j)] = c
        object.__setattr__(self, "_terms", data)

    def __setattr__(self, name, value):
        raise AttributeError("BiPoly is immutable")

    @classmethod
    def _raw(cls, data: dict[tuple[int, int], Fraction]) -> "BiPoly":
        obj = object.__new__(cls)
        object.__setattr__(obj, "_terms", data)
        return obj

    @classmethod
    def monomial(cls, i: int, j: int, coeff=1) -> "BiPoly":
        c = as_scalar(coeff)
        return cls._raw({(i, j): c}) if c else cls._raw({})

    def terms(self) -> dict[tuple[int, int], Fraction]:
        return dict(self._terms)

    def support(self) -> frozenset[tuple[int, int]]:
        return frozenset(self._terms)

    def coeff(self, i: int, j: int) -> Fraction:
        return self._terms.get((i, j), Fraction(0))

    def is_zero(self) -> bool:
        return not self._terms

    def is_monomial(self) -> bool:
        return len(self._terms) == 1

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, BiPoly):
            return self._terms == other._terms
        return NotImplemented

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    def __add__(self, other) -> "BiPoly":
        if not isinstance(other, BiPoly):
            return NotImplemented
        data = dict(self._terms)
        for key, c in other._terms.items():
            s = data.get(key, 0) + c
            if s:
                data[key] = s
            else:
                data.pop(key, None)
        return BiPoly._raw(data)

    def __neg__(self) -> "BiPoly":
        return BiPoly._raw({k: -c for k, c in self._terms.items()})

    def __sub__(self, other) -> "BiPoly":
        if not isinstance(other, BiPoly):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other) -> "BiPoly":
        if isinstance(other, BiPoly):
            acc: dict[tuple[int, int], Fraction] = {}
            for (a, b), ca in self._terms.items():
                for (c, d), cb in other._terms.items():
                    key = (a + c, b + d)
                    s = acc.get(key, 0) + ca * cb
                    if s:
                        acc[key] = s
                    else:
                        acc.pop(key, None)
            return BiPoly._raw(acc)
        try:
            c = as_scalar(other)
        except TypeError:
            return NotImplemented
        if not c:
            return BiPoly._raw({})
        return BiPoly._raw({k: c * v for k, v in self._terms.items()})

    def __rmul__(self, other) -> "BiPoly":
        return self.__mul__(other)

    def __pow__(self, n: int) -> "BiPoly":
        if n < 0:
            raise ValueError("negative power")
        result = BiPoly.monomial(0, 0, 1)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def swap_vars(self) -> "BiPoly":
        """The polynomial with X and Y exchanged."""
        return BiPoly._raw({(j, i): c for (i, j), c in self._terms.items()})

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts: list[str] = []
        for (i, j) in sorted(self._terms, key=lambda t: (t[0] + t[1], t[0]), reverse=True):
            c = self._terms[(i, j)]
            mono: list[str] = []
            if i == 1:
                mono.append("X")
            elif i > 1:
                mono.append(f"X^{i}")
            if j == 1:
                mono.append("Y")
            elif j > 1:
                mono.append(f"Y^{j}")
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

    def __repr__(self) -> str:
        return f"BiPoly({str(self)!r})"
