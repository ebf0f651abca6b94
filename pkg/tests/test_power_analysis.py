"""Weighted-homogeneous factor shapes, squarefree decomposition, power index."""

import pytest
from hypothesis import given, settings
import hypothesis.strategies as st

from weylkit import (
    BiPoly,
    UniPoly,
    Weight,
    dehomogenize,
    is_weighted_homogeneous,
    poly_gcd,
    power_index,
    rehomogenize,
    squarefree_decompose,
)

from oracles import bipoly_nth_root, rational_nth_root
from strategies import coefficients


def B(terms):
    return BiPoly(terms)


@st.composite
def axis_homogeneous(draw, max_factors=2, max_mult=2):
    """c * X^a * Y^b * prod (X + c_i Y^n)^(e_i) expanded, for a random
    axis weight (n, 1); never a constant."""
    n = draw(st.integers(1, 3))
    a = draw(st.integers(0, 2))
    b = draw(st.integers(0, 2))
    n_factors = draw(st.integers(0, max_factors))
    if a == 0 and b == 0 and n_factors == 0:
        a = 1
    f = BiPoly.monomial(a, b, draw(coefficients(max_abs=5)))
    for _ in range(n_factors):
        c = draw(coefficients(max_abs=3))
        e = draw(st.integers(1, max_mult))
        f = f * (B({(1, 0): 1, (0, n): c}) ** e)
    return f, Weight(n, 1)


class TestIsWeightedHomogeneous:
    def test_monomial(self):
        ok, deg = is_weighted_homogeneous(B({(1, 1): 1}), Weight(1, 1))
        assert ok and deg == 2

    def test_showcase_q_heavy_polynomial(self):
        ok, deg = is_weighted_homogeneous(B({(2, 2): 1, (0, 3): 1}), Weight(1, 2))
        assert ok and deg == 6

    def test_inhomogeneous(self):
        ok, _deg = is_weighted_homogeneous(B({(1, 0): 1, (0, 2): 1}), Weight(1, 1))
        assert not ok

    def test_zero_rejected(self):
        with pytest.raises(ValueError):
            is_weighted_homogeneous(B({}), Weight(1, 1))


class TestDehomogenize:
    def test_pure_monomial(self):
        shape = dehomogenize(B({(2, 2): 1}), Weight(1, 1))
        assert (shape.x_mult, shape.y_mult) == (2, 2)
        assert shape.core == UniPoly((1,))

    def test_perfect_square(self):
        f = B({(2, 0): 1, (1, 1): 2, (0, 2): 1})  # (X + Y)^2
        shape = dehomogenize(f, Weight(1, 1))
        assert (shape.x_mult, shape.y_mult) == (0, 0)
        assert shape.core == UniPoly((1, 2, 1))

    def test_sigma_axis_case(self):
        f = B({(2, 2): 1, (0, 3): 1})  # Y^2 (X^2 + Y) for weight (1, 2)
        shape = dehomogenize(f, Weight(1, 2))
        assert (shape.x_mult, shape.y_mult) == (0, 2)
        assert shape.core.degree() == 1
        assert rehomogenize(shape) == f

    def test_non_axis_weight_rejected(self):
        with pytest.raises(ValueError, match="axis weight"):
            dehomogenize(B({(2, 2): 1}), Weight(2, 3))

    def test_inhomogeneous_rejected(self):
        with pytest.raises(ValueError):
            dehomogenize(B({(1, 0): 1, (0, 2): 1}), Weight(1, 1))

    @settings(max_examples=80, deadline=None)
    @given(axis_homogeneous())
    def test_reconstruction_round_trip(self, fw):
        f, w = fw
        ok, _ = is_weighted_homogeneous(f, w)
        assert ok
        assert rehomogenize(dehomogenize(f, w)) == f

    @settings(max_examples=40, deadline=None)
    @given(axis_homogeneous())
    def test_mirrored_weight_round_trip(self, fw):
        f, w = fw
        mirrored = f.swap_vars()
        assert rehomogenize(dehomogenize(mirrored, Weight(w.sigma, w.rho))) == mirrored

    def test_core_has_nonzero_constant_term(self):
        f = B({(3, 0): 2, (1, 2): -4})  # 2 X (X - sqrt2 Y)(X + sqrt2 Y) shape
        shape = dehomogenize(f, Weight(1, 1))
        assert shape.core.constant_term() != 0
        assert shape.core.leading() != 0


class TestSquarefreeDecompose:
    def test_double_root(self):
        out = squarefree_decompose(UniPoly((1, 2, 1)))
        assert out.unit == 1
        assert out.factors == ((UniPoly((1, 1)), 2),)

    def test_already_squarefree(self):
        f = UniPoly((0, -1, 0, 1))  # Z^3 - Z
        out = squarefree_decompose(f)
        assert out.factors == ((f, 1),)

    def test_mixed_multiplicities(self):
        f = (UniPoly((-1, 1)) ** 2) * (UniPoly((2, 1)) ** 3)
        out = squarefree_decompose(f)
        assert out.factors == ((UniPoly((-1, 1)), 2), (UniPoly((2, 1)), 3))

    def test_unit_carries_leading_coefficient(self):
        f = 6 * (UniPoly((1, 1)) ** 2)
        out = squarefree_decompose(f)
        assert out.unit == 6

    @settings(max_examples=60, deadline=None)
    @given(st.lists(st.tuples(st.integers(-3, 3), st.integers(1, 3)), min_size=0, max_size=3),
           coefficients(max_abs=5))
    def test_reconstruction_and_squarefreeness(self, roots, unit):
        f = UniPoly((unit,))
        for r, e in roots:
            f = f * (UniPoly((r, 1)) ** e)
        out = squarefree_decompose(f)
        rebuilt = UniPoly((out.unit,))
        for factor, mult in out.factors:
            rebuilt = rebuilt * factor ** mult
            assert poly_gcd(factor, factor.derivative()).degree() <= 0
        assert rebuilt == f
        for a in range(len(out.factors)):
            for b in range(a + 1, len(out.factors)):
                assert poly_gcd(out.factors[a][0], out.factors[b][0]).degree() <= 0


class TestPowerIndex:
    def test_plain_product(self):
        assert power_index(B({(1, 1): 1}), Weight(1, 1)) == 1

    def test_square_monomial(self):
        assert power_index(B({(2, 2): 1}), Weight(1, 1)) == 2

    def test_binomial_square(self):
        assert power_index(B({(2, 0): 1, (1, 1): 2, (0, 2): 1}), Weight(1, 1)) == 2

    def test_extra_factor_breaks_square(self):
        f = B({(2, 0): 1, (1, 1): 2, (0, 2): 1}) * B({(1, 0): 1})
        assert power_index(f, Weight(1, 1)) == 1

    def test_constant_rejected(self):
        with pytest.raises(ValueError):
            power_index(B({(0, 0): 3}), Weight(1, 1))

    @settings(max_examples=60, deadline=None)
    @given(axis_homogeneous(), st.integers(1, 4))
    def test_scaling_under_powers(self, fw, m):
        f, w = fw
        assert power_index(f ** m, w) == m * power_index(f, w)

    @settings(max_examples=60, deadline=None)
    @given(axis_homogeneous())
    def test_root_oracle_agreement(self, fw):
        # when the leading unit is an r-th power in the rationals the
        # undetermined-coefficient oracle must exhibit an exact root
        f, w = fw
        r = power_index(f, w)
        shape = dehomogenize(f, w)
        unit = shape.core.leading()
        if rational_nth_root(unit, r) is not None:
            root = bipoly_nth_root(f, r)
            assert root is not None
            assert root ** r == f

    def test_rational_gap_documented(self):
        # 2 * (XY)^2 has power index 2 over the closure but no rational root
        f = B({(2, 2): 2})
        assert power_index(f, Weight(1, 1)) == 2
        assert bipoly_nth_root(f, 2) is None

    def test_index_one_means_no_root_for_any_m(self):
        f = B({(3, 0): 1, (2, 1): 2, (1, 2): 1})  # X (X + Y)^2
        assert power_index(f, Weight(1, 1)) == 1
        for m in range(2, 4):
            assert bipoly_nth_root(f, m) is None


class TestPowerProportionalityDivision:
    @settings(max_examples=30, deadline=None)
    @given(axis_homogeneous(), st.integers(1, 3))
    def test_power_identity_forces_divisibility(self, fw, k):
        # if g^(deg f) = c f^(deg g) and f has power index 1, then
        # deg f divides deg g and g is a scalar multiple of a power of f
        f, w = fw
        if power_index(f, w) != 1:
            return
        _, deg_f = is_weighted_homogeneous(f, w)
        if deg_f == 0:
            return
        g = f ** k
        _, deg_g = is_weighted_homogeneous(g, w)
        assert (g ** deg_f) == (f ** deg_g)
        assert deg_g % deg_f == 0
        assert g == f ** (deg_g // deg_f)
