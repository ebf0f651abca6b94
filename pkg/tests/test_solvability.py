"""Decision ladder, witnesses, and the box oracle."""

import random
from fractions import Fraction

import pytest
from hypothesis import given, settings

from weylkit import (
    H,
    ONE,
    P,
    Q,
    Outcome,
    RuleId,
    WeylElement,
    analyze,
    dominates_unit,
    exp_ad,
    find_witness_box,
    mul,
    omega,
    power,
    verify_witness,
    witness_for_affine,
)

from oracles import naive_box_witness
from strategies import weyl_elements


def rules_of(verdict):
    return [cit.rule for cit in verdict.reasons]


def W(terms):
    return WeylElement(terms)


class TestVerifyWitness:
    def test_generators_reversed(self):
        assert verify_witness(Q, -P)

    def test_defining_pair(self):
        assert verify_witness(P, Q)

    def test_h_and_q(self):
        assert not verify_witness(H, Q)


class TestWitnessForAffine:
    def test_p_plus_q_squared(self):
        assert witness_for_affine(P + power(Q, 2)) == Q

    def test_scaled_q_with_constant(self):
        x = W({(0, 1): 3, (0, 0): 5})
        assert witness_for_affine(x) == W({(1, 0): Fraction(-1, 3)})

    def test_not_in_family(self):
        assert witness_for_affine(power(Q, 2)) is None

    def test_mirror_shape(self):
        x = W({(0, 1): 2, (3, 0): 1, (0, 0): -4})
        y = witness_for_affine(x)
        assert y == W({(1, 0): Fraction(-1, 2)})
        assert verify_witness(x, y)

    def test_random_family_members(self):
        rng = random.Random(11)
        for _ in range(25):
            alpha = Fraction(rng.choice([c for c in range(-9, 10) if c]),
                             rng.randint(1, 3))
            g_terms = {(0, j): rng.randint(-9, 9) for j in range(rng.randint(0, 5))}
            x = W({(1, 0): alpha}) + W({k: v for k, v in g_terms.items() if v})
            y = witness_for_affine(x)
            assert y == W({(0, 1): 1 / alpha})
            assert verify_witness(x, y)


class TestDominatesUnit:
    def test_h(self):
        assert dominates_unit(H)

    def test_q_alone(self):
        assert not dominates_unit(Q)

    def test_high_monomial(self):
        assert dominates_unit(W({(2, 3): 1}))

    def test_needs_convex_combination(self):
        # neither support point clears (1,1) alone but the segment does
        assert dominates_unit(W({(3, 0): 1, (0, 3): 1}))

    def test_segment_that_misses(self):
        assert not dominates_unit(W({(2, 0): 1, (0, 1): 1}))

    def test_zero_rejected(self):
        with pytest.raises(ValueError):
            dominates_unit(WeylElement.zero())


class TestFindWitnessBox:
    def test_q_gets_minus_p(self):
        assert find_witness_box(Q, 1) == -P

    def test_h_has_no_witness(self):
        assert find_witness_box(H, 3) is None

    def test_affine_witness_found(self):
        assert find_witness_box(P + power(Q, 2), 2) == Q

    def test_cap_enforced(self):
        with pytest.raises(ValueError, match="cap 8"):
            find_witness_box(Q, 9)
        with pytest.raises(ValueError, match="cap 10"):
            find_witness_box(Q, 11, cap=10)

    def test_zero_rejected(self):
        with pytest.raises(ValueError):
            find_witness_box(WeylElement.zero(), 2)

    def test_found_witnesses_always_verify(self):
        rng = random.Random(23)
        for _ in range(20):
            terms = {
                (rng.randint(0, 3), rng.randint(0, 3)): rng.randint(-5, 5)
                for _ in range(rng.randint(1, 4))
            }
            x = W({k: v for k, v in terms.items() if v})
            if x.is_zero():
                continue
            y = find_witness_box(x, 3)
            if y is not None:
                assert verify_witness(x, y)

    def test_existence_matches_naive_elimination(self):
        # the fraction-free solver and a plain rational row reduction must
        # agree on whether a box witness exists at all
        rng = random.Random(1789)
        agreements = 0
        for _ in range(60):
            terms = {
                (rng.randint(0, 3), rng.randint(0, 3)): Fraction(rng.randint(-6, 6), rng.randint(1, 2))
                for _ in range(rng.randint(1, 4))
            }
            x = W({k: v for k, v in terms.items() if v})
            if x.is_zero():
                continue
            fast = find_witness_box(x, 2)
            slow = naive_box_witness(x, 2)
            assert (fast is None) == (slow is None), str(x)
            agreements += 1
        assert agreements >= 50


class TestLadderVerdicts:
    def test_constant(self):
        v = analyze(W({(0, 0): 7}))
        assert v.outcome == Outcome.UNSOLVABLE
        assert rules_of(v) == [RuleId.CONSTANT_ELEMENT]

    def test_zero(self):
        v = analyze(WeylElement.zero())
        assert v.outcome == Outcome.UNSOLVABLE
        assert rules_of(v) == [RuleId.CONSTANT_ELEMENT]

    def test_h_fires_axis_power_index(self):
        v = analyze(H)
        assert v.outcome == Outcome.UNSOLVABLE
        assert rules_of(v) == [RuleId.AXIS_POWER_INDEX_ONE]
        assert v.reasons[0].params["weight"] == "(1,1)"
        assert v.reasons[0].params["weighted_degree"] == 2

    def test_q_cubed_fires_low_grade_band(self):
        v = analyze(power(Q, 3))
        assert v.outcome == Outcome.UNSOLVABLE
        assert rules_of(v) == [RuleId.LOW_GRADE_BAND]

    def test_p_cubed_fires_mirror_band(self):
        v = analyze(power(P, 3))
        assert v.outcome == Outcome.UNSOLVABLE
        assert rules_of(v) == [RuleId.LOW_GRADE_BAND]

    def test_affine_family_solvable(self):
        v = analyze(P + power(Q, 2))
        assert v.outcome == Outcome.SOLVABLE
        assert v.witness == Q
        assert rules_of(v) == [RuleId.AFFINE_FAMILY]

    def test_linear_polynomial_solvable(self):
        v = analyze(W({(0, 1): 3, (0, 0): 5}))
        assert v.outcome == Outcome.SOLVABLE
        assert rules_of(v) == [RuleId.LINEAR_IN_GENERATOR]
        assert verify_witness(W({(0, 1): 3, (0, 0): 5}), v.witness)

    @pytest.mark.parametrize("degree", range(2, 7))
    def test_generator_polynomials_unsolvable(self, degree):
        # nonzero constant term keeps the grade band rule out of the way
        x = W({(0, j): 1 for j in range(degree + 1)})
        v = analyze(x)
        assert v.outcome == Outcome.UNSOLVABLE
        assert rules_of(v)[0] in (RuleId.POLYNOMIAL_IN_GENERATOR, RuleId.LOW_GRADE_BAND)

    def test_generator_polynomial_rule_cited(self):
        x = W({(0, 2): 1, (0, 0): 1})
        v = analyze(x)
        assert rules_of(v) == [RuleId.POLYNOMIAL_IN_GENERATOR]
        assert v.reasons[0].params["generator"] == "q"

    def test_h_polynomial_unsolvable(self):
        v = analyze(power(H, 2))
        assert v.outcome == Outcome.UNSOLVABLE
        assert rules_of(v) == [RuleId.POLYNOMIAL_IN_GENERATOR]
        assert v.reasons[0].params["generator"] == "h"

    def test_homogeneous_grade_one(self):
        # x = h q is homogeneous of grade 1 with nonconstant h-polynomial
        v = analyze(mul(H, Q))
        assert v.outcome == Outcome.UNSOLVABLE
        assert rules_of(v) == [RuleId.HOMOGENEOUS_HIGH_DEGREE]

    def test_non_axis_edge(self):
        # support {(3,1),(0,3)} spans an edge of weight (2,3), degree 9 > 5
        x = W({(3, 1): 1, (0, 3): 1})
        v = analyze(x)
        assert v.outcome == Outcome.UNSOLVABLE
        assert rules_of(v) == [RuleId.NON_AXIS_EDGE]
        assert v.reasons[0].params["weight"] == "(2,3)"

    def test_edge_gcd_one(self):
        u = W({(3, 3): 1, (4, 1): 1})
        w = W({(3, 9): 1, (4, 8): 3, (5, 7): 3})
        x = power(u, 2) + w
        v = analyze(x)
        assert v.outcome == Outcome.UNSOLVABLE
        assert rules_of(v) == [RuleId.EDGE_GCD_ONE]
        assert sorted(v.reasons[0].params["power_indices"]) == [2, 3]

    def test_oracle_witness_rule(self):
        # conjugating p + q^2 by exp(ad p^2) hides the affine shape from
        # every structural rule, but the witness q + 2p sits in the box
        x = exp_ad(power(P, 2), P + power(Q, 2))
        v = analyze(x)
        assert v.outcome == Outcome.SOLVABLE
        assert rules_of(v) == [RuleId.ORACLE_WITNESS]
        assert verify_witness(x, v.witness)

    def test_unknown_square_of_solvable(self):
        # (p + q^2)^2 is a square of a solvable element; no ladder rule
        # sees it and the box is empty, so the honest answer is unknown
        x = power(P + power(Q, 2), 2)
        v = analyze(x)
        assert v.outcome == Outcome.UNKNOWN
        assert v.witness is None
        assert RuleId.ORACLE_WITNESS in v.attempted
        assert v.box_bound == 4

    def test_solvable_always_carries_verified_witness(self):
        rng = random.Random(7)
        for _ in range(60):
            terms = {
                (rng.randint(0, 3), rng.randint(0, 3)): rng.randint(-4, 4)
                for _ in range(rng.randint(1, 4))
            }
            x = W({k: v for k, v in terms.items() if v})
            verdict = analyze(x, box=3)
            if verdict.outcome == Outcome.SOLVABLE:
                assert verify_witness(x, verdict.witness)
            elif verdict.outcome == Outcome.UNSOLVABLE:
                assert verdict.reasons


class TestVerdictConsistency:
    def test_rules_never_contradict_witnesses(self):
        rng = random.Random(97)
        checked = 0
        while checked < 500:
            terms = {
                (rng.randint(0, 4), rng.randint(0, 4)): rng.randint(-9, 9)
                for _ in range(rng.randint(1, 5))
            }
            x = W({k: v for k, v in terms.items() if v})
            verdict = analyze(x, box=2)
            if verdict.outcome == Outcome.UNSOLVABLE:
                assert witness_for_affine(x) is None
                assert verdict.witness is None
            checked += 1

    def test_unsolvable_verdicts_beat_box_oracle(self):
        rng = random.Random(41)
        found = 0
        while found < 50:
            terms = {
                (rng.randint(0, 3), rng.randint(0, 3)): rng.randint(-6, 6)
                for _ in range(rng.randint(1, 4))
            }
            x = W({k: v for k, v in terms.items() if v})
            if x.is_zero():
                continue
            verdict = analyze(x, box=2)
            if verdict.outcome == Outcome.UNSOLVABLE:
                assert find_witness_box(x, 4) is None
                found += 1

    @settings(max_examples=60, deadline=None)
    @given(weyl_elements(max_exp=3, max_terms=4))
    def test_omega_equivariance(self, x):
        assert analyze(omega(x), box=3).outcome == analyze(x, box=3).outcome

    def test_witnesses_transport_along_automorphisms(self):
        rng = random.Random(5)
        x = P + power(Q, 2)
        y = Q
        assert verify_witness(x, y)
        for _ in range(20):
            axis = rng.choice(["p", "q"])
            coeffs = [Fraction(rng.randint(-3, 3), rng.randint(1, 2)) for _ in range(3)]
            terms = {
                (k + 1, 0) if axis == "p" else (0, k + 1): c
                for k, c in enumerate(coeffs)
                if c
            }
            g = W(terms)
            assert verify_witness(exp_ad(g, x), exp_ad(g, y))
