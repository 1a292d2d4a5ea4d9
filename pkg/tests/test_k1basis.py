"""Tests for admissible monomials, rewriting, and the basis verifier."""

from fractions import Fraction
from itertools import product
from math import comb

import pytest
from hypothesis import given, settings, strategies as st

from positroid.k1basis import (
    ColoredMonomial,
    ZeroInQuotient,
    count_admissible,
    enumerate_admissible,
    expected_count,
    is_admissible,
    rewrite_to_normal_form,
    sample_lambda,
    sample_points,
    verify_basis,
)
from positroid.patterns import JugglingPattern, KSubset, enumerate_patterns


def P(k, n, *entries):
    return JugglingPattern(k, n, tuple(KSubset(n, e) for e in entries))


def constant(n):
    return P(1, n, *(((1,),) * n))


def multidegrees(n, bound):
    for m in product(range(bound + 1), repeat=n):
        if 0 < sum(m) <= bound:
            yield m


class TestColoredMonomial:
    def test_multidegree_and_measure(self):
        mon = ColoredMonomial(3, ((1, 2), (), (3,)))
        assert mon.multidegree == (2, 0, 1)
        assert mon.index_product() == 6
        assert str(mon) == "D0_1*D0_2*D2_3"

    def test_rejects_unsorted_factors(self):
        with pytest.raises(ValueError):
            ColoredMonomial(3, ((2, 1), (), ()))


class TestAdmissibility:
    def test_constant_pattern_degree_11_monomials(self):
        # For the constant pattern on 3 vertices and m=(1,1,0) exactly six
        # monomials are admissible.
        mons = enumerate_admissible(constant(3), (1, 1, 0))
        assert sorted(str(m) for m in mons) == [
            "D0_1*D1_1", "D0_1*D1_2", "D0_1*D1_3",
            "D0_2*D1_1", "D0_3*D1_1", "D0_3*D1_2"]

    def test_descending_pair_is_inadmissible(self):
        # D0_2*D1_2: i=2 at vertex 0 with s=1 and j=2 > i-s=1.
        assert not is_admissible(ColoredMonomial(3, ((2,), (2,), ())),
                                 constant(3))

    def test_ones_locus_condition(self):
        J = P(1, 3, (1,), (3,), (2,))  # ones locus {0}
        assert is_admissible(ColoredMonomial(3, ((1,), (), ())), J)
        assert not is_admissible(ColoredMonomial(3, ((2,), (), ())), J)

    def test_counting_identity_small_sweep(self):
        for n in (2, 3, 4):
            for J in enumerate_patterns(1, n):
                for m in multidegrees(n, 3):
                    assert count_admissible(J, m) == expected_count(J, m)

    def test_expected_count_formula(self):
        J = constant(3)
        assert expected_count(J, (1, 1, 0)) == comb(2 + 3 - 1, 2)


class TestRewriting:
    def test_known_rewrite_without_wrap(self):
        # D0_3*D1_3 -> D1_1*D1_3? no: (i=3)@0 with (j=3)@1, s=1, j<=n-s=2
        # fails, so the wrap rule fires: new_i = 3+1-3 = 1, e += 1.
        nf = rewrite_to_normal_form(ColoredMonomial(3, ((3,), (3,), ())))
        assert nf.epsilon_power == 1
        assert str(nf.monomial) == "D0_1*D1_2"

    def test_known_rewrite_with_plain_exchange(self):
        # D0_2*D1_2 with s=1: j=2 <= n-s=2, exchange to D0_3*D1_1, e=0.
        nf = rewrite_to_normal_form(ColoredMonomial(3, ((2,), (2,), ())))
        assert nf.epsilon_power == 0
        assert str(nf.monomial) == "D0_3*D1_1"

    def test_measure_strictly_decreases(self):
        for n in (3, 4):
            for m in multidegrees(n, 3):
                for mon in _all_monomials(n, m):
                    _, trace = rewrite_to_normal_form(mon, with_trace=True)
                    assert all(a > b for a, b in zip(trace, trace[1:]))

    def test_normal_forms_are_admissible_for_constant_pattern(self):
        J = constant(3)
        for m in multidegrees(3, 3):
            for mon in _all_monomials(3, m):
                nf = rewrite_to_normal_form(mon, J)
                assert is_admissible(nf.monomial, J)
                assert nf.epsilon_power >= 0

    def test_zero_in_quotient_for_restrictive_pattern(self):
        J = P(1, 2, (1,), (2,))  # ones locus {0}
        with pytest.raises(ZeroInQuotient):
            rewrite_to_normal_form(ColoredMonomial(2, ((2,), ())), J)

    def test_evaluation_identity_on_sampled_points(self):
        # input = eps^e * output pointwise; at eps=1 the powers drop out.
        J = constant(3)
        points = sample_points(J, 4, eps=1)
        for m in multidegrees(3, 2):
            for mon in _all_monomials(3, m):
                nf = rewrite_to_normal_form(mon, J)
                for pt in points:
                    assert mon.evaluate(pt) == nf.monomial.evaluate(pt)

    def test_evaluation_identity_at_generic_epsilon(self):
        from positroid.fibers import k1_point
        J = constant(3)
        eps = Fraction(3, 2)
        pt = k1_point(J, {0: Fraction(2), 1: Fraction(3), 2: Fraction(5)},
                      eps)
        mon = ColoredMonomial(3, ((3,), (3,), ()))
        nf = rewrite_to_normal_form(mon, J)
        assert mon.evaluate(pt) == eps ** nf.epsilon_power * \
            nf.monomial.evaluate(pt)


class TestSampling:
    def test_sample_lambda_supported_on_ones_locus(self):
        J = P(1, 3, (1,), (1,), (2,))
        lam = sample_lambda(J, 0)
        assert set(lam) == set(J.ones_locus)
        assert all(v > 0 for v in lam.values())

    def test_samples_are_distinct(self):
        J = constant(3)
        lams = [tuple(sorted(sample_lambda(J, t).items())) for t in range(5)]
        assert len(set(lams)) == 5


class TestVerifyBasis:
    def test_constant_pattern_passes(self):
        report = verify_basis(constant(3), (1, 1, 0))
        assert report["pass"]
        assert report["count_admissible"] == 6
        assert report["binomial_count"] == 6
        assert set(report["dims"].values()) == {6}
        assert report["evaluation_rank"] == 6

    def test_failure_reports_witness(self):
        # A multidegree with a zero entry where the generated ideal is not
        # saturated: the graded dimension exceeds the admissible count.
        report = verify_basis(P(1, 3, (3,), (2,), (1,)), (0, 0, 1))
        assert not report["pass"]
        assert "witness" in report


def _all_monomials(n, m):
    from itertools import combinations_with_replacement
    per_vertex = [list(combinations_with_replacement(range(1, n + 1), mb))
                  for mb in m]
    for pick in product(*per_vertex):
        yield ColoredMonomial(n, tuple(tuple(p) for p in pick))
