"""Tests for Buchberger, normal forms, and Krull dimension."""

import pytest

from positroid.groebner import (
    GroebnerBasis,
    Ideal,
    ResourceCapExceeded,
    ResourceCaps,
    buchberger,
    plucker_universe,
)
from positroid.ideals import classical_plucker_generators
from positroid.poly import EPSILON, Polynomial, plucker_var


def D(a, *idx):
    return Polynomial.plucker(a, idx)


def _simple_vars(count):
    # Distinct single-index variables standing in for a generic ring.
    return tuple(plucker_var(0, (i,)) for i in range(1, count + 1))


class TestBuchberger:
    def test_zero_ideal(self):
        vars_ = _simple_vars(3)
        gb = buchberger([], vars_)
        assert gb.polynomials == []
        assert gb.krull_dimension() == 3

    def test_principal_monomial_ideal(self):
        x, y = _simple_vars(2)
        gb = buchberger([Polynomial.variable(x) * Polynomial.variable(y)],
                        _simple_vars(2))
        assert gb.krull_dimension() == 1

    def test_grassmannian_2_4_quadric(self):
        vars_ = plucker_universe(2, 4, colors=[0], with_epsilon=False)
        gens = classical_plucker_generators(2, 4, 0)
        gb = buchberger(gens, vars_)
        # Affine cone over the 4-dimensional Grassmannian.
        assert gb.krull_dimension() == 5

    def test_normal_form_of_plucker_product(self):
        vars_ = plucker_universe(2, 4, colors=[0], with_epsilon=False)
        gens = classical_plucker_generators(2, 4, 0)
        gb = buchberger(gens, vars_)
        nf = gb.normal_form(D(0, 1, 2) * D(0, 3, 4))
        expected = D(0, 1, 3) * D(0, 2, 4) - D(0, 1, 4) * D(0, 2, 3)
        assert nf == expected

    def test_normal_form_idempotent_and_annihilates_generators(self):
        vars_ = plucker_universe(2, 4, colors=[0], with_epsilon=False)
        gens = classical_plucker_generators(2, 4, 0)
        gb = buchberger(gens, vars_)
        for g in gens:
            assert gb.normal_form(g).is_zero()
        p = D(0, 1, 2) * D(0, 3, 4) + D(0, 1, 3)
        assert gb.normal_form(gb.normal_form(p)) == gb.normal_form(p)

    def test_basis_is_deterministic(self):
        vars_ = plucker_universe(2, 4, colors=[0], with_epsilon=False)
        gens = classical_plucker_generators(2, 4, 0)
        a = [repr(p) for p in buchberger(gens, vars_).polynomials]
        b = [repr(p) for p in buchberger(list(reversed(gens)),
                                         vars_).polynomials]
        assert a == b

    def test_grevlex_order_differs(self):
        vars_ = plucker_universe(2, 4, colors=[0], with_epsilon=False)
        gens = classical_plucker_generators(2, 4, 0)
        gb = buchberger(gens, vars_, order="grevlex")
        nf = gb.normal_form(D(0, 1, 4) * D(0, 2, 3))
        # Under grevlex the last-variable-heavy product is the reducible one.
        assert nf == D(0, 1, 3) * D(0, 2, 4) - D(0, 1, 2) * D(0, 3, 4)

    def test_unknown_order_rejected(self):
        vars_ = _simple_vars(2)
        with pytest.raises(ValueError):
            buchberger([], vars_, order="lex-of-doom")


class TestResourceCaps:
    def test_term_cap_triggers(self):
        x, y = _simple_vars(2)
        caps = ResourceCaps(max_terms=1)
        with pytest.raises(ResourceCapExceeded):
            buchberger([Polynomial.variable(x) + Polynomial.variable(y)],
                       _simple_vars(2), caps=caps)

    def test_degree_cap_triggers(self):
        vars_ = plucker_universe(2, 4, colors=[0], with_epsilon=False)
        gens = classical_plucker_generators(2, 4, 0)
        with pytest.raises(ResourceCapExceeded):
            buchberger(gens, vars_, caps=ResourceCaps(max_total_degree=1))

    def test_env_var_controls_default_term_cap(self, monkeypatch):
        monkeypatch.setenv("POSITROID_MAX_TERMS", "2")
        caps = ResourceCaps.from_env()
        assert caps.max_terms == 2


class TestKrullDimension:
    def test_monotone_under_adding_generators(self):
        vars_ = plucker_universe(2, 4, colors=[0], with_epsilon=False)
        gens = classical_plucker_generators(2, 4, 0)
        dim = buchberger(gens, vars_).krull_dimension()
        more = gens + [D(0, 1, 2)]
        dim_more = buchberger(more, vars_).krull_dimension()
        assert dim_more <= dim

    def test_full_intersection_of_coordinates(self):
        vars_ = _simple_vars(4)
        gens = [Polynomial.variable(v) for v in vars_]
        assert buchberger(gens, vars_).krull_dimension() == 0


class TestIdealWrapper:
    def test_specialize_drops_epsilon(self):
        gens = [Polynomial.epsilon() * D(0, 1) - D(0, 2)]
        ideal = Ideal(k=1, n=2, generators=gens, has_epsilon=True)
        sp = ideal.specialize(0)
        assert not sp.has_epsilon
        assert all(EPSILON not in p.variables() for p in sp.generators)

    def test_groebner_cached(self):
        gens = [D(0, 1) * D(0, 2)]
        ideal = Ideal(k=1, n=2, generators=gens, has_epsilon=False)
        assert ideal.groebner() is ideal.groebner()
