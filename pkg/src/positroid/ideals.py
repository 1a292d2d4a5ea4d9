"""Generators of the global positroid ideal and its specializations.

Three families: classical Pluecker quadrics per color, linear Schubert
vanishing monomials per vertex, and the epsilon-twisted shift relations
connecting consecutive colors.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations, product

from .groebner import Ideal
from .patterns import JugglingPattern, KSubset, all_subsets
from .poly import Polynomial


def _dedup(polys):
    out = []
    seen = set()
    for p in polys:
        if p.is_zero():
            continue
        p = p.primitive()
        key = frozenset((m.exps, c) for m, c in p.terms.items())
        neg = frozenset((m.exps, -c) for m, c in p.terms.items())
        if key in seen or neg in seen:
            continue
        seen.add(key)
        out.append(p)
    return out


def classical_plucker_generators(k: int, n: int, a: int) -> list[Polynomial]:
    """The Pluecker quadrics of color a: for subsets I, J and r in [k],
    Delta_I Delta_J minus the sum over swaps of j_r with each element of I."""
    subsets = list(combinations(range(1, n + 1), k))
    gens = []
    for I in subsets:
        for J in subsets:
            for r in range(k):
                g = Polynomial.plucker(a, I) * Polynomial.plucker(a, J)
                for u in range(k):
                    Iswap = I[:u] + (J[r],) + I[u + 1:]
                    Jswap = J[:r] + (I[u],) + J[r + 1:]
                    g = g - (Polynomial.plucker(a, Iswap) *
                             Polynomial.plucker(a, Jswap))
                gens.append(g)
    return _dedup(gens)


def schubert_vanishing_generators(J: JugglingPattern) -> list[Polynomial]:
    """Linear monomials Delta^(a)_I for every color a and every I that is
    not componentwise >= J_a."""
    gens = []
    for a, Ja in enumerate(J.entries):
        for I in all_subsets(J.k, J.n):
            if not Ja.leq(I):
                gens.append(Polynomial.plucker(a, I.elements))
    return gens


def epsilon_relations(k: int, n: int) -> list[Polynomial]:
    """The shift relations: for colors a, shifts c and subsets I, J,
    Delta^(a)_I Delta^(a+c)_J = eps^(d_c(J+c)-d_c(I)) Delta^(a)_(J+c)
    Delta^(a+c)_(I-c), with the epsilon power moved to whichever side keeps
    it nonnegative."""
    subsets = all_subsets(k, n)
    gens = []
    for a, c in product(range(n), range(n)):
        for I, J in product(subsets, subsets):
            Jp = J.unshift(c)
            Im = I.shift(c)
            d = Jp.d_shift(c) - I.d_shift(c)
            lhs = (Polynomial.plucker(a, I.elements) *
                   Polynomial.plucker((a + c) % n, J.elements))
            rhs = (Polynomial.plucker(a, Jp.elements) *
                   Polynomial.plucker((a + c) % n, Im.elements))
            if d >= 0:
                g = lhs - rhs * Polynomial.epsilon(d) if d else lhs - rhs
            else:
                g = lhs * Polynomial.epsilon(-d) - rhs
            gens.append(g)
    return _dedup(gens)


def global_positroid_ideal(J: JugglingPattern) -> Ideal:
    """The ideal generated by the classical quadrics of every color, the
    Schubert vanishing monomials of J, and the shift relations."""
    gens: list[Polynomial] = []
    for a in range(J.n):
        gens.extend(classical_plucker_generators(J.k, J.n, a))
    gens.extend(schubert_vanishing_generators(J))
    gens.extend(epsilon_relations(J.k, J.n))
    return Ideal(J.k, J.n, tuple(_dedup(gens)), has_epsilon=True)


def specialize(ideal: Ideal, epsilon_value) -> Ideal:
    return ideal.specialize(epsilon_value)
