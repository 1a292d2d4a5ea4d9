"""Buchberger's algorithm over exact rationals, normal forms, Krull
dimension of leading ideals, and the Ideal container.

Internally polynomials are dense exponent tuples over a fixed ordered
variable universe; the public surface speaks `poly.Polynomial`.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from math import gcd

from .patterns import all_subsets
from .poly import EPSILON, Monomial, Polynomial, Var, var_sort_key


class ResourceCapExceeded(RuntimeError):
    """A configured degree/size cap was hit; never silently truncated."""


def _max_terms_from_env() -> int:
    return int(os.environ.get("POSITROID_MAX_TERMS", "200000"))


@dataclass
class ResourceCaps:
    max_basis_size: int = 20000
    max_total_degree: int = 80
    max_terms: int = field(default_factory=_max_terms_from_env)

    @classmethod
    def from_env(cls) -> "ResourceCaps":
        return cls()


DEFAULT_CAPS = ResourceCaps()


def _order_key_factory(order: str, nplucker: int, has_eps: bool):
    """Key functions on dense exponent tuples (plucker vars first, epsilon
    last when present). Larger key = larger monomial."""
    if order == "grlex":
        def key(e):
            pv = e[:nplucker]
            return (sum(pv), pv, e[nplucker] if has_eps else 0)
    elif order == "grevlex":
        def key(e):
            pv = e[:nplucker]
            return (sum(pv), tuple(-x for x in reversed(pv)),
                    e[nplucker] if has_eps else 0)
    else:
        raise ValueError(f"unknown monomial order {order!r}")
    return key


DEFAULT_ORDER = "grlex"


def _to_dense(p: Polynomial, index: dict[Var, int], nvars: int):
    out = {}
    for m, c in p.terms.items():
        e = [0] * nvars
        for v, x in m.exps:
            e[index[v]] = x
        out[tuple(e)] = c
    return out


def _to_polynomial(d, variables):
    terms = {}
    for e, c in d.items():
        terms[Monomial([(variables[i], x) for i, x in enumerate(e) if x])] = c
    return Polynomial(terms)


def _divides(a, b) -> bool:
    return all(x <= y for x, y in zip(a, b))


def _lcm(a, b):
    return tuple(max(x, y) for x, y in zip(a, b))


def _sub_exp(a, b):
    return tuple(x - y for x, y in zip(a, b))


def _add_exp(a, b):
    return tuple(x + y for x, y in zip(a, b))


class GroebnerBasis:
    """A reduced Groebner basis over a fixed ordered variable universe."""

    def __init__(self, variables: tuple[Var, ...], order: str,
                 dense_basis: list[dict], key):
        self.variables = variables
        self.order = order
        self._index = {v: i for i, v in enumerate(variables)}
        self._key = key
        self._basis = dense_basis
        self._leads = [max(g, key=key) for g in dense_basis]

    @property
    def polynomials(self) -> list[Polynomial]:
        return [_to_polynomial(g, self.variables) for g in self._basis]

    def leading_monomials(self) -> list[Monomial]:
        return [Monomial([(self.variables[i], x) for i, x in enumerate(e)
                          if x]) for e in self._leads]

    def _normal_form_dense(self, f: dict) -> dict:
        f = dict(f)
        remainder: dict = {}
        while f:
            lead = max(f, key=self._key)
            reduced = False
            for g, lg in zip(self._basis, self._leads):
                if _divides(lg, lead):
                    q = _sub_exp(lead, lg)
                    factor = f[lead] / g[lg]
                    for e, c in g.items():
                        t = _add_exp(e, q)
                        s = f.get(t, Fraction(0)) - factor * c
                        if s:
                            f[t] = s
                        else:
                            f.pop(t, None)
                    reduced = True
                    break
            if not reduced:
                remainder[lead] = f.pop(lead)
        return remainder

    def normal_form(self, p: Polynomial) -> Polynomial:
        missing = [v for v in p.variables() if v not in self._index]
        if missing:
            raise ValueError(f"variables outside the universe: {missing}")
        dense = _to_dense(p, self._index, len(self.variables))
        return _to_polynomial(self._normal_form_dense(dense), self.variables)

    def krull_dimension(self) -> int:
        """Dimension of the quotient: maximum number of variables whose
        span meets no leading monomial's support."""
        supports = {frozenset(i for i, x in enumerate(e) if x)
                    for e in self._leads}
        if frozenset() in supports:
            return 0  # the ideal is the whole ring; dimension of V(1) = 0
        # keep only minimal supports
        minimal = [s for s in supports
                   if not any(t < s for t in supports)]
        nvars = len(self.variables)
        best = [len(minimal)]

        def min_hitting(sups, count):
            if count >= best[0]:
                return
            if not sups:
                best[0] = count
                return
            s = min(sups, key=len)
            for v in sorted(s):
                min_hitting([t for t in sups if v not in t], count + 1)

        min_hitting(minimal, 0)
        return nvars - best[0]


def _normalize_dense(g: dict, key) -> dict:
    """Make primitive with positive leading coefficient."""
    lead = max(g, key=key)
    num = 0
    den = 1
    for c in g.values():
        num = gcd(num, c.numerator)
        den = den * c.denominator // gcd(den, c.denominator)
    content = Fraction(num, den)
    if g[lead] < 0:
        content = -content
    return {e: c / content for e, c in g.items()}


def buchberger(generators: list[Polynomial],
               variables: tuple[Var, ...],
               order: str = DEFAULT_ORDER,
               caps: ResourceCaps = DEFAULT_CAPS) -> GroebnerBasis:
    """Compute the reduced Groebner basis of the ideal generated by
    `generators` in the given ordered variable universe."""
    has_eps = EPSILON in variables
    nplucker = len(variables) - (1 if has_eps else 0)
    key = _order_key_factory(order, nplucker, has_eps)
    index = {v: i for i, v in enumerate(variables)}
    nvars = len(variables)

    basis: list[dict] = []
    leads: list[tuple] = []
    for p in generators:
        if p.is_zero():
            continue
        missing = [v for v in p.variables() if v not in index]
        if missing:
            raise ValueError(f"variables outside the universe: {missing}")
        if len(p.terms) > caps.max_terms:
            raise ResourceCapExceeded(
                f"generator has {len(p.terms)} terms, cap {caps.max_terms}")
        deg = p.total_degree()
        if deg > caps.max_total_degree:
            raise ResourceCapExceeded(
                f"generator degree {deg} exceeds cap {caps.max_total_degree}")
        d = _normalize_dense(_to_dense(p, index, nvars), key)
        if d not in basis:
            basis.append(d)
            leads.append(max(d, key=key))

    def reduce_fully(f: dict) -> dict:
        out: dict = {}
        f = dict(f)
        while f:
            lead = max(f, key=key)
            hit = None
            for i, lg in enumerate(leads):
                if _divides(lg, lead):
                    hit = i
                    break
            if hit is None:
                out[lead] = f.pop(lead)
                continue
            g = basis[hit]
            q = _sub_exp(lead, leads[hit])
            factor = f[lead] / g[leads[hit]]
            for e, c in g.items():
                t = _add_exp(e, q)
                s = f.get(t, Fraction(0)) - factor * c
                if s:
                    f[t] = s
                else:
                    f.pop(t, None)
            if len(f) > caps.max_terms:
                raise ResourceCapExceeded(
                    f"term count {len(f)} exceeds cap {caps.max_terms}")
        return out

    # S-pair queue ordered by lcm (normal selection strategy)
    pairs = {(i, j) for i in range(len(basis)) for j in range(i)}

    def coprime(a, b):
        return all(x == 0 or y == 0 for x, y in zip(a, b))

    while pairs:
        i, j = min(pairs, key=lambda ij: key(_lcm(leads[ij[0]],
                                                  leads[ij[1]])))
        pairs.discard((i, j))
        li, lj = leads[i], leads[j]
        if coprime(li, lj):
            continue
        l = _lcm(li, lj)
        # chain criterion: an intermediate basis element dividing the lcm
        # with both its pairs handled lets us skip this pair
        skip = False
        for t in range(len(basis)):
            if t in (i, j):
                continue
            if _divides(leads[t], l):
                p1 = (max(i, t), min(i, t))
                p2 = (max(j, t), min(j, t))
                if p1 not in pairs and p2 not in pairs:
                    skip = True
                    break
        if skip:
            continue
        gi, gj = basis[i], basis[j]
        qi, qj = _sub_exp(l, li), _sub_exp(l, lj)
        ci, cj = gi[li], gj[lj]
        s: dict = {}
        for e, c in gi.items():
            t = _add_exp(e, qi)
            s[t] = s.get(t, Fraction(0)) + c / ci
        for e, c in gj.items():
            t = _add_exp(e, qj)
            v = s.get(t, Fraction(0)) - c / cj
            if v:
                s[t] = v
            else:
                s.pop(t, None)
        r = reduce_fully(s)
        if not r:
            continue
        if sum(max(r, key=key)) > caps.max_total_degree:
            raise ResourceCapExceeded(
                f"degree {sum(max(r, key=key))} exceeds cap "
                f"{caps.max_total_degree}")
        r = _normalize_dense(r, key)
        basis.append(r)
        leads.append(max(r, key=key))
        if len(basis) > caps.max_basis_size:
            raise ResourceCapExceeded(
                f"basis size exceeds cap {caps.max_basis_size}")
        new = len(basis) - 1
        for t in range(new):
            pairs.add((new, t))

    # interreduce to the unique reduced basis
    keep = []
    for i, lg in enumerate(leads):
        if not any(j != i and _divides(leads[j], lg) and
                   (leads[j] != lg or j < i) for j in range(len(leads))):
            keep.append(i)
    reduced_basis = [basis[i] for i in keep]
    reduced_leads = [leads[i] for i in keep]
    final = []
    for i, g in enumerate(reduced_basis):
        others = [reduced_basis[j] for j in range(len(reduced_basis))
                  if j != i]
        other_leads = [reduced_leads[j] for j in range(len(reduced_basis))
                       if j != i]
        f = dict(g)
        out: dict = {}
        while f:
            lead = max(f, key=key)
            hit = None
            for t, lg in enumerate(other_leads):
                if _divides(lg, lead):
                    hit = t
                    break
            if hit is None:
                out[lead] = f.pop(lead)
                continue
            og = others[hit]
            q = _sub_exp(lead, other_leads[hit])
            factor = f[lead] / og[other_leads[hit]]
            for e, c in og.items():
                t2 = _add_exp(e, q)
                v = f.get(t2, Fraction(0)) - factor * c
                if v:
                    f[t2] = v
                else:
                    f.pop(t2, None)
        if out:
            lead = max(out, key=key)
            final.append({e: c / out[lead] for e, c in out.items()})
    final.sort(key=lambda g: key(max(g, key=key)))
    return GroebnerBasis(variables, order, final, key)


def normal_form(p: Polynomial, basis: GroebnerBasis) -> Polynomial:
    return basis.normal_form(p)


def krull_dimension(basis: GroebnerBasis) -> int:
    return basis.krull_dimension()


def plucker_universe(k: int, n: int, colors: list[int] | None = None,
                     with_epsilon: bool = False) -> tuple[Var, ...]:
    """The ordered variable universe: Pluecker variables by color then
    subset lex, epsilon last."""
    if colors is None:
        colors = list(range(n))
    vs = [("D", a, I.elements) for a in colors for I in all_subsets(k, n)]
    vs.sort(key=var_sort_key)
    if with_epsilon:
        vs.append(EPSILON)
    return tuple(vs)


@dataclass
class Ideal:
    """An ideal in the colored Pluecker ring, optionally with epsilon."""

    k: int
    n: int
    generators: tuple[Polynomial, ...]
    has_epsilon: bool = True
    order: str = DEFAULT_ORDER
    _groebner: GroebnerBasis | None = field(default=None, repr=False,
                                            compare=False)

    @property
    def universe(self) -> tuple[Var, ...]:
        return plucker_universe(self.k, self.n,
                                with_epsilon=self.has_epsilon)

    def groebner(self, caps: ResourceCaps = DEFAULT_CAPS) -> GroebnerBasis:
        if self._groebner is None:
            self._groebner = buchberger(list(self.generators),
                                        self.universe, self.order, caps)
        return self._groebner

    def with_generators(self, generators) -> "Ideal":
        return Ideal(self.k, self.n, tuple(generators), self.has_epsilon,
                     self.order)

    def specialize(self, value) -> "Ideal":
        """Substitute epsilon by a rational constant, dropping generators
        that vanish."""
        gens = []
        seen = set()
        for g in self.generators:
            s = g.substitute_epsilon(value).primitive()
            if s.is_zero():
                continue
            kkey = tuple(sorted(((m.exps, c) for m, c in s.terms.items()),
                                key=repr))
            if kkey in seen:
                continue
            seen.add(kkey)
            gens.append(s)
        return Ideal(self.k, self.n, tuple(gens), has_epsilon=False,
                     order=self.order)
