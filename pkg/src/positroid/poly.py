"""Exact multivariate polynomials in epsilon and colored Pluecker variables.

Variables are plain tuples: EPSILON = ("e",) and ("D", a, I) for the
Pluecker coordinate of color a in Z_n and sorted k-subset I. Unsorted index
tuples are absorbed into coefficients via the sign of the sorting
permutation; repeated indices give the zero polynomial.
"""

from __future__ import annotations

import json
import re
from fractions import Fraction
from typing import Iterable, Mapping

EPSILON = ("e",)

Var = tuple


def plucker_var(a: int, elements: Iterable[int]) -> Var:
    """Canonical variable for a sorted index tuple (no sign handling)."""
    elems = tuple(elements)
    if tuple(sorted(elems)) != elems or len(set(elems)) != len(elems):
        raise ValueError(f"indices must be strictly increasing, got {elems}")
    return ("D", a, elems)


def var_sort_key(v: Var):
    # Pluecker variables first, ordered by color then subset lex; epsilon last.
    if v[0] == "D":
        return (0, v[1], v[2])
    return (1,)


def sort_sign(indices: Iterable[int]) -> tuple[int, tuple[int, ...]]:
    """Sign of the permutation sorting `indices`; 0 on repeats."""
    seq = list(indices)
    if len(set(seq)) != len(seq):
        return 0, tuple(sorted(seq))
    sign = 1
    for i in range(len(seq)):
        for j in range(i + 1, len(seq)):
            if seq[i] > seq[j]:
                sign = -sign
    return sign, tuple(sorted(seq))


class Monomial:
    """A power product, stored as a sorted tuple of (variable, exponent)."""

    __slots__ = ("exps", "_hash")

    def __init__(self, exps: Iterable[tuple[Var, int]] = ()):
        items = [(v, e) for v, e in exps if e]
        if any(e < 0 for _, e in items):
            raise ValueError("negative exponent")
        items.sort(key=lambda ve: var_sort_key(ve[0]))
        self.exps = tuple(items)
        self._hash = hash(self.exps)

    def __hash__(self):
        return self._hash

    def __eq__(self, other):
        return isinstance(other, Monomial) and self.exps == other.exps

    def __mul__(self, other: "Monomial") -> "Monomial":
        d = dict(self.exps)
        for v, e in other.exps:
            d[v] = d.get(v, 0) + e
        return Monomial(d.items())

    @property
    def degree(self) -> int:
        return sum(e for _, e in self.exps)

    def epsilon_exponent(self) -> int:
        return dict(self.exps).get(EPSILON, 0)

    def multidegree(self, n: int) -> tuple[int, ...]:
        """Counts of Pluecker factors per color (epsilon contributes zero)."""
        m = [0] * n
        for v, e in self.exps:
            if v[0] == "D":
                m[v[1] % n] += e
        return tuple(m)

    def __repr__(self):
        return f"Monomial({self.exps!r})"


MONOMIAL_ONE = Monomial()


class Polynomial:
    """Sparse polynomial with exact rational coefficients; canonical form
    keeps no zero coefficients. Equality is structural."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[Monomial, Fraction] | None = None):
        t = {}
        if terms:
            for m, c in terms.items():
                c = Fraction(c)
                if c:
                    t[m] = c
        self.terms = t

    @classmethod
    def zero(cls) -> "Polynomial":
        return cls()

    @classmethod
    def constant(cls, c) -> "Polynomial":
        return cls({MONOMIAL_ONE: Fraction(c)})

    @classmethod
    def variable(cls, v: Var, exp: int = 1) -> "Polynomial":
        return cls({Monomial([(v, exp)]): Fraction(1)})

    @classmethod
    def epsilon(cls, exp: int = 1) -> "Polynomial":
        return cls.variable(EPSILON, exp)

    @classmethod
    def plucker(cls, a: int, indices: Iterable[int]) -> "Polynomial":
        """Sign-canonicalized Pluecker variable; zero on repeated indices."""
        sign, sorted_idx = sort_sign(indices)
        if sign == 0:
            return cls.zero()
        return cls({Monomial([(("D", a, sorted_idx), 1)]): Fraction(sign)})

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        return isinstance(other, Polynomial) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __add__(self, other: "Polynomial") -> "Polynomial":
        t = dict(self.terms)
        for m, c in other.terms.items():
            s = t.get(m, Fraction(0)) + c
            if s:
                t[m] = s
            else:
                t.pop(m, None)
        p = Polynomial.__new__(Polynomial)
        p.terms = t
        return p

    def __neg__(self) -> "Polynomial":
        p = Polynomial.__new__(Polynomial)
        p.terms = {m: -c for m, c in self.terms.items()}
        return p

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        return self + (-other)

    def __mul__(self, other: "Polynomial") -> "Polynomial":
        t: dict[Monomial, Fraction] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = m1 * m2
                s = t.get(m, Fraction(0)) + c1 * c2
                if s:
                    t[m] = s
                else:
                    t.pop(m, None)
        p = Polynomial.__new__(Polynomial)
        p.terms = t
        return p

    def scale(self, c) -> "Polynomial":
        c = Fraction(c)
        if not c:
            return Polynomial.zero()
        p = Polynomial.__new__(Polynomial)
        p.terms = {m: c * v for m, v in self.terms.items()}
        return p

    def variables(self) -> set[Var]:
        return {v for m in self.terms for v, _ in m.exps}

    def total_degree(self) -> int:
        return max((m.degree for m in self.terms), default=0)

    def multidegree(self, n: int) -> tuple[int, ...] | None:
        """The common multidegree of all terms, or None if inhomogeneous."""
        degs = {m.multidegree(n) for m in self.terms}
        if len(degs) == 1:
            return degs.pop()
        return None

    def substitute_epsilon(self, value) -> "Polynomial":
        """Replace epsilon by a rational constant and renormalize."""
        value = Fraction(value)
        t: dict[Monomial, Fraction] = {}
        for m, c in self.terms.items():
            e = m.epsilon_exponent()
            if e:
                m = Monomial([(v, x) for v, x in m.exps if v != EPSILON])
                c = c * value ** e
            if not c:
                continue
            s = t.get(m, Fraction(0)) + c
            if s:
                t[m] = s
            else:
                t.pop(m, None)
        p = Polynomial.__new__(Polynomial)
        p.terms = t
        return p

    def evaluate(self, assignment: Mapping[Var, Fraction]) -> Fraction:
        out = Fraction(0)
        for m, c in self.terms.items():
            val = c
            for v, e in m.exps:
                val *= Fraction(assignment[v]) ** e
            out += val
        return out

    def sorted_terms(self) -> list[tuple[Monomial, Fraction]]:
        return sorted(self.terms.items(),
                      key=lambda mc: _grlex_sort_key(mc[0]), reverse=True)

    def primitive(self) -> "Polynomial":
        """Clear content and make the leading coefficient positive."""
        if not self.terms:
            return self
        coeffs = list(self.terms.values())
        from math import gcd
        num = 0
        den = 1
        for c in coeffs:
            num = gcd(num, c.numerator)
            den = den * c.denominator // gcd(den, c.denominator)
        content = Fraction(num, den)
        lead = self.sorted_terms()[0][1]
        if lead < 0:
            content = -content
        return self.scale(1 / content)

    def __repr__(self):
        return f"Polynomial({poly_to_text(self)!r})"


def _grlex_sort_key(m: Monomial):
    # Degree, then variable sequence (smaller var key = more significant).
    pvars = tuple((var_sort_key(v), e) for v, e in m.exps if v != EPSILON)
    pdeg = sum(e for _, e in pvars)
    # Lex on the sparse exponent sequence: higher exponent on an earlier
    # variable wins; encode as tuple of (negated key, exp) pairs.
    flat = []
    for key, e in pvars:
        flat.append((_neg_key(key), e))
    return (pdeg, tuple(flat), m.epsilon_exponent())


def _neg_key(key):
    # Invert ordering of var keys so that lexicographically earlier variables
    # compare as larger within sorted_terms.
    out = []
    for x in key:
        if isinstance(x, int):
            out.append(-x)
        else:
            out.append(tuple(-y for y in x))
    return tuple(out)


# -- plain-text and JSON polynomial formats ---------------------------------

def var_to_text(v: Var) -> str:
    if v == EPSILON:
        return "e"
    _, a, elems = v
    if all(x <= 9 for x in elems):
        return f"D{a}_" + "".join(map(str, elems))
    return f"D{a}_" + ".".join(map(str, elems))


_VAR_RE = re.compile(r"^(e|D(\d+)_([\d.]+))(?:\^(\d+))?$")


def _parse_factor(tok: str) -> tuple[Var, int]:
    m = _VAR_RE.match(tok)
    if not m:
        raise ValueError(f"bad variable factor {tok!r}")
    exp = int(m.group(4)) if m.group(4) else 1
    if m.group(1) == "e":
        return EPSILON, exp
    a = int(m.group(2))
    idx = m.group(3)
    if "." in idx:
        elems = tuple(int(x) for x in idx.split("."))
    else:
        elems = tuple(int(ch) for ch in idx)
    return plucker_var(a, elems), exp


def poly_to_text(p: Polynomial) -> str:
    if not p.terms:
        return "0"
    parts = []
    for m, c in p.sorted_terms():
        factors = []
        for v, e in m.exps:
            factors.append(var_to_text(v) + (f"^{e}" if e > 1 else ""))
        coeff = abs(c)
        body = "*".join(factors)
        if not factors:
            body = str(coeff)
        elif coeff != 1:
            body = f"{coeff}*{body}"
        sign = "-" if c < 0 else "+"
        parts.append((sign, body))
    first_sign, first_body = parts[0]
    out = ("-" if first_sign == "-" else "") + first_body
    for sign, body in parts[1:]:
        out += f" {sign} {body}"
    return out


_COEFF_RE = re.compile(r"^-?\d+(/\d+)?$")


def parse_polynomial(text: str) -> Polynomial:
    text = text.strip()
    if text in ("0", ""):
        return Polynomial.zero()
    # normalize "a - b" into explicit signed chunks
    chunks = re.split(r"\s*([+-])\s*", text)
    if chunks[0] == "":
        chunks = chunks[1:]
    else:
        chunks = ["+"] + chunks if chunks[0] not in "+-" else chunks
    terms: dict[Monomial, Fraction] = {}
    for i in range(0, len(chunks), 2):
        sign = -1 if chunks[i] == "-" else 1
        body = chunks[i + 1]
        coeff = Fraction(sign)
        exps: dict[Var, int] = {}
        for tok in body.split("*"):
            tok = tok.strip()
            if _COEFF_RE.match(tok):
                coeff *= Fraction(tok)
            else:
                v, e = _parse_factor(tok)
                exps[v] = exps.get(v, 0) + e
        m = Monomial(exps.items())
        terms[m] = terms.get(m, Fraction(0)) + coeff
    return Polynomial(terms)


def poly_to_json(p: Polynomial) -> list[dict]:
    out = []
    for m, c in p.sorted_terms():
        exps = {var_to_text(v): e for v, e in m.exps}
        out.append({"coeff": f"{c.numerator}/{c.denominator}", "exps": exps})
    return out


def poly_from_json(data: list[dict]) -> Polynomial:
    terms: dict[Monomial, Fraction] = {}
    for term in data:
        exps = {}
        for name, e in term["exps"].items():
            v, extra = _parse_factor(name)
            exps[v] = exps.get(v, 0) + e * extra
        m = Monomial(exps.items())
        terms[m] = terms.get(m, Fraction(0)) + Fraction(term["coeff"])
    return Polynomial(terms)


def polys_to_text(polys: Iterable[Polynomial]) -> str:
    return "\n".join(poly_to_text(p) for p in polys)


def parse_polynomials(text: str) -> list[Polynomial]:
    return [parse_polynomial(line) for line in text.splitlines()
            if line.strip()]
