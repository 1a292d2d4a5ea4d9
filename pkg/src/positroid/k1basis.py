"""k=1 admissible monomials: the counting identity, the terminating
rewriting system, and basis verification against graded dimensions."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations_with_replacement, product
from math import comb, prod

from .fibers import FiberPoint, k1_point
from .patterns import JugglingPattern


class ZeroInQuotient(ValueError):
    """The monomial's normal form violates the ones-locus condition for the
    given pattern, so it represents zero on the fibers."""


@dataclass(frozen=True)
class ColoredMonomial:
    """A product of colored coordinates, stored per vertex as weakly
    increasing index lists."""

    n: int
    factors: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if len(self.factors) != self.n:
            raise ValueError("need one index list per vertex")
        for idx in self.factors:
            if any(not 1 <= i <= self.n for i in idx):
                raise ValueError(f"indices must lie in [1, {self.n}]")
            if tuple(sorted(idx)) != idx:
                raise ValueError("per-vertex index lists must be sorted")

    @property
    def multidegree(self) -> tuple[int, ...]:
        return tuple(len(idx) for idx in self.factors)

    def index_product(self) -> int:
        """The termination measure: the product of all indices."""
        return prod(i for idx in self.factors for i in idx)

    def evaluate(self, point: FiberPoint) -> Fraction:
        """Product of the vertex-line coordinates (k=1 points only)."""
        out = Fraction(1)
        for b, idx in enumerate(self.factors):
            row = point.spaces[b].basis[0]
            for i in idx:
                out *= row[i - 1]
        return out

    def __str__(self):
        parts = [f"D{b}_{i}" for b, idx in enumerate(self.factors)
                 for i in idx]
        return "*".join(parts) if parts else "1"


@dataclass(frozen=True)
class NormalForm:
    epsilon_power: int
    monomial: ColoredMonomial


def is_admissible(mon: ColoredMonomial, J: JugglingPattern) -> bool:
    """Both admissibility conditions: every factor's diagonal lands in the
    ones locus, and no descending pair across a shift s."""
    if J.k != 1:
        raise ValueError("admissibility is defined for k = 1 patterns")
    n = mon.n
    L = J.ones_locus
    for b, idx in enumerate(mon.factors):
        for i in idx:
            if (b + i - 1) % n not in L:
                return False
    return _find_violation(mon) is None


def _find_violation(mon: ColoredMonomial):
    """Lexicographically smallest (b, s, u, r) with i = factors[b][u] > s
    and factors[b+s][r] > i - s, or None."""
    n = mon.n
    for b in range(n):
        for s in range(1, n):
            other = mon.factors[(b + s) % n]
            for u, i in enumerate(mon.factors[b]):
                if i <= s:
                    continue
                for r, j in enumerate(other):
                    if j > i - s:
                        return (b, s, u, r)
    return None


def rewrite_to_normal_form(mon: ColoredMonomial,
                           J: JugglingPattern | None = None,
                           with_trace: bool = False):
    """Rewrite descending pairs until admissible (for the constant pattern);
    returns NormalForm(e, monomial) with the accumulated epsilon power.

    With a pattern given, a normal form violating the ones-locus condition
    raises ZeroInQuotient. With with_trace=True also returns the list of
    index-product measures, one per state visited.
    """
    n = mon.n
    factors = [list(idx) for idx in mon.factors]
    e = 0
    trace = [mon.index_product()]
    current = mon
    while True:
        hit = _find_violation(current)
        if hit is None:
            break
        b, s, u, r = hit
        i = factors[b][u]
        j = factors[(b + s) % n][r]
        if j <= n - s:
            new_i = j + s
        else:
            new_i = j + s - n
            e += 1
        factors[b][u] = new_i
        factors[(b + s) % n][r] = i - s
        factors[b].sort()
        factors[(b + s) % n].sort()
        current = ColoredMonomial(n, tuple(tuple(f) for f in factors))
        trace.append(current.index_product())
    if J is not None:
        L = J.ones_locus
        for b, idx in enumerate(current.factors):
            for i in idx:
                if (b + i - 1) % n not in L:
                    raise ZeroInQuotient(
                        f"factor D{b}_{i} of the normal form has diagonal "
                        f"{(b + i - 1) % n} outside the ones locus {set(L)}")
    nf = NormalForm(e, current)
    return (nf, trace) if with_trace else nf


def enumerate_admissible(J: JugglingPattern,
                         m: tuple[int, ...]) -> list[ColoredMonomial]:
    """All J-admissible monomials of multidegree m, lexicographically."""
    if J.k != 1:
        raise ValueError("admissible monomials are defined for k = 1")
    n = J.n
    if len(m) != n:
        raise ValueError(f"multidegree length {len(m)} != n={n}")
    L = J.ones_locus
    per_vertex = []
    for b, mb in enumerate(m):
        allowed = [i for i in range(1, n + 1) if (b + i - 1) % n in L]
        per_vertex.append(list(combinations_with_replacement(allowed, mb)))
    out = []
    for pick in product(*per_vertex):
        mon = ColoredMonomial(n, tuple(pick))
        if _find_violation(mon) is None:
            out.append(mon)
    out.sort(key=lambda mo: mo.factors)
    return out


def count_admissible(J: JugglingPattern, m: tuple[int, ...]) -> int:
    return len(enumerate_admissible(J, m))


def expected_count(J: JugglingPattern, m: tuple[int, ...]) -> int:
    """The closed-form count C(|m| + ell - 1, |m|)."""
    M = sum(m)
    return comb(M + J.ell - 1, M)


_PRIMES = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59,
           61, 67, 71, 73, 79, 83, 89, 97, 101, 103, 107, 109, 113, 127,
           131, 137, 139, 149, 151, 157, 163, 167, 173, 179, 181, 191, 193,
           197, 199, 211, 223, 227, 229, 233, 239, 241, 251, 257, 263, 269,
           271, 277, 281, 283, 293, 307, 311, 313, 317, 331, 337, 347, 349]


def sample_lambda(J: JugglingPattern, t: int) -> dict[int, Fraction]:
    """The t-th deterministic parameter vector: consecutive primes."""
    locus = sorted(J.ones_locus)
    ell = len(locus)
    return {l: Fraction(_PRIMES[(t * ell + j) % len(_PRIMES)] + t)
            for j, l in enumerate(locus)}


def sample_points(J: JugglingPattern, count: int, eps=1) -> list[FiberPoint]:
    return [k1_point(J, sample_lambda(J, t), eps) for t in range(count)]


def verify_basis(J: JugglingPattern, m: tuple[int, ...],
                 epsilons=(0, 1, 2, -1)) -> dict:
    """Check the basis property in multidegree m: the admissible count
    matches the graded component dimension at every epsilon, and the
    evaluation matrix on sampled points at eps=1 has full rank."""
    from . import linalg
    from .hilbert import graded_component_dim
    from .ideals import global_positroid_ideal

    mons = enumerate_admissible(J, m)
    count = len(mons)
    binomial = expected_count(J, m)
    ideal = global_positroid_ideal(J)
    dims = {}
    for eps in epsilons:
        dims[Fraction(eps)] = graded_component_dim(ideal.specialize(eps), m)

    rank = 0
    samples = count + 3
    for _ in range(4):
        points = sample_points(J, samples, eps=1)
        matrix = [[mon.evaluate(pt) for mon in mons] for pt in points]
        rank = linalg.rank(matrix) if count else 0
        if rank == count:
            break
        samples *= 2

    dim_ok = all(d == count for d in dims.values())
    report = {
        "pattern": str(J),
        "multidegree": list(m),
        "count_admissible": count,
        "binomial_count": binomial,
        "dims": {f"{e.numerator}/{e.denominator}": d
                 for e, d in sorted(dims.items())},
        "evaluation_rank": rank,
        "pass": bool(dim_ok and rank == count and count == binomial),
    }
    if not report["pass"]:
        report["witness"] = {
            "pattern": str(J),
            "multidegree": list(m),
            "count": count,
            "binomial": binomial,
            "dims": report["dims"],
            "rank": rank,
        }
    return report
