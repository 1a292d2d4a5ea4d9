"""Command-line front end: pattern enumeration, ideal export, Hilbert and
flatness sweeps, component counts, dimension, basis and membership checks.

Exit codes: 0 on pass, 1 on verification failure, 2 on invalid input.
"""

from __future__ import annotations

import json
import sys
from fractions import Fraction

import click

from . import k1basis
from .fibers import FiberPoint, in_positroid_fiber
from .groebner import ResourceCapExceeded
from .hilbert import graded_component_dim
from .ideals import global_positroid_ideal
from .patterns import (JugglingPattern, PatternError, components_of_special_fiber,
                       enumerate_patterns, parse_pattern)
from .poly import poly_to_json, poly_to_text
from .reports import VerificationReport

DEFAULT_EPSILONS = "0,1,2,-1"


def _parse_epsilons(text: str) -> list[Fraction]:
    try:
        return [Fraction(x.strip()) for x in text.split(",") if x.strip()]
    except ValueError as exc:
        raise click.UsageError(f"bad epsilon list {text!r}: {exc}")


def _parse_multidegree(text: str, n: int) -> tuple[int, ...]:
    try:
        m = tuple(int(x) for x in text.split(","))
    except ValueError as exc:
        raise click.UsageError(f"bad multidegree {text!r}: {exc}")
    if len(m) != n or any(x < 0 for x in m):
        raise click.UsageError(
            f"multidegree must be {n} nonnegative integers, got {text!r}")
    return m


def _pattern_arg(text: str) -> JugglingPattern:
    try:
        return parse_pattern(text)
    except (PatternError, ValueError) as exc:
        raise click.UsageError(f"bad pattern {text!r}: {exc}")


def _multidegrees_up_to(n: int, bound: int):
    """All multidegrees with |m| <= bound in graded-lexicographic order."""
    def compositions(total, parts):
        if parts == 1:
            yield (total,)
            return
        for first in range(total, -1, -1):
            for rest in compositions(total - first, parts - 1):
                yield (first,) + rest

    for total in range(bound + 1):
        yield from compositions(total, n)


def _emit(report: VerificationReport, as_json: bool, out, timings: bool):
    report.include_timings = timings
    text = report.to_json() if as_json else report.to_text()
    if out:
        with open(out, "w") as fh:
            fh.write(text + "\n")
    else:
        click.echo(text)
    sys.exit(0 if report.passed else 1)


@click.group()
def main():
    """Exact computations on global positroid varieties."""


@main.command("patterns")
@click.argument("k", type=int)
@click.argument("n", type=int)
@click.option("--max-n", default=8, show_default=True,
              help="Enumeration bound on n.")
@click.option("--json", "as_json", is_flag=True)
@click.option("--out", type=click.Path(), default=None)
@click.option("--timings", is_flag=True)
def cmd_patterns(k, n, max_n, as_json, out, timings):
    """Enumerate all (k, n) juggling patterns."""
    try:
        pats = enumerate_patterns(k, n, max_n=max_n)
    except PatternError as exc:
        raise click.UsageError(str(exc))
    report = VerificationReport("patterns", {"k": k, "n": n})
    report.add_case("count", True, count=len(pats),
                    patterns=[str(p) for p in pats])
    _emit(report, as_json, out, timings)


@main.command("ideal")
@click.argument("pattern")
@click.option("--epsilon", default=None, help="Specialize epsilon to p/q.")
@click.option("--json", "as_json", is_flag=True)
@click.option("--out", type=click.Path(), default=None)
def cmd_ideal(pattern, epsilon, as_json, out):
    """Print the generators of the global positroid ideal."""
    J = _pattern_arg(pattern)
    ideal = global_positroid_ideal(J)
    if epsilon is not None:
        ideal = ideal.specialize(Fraction(epsilon))
    if as_json:
        payload = {
            "schema": "positroid-report/1",
            "task": "ideal",
            "parameters": {"pattern": str(J), "k": J.k, "n": J.n,
                           "epsilon": epsilon},
            "generators": [poly_to_json(g) for g in ideal.generators],
        }
        text = json.dumps(payload, sort_keys=True, indent=2)
    else:
        text = "\n".join(poly_to_text(g) for g in ideal.generators)
    if out:
        with open(out, "w") as fh:
            fh.write(text + "\n")
    else:
        click.echo(text)


@main.command("hilbert")
@click.argument("pattern")
@click.option("--multidegree", required=True,
              help="Comma list, e.g. 1,1,0.")
@click.option("--epsilon-list", default=DEFAULT_EPSILONS, show_default=True)
@click.option("--json", "as_json", is_flag=True)
@click.option("--out", type=click.Path(), default=None)
@click.option("--timings", is_flag=True)
def cmd_hilbert(pattern, multidegree, epsilon_list, as_json, out, timings):
    """Graded component dimensions of the quotient at each epsilon."""
    J = _pattern_arg(pattern)
    m = _parse_multidegree(multidegree, J.n)
    epsilons = _parse_epsilons(epsilon_list)
    ideal = global_positroid_ideal(J)
    report = VerificationReport(
        "hilbert", {"pattern": str(J), "k": J.k, "n": J.n,
                    "multidegree": list(m),
                    "epsilons": [str(e) for e in epsilons]})
    dims = {}
    for eps in epsilons:
        dims[str(eps)] = graded_component_dim(ideal.specialize(eps), m)
    report.add_case("dims", len(set(dims.values())) == 1, dims=dims)
    _emit(report, as_json, out, timings)


@main.command("flatness")
@click.argument("k", type=int)
@click.argument("n", type=int)
@click.argument("pattern", required=False)
@click.option("--all", "sweep_all", is_flag=True,
              help="Sweep every (k, n) pattern.")
@click.option("--max-degree", default=2, show_default=True,
              help="Bound on |m|.")
@click.option("--epsilon-list", default=DEFAULT_EPSILONS, show_default=True)
@click.option("--json", "as_json", is_flag=True)
@click.option("--out", type=click.Path(), default=None)
@click.option("--timings", is_flag=True)
def cmd_flatness(k, n, pattern, sweep_all, max_degree, epsilon_list,
                 as_json, out, timings):
    """Check graded dimensions are constant in epsilon (and match the
    admissible count for k=1)."""
    epsilons = _parse_epsilons(epsilon_list)
    if sweep_all:
        patterns = enumerate_patterns(k, n)
    elif pattern:
        patterns = [_pattern_arg(pattern)]
    else:
        raise click.UsageError("give a pattern or --all")
    report = VerificationReport(
        "flatness", {"k": k, "n": n, "max_degree": max_degree,
                     "epsilons": [str(e) for e in epsilons],
                     "patterns": [str(p) for p in patterns]})
    for J in patterns:
        if (J.k, J.n) != (k, n):
            raise click.UsageError(f"pattern {J} is not a ({k},{n}) pattern")
        ideal = global_positroid_ideal(J)
        specialized = {eps: ideal.specialize(eps) for eps in epsilons}
        for m in _multidegrees_up_to(n, max_degree):
            key = f"{J}|m={','.join(map(str, m))}"
            try:
                dims = {str(eps): graded_component_dim(spec, m)
                        for eps, spec in specialized.items()}
            except ResourceCapExceeded as exc:
                report.add_case(key, False, error=str(exc))
                continue
            flat = len(set(dims.values())) == 1
            payload = {"dims": dims}
            ok = flat
            if k == 1:
                count = k1basis.count_admissible(J, m)
                payload["count_admissible"] = count
                ok = flat and all(d == count for d in dims.values())
            report.add_case(key, ok, **payload)
    _emit(report, as_json, out, timings)


@main.command("components")
@click.argument("pattern")
@click.option("--json", "as_json", is_flag=True)
@click.option("--out", type=click.Path(), default=None)
@click.option("--timings", is_flag=True)
def cmd_components(pattern, as_json, out, timings):
    """Irreducible components of the special fiber, by anchor sets."""
    J = _pattern_arg(pattern)
    comps = components_of_special_fiber(J)
    report = VerificationReport(
        "components", {"pattern": str(J), "k": J.k, "n": J.n})
    report.add_case("components", True, count=len(comps),
                    anchors=[list(S.elements) for S in comps])
    _emit(report, as_json, out, timings)


@main.command("dim")
@click.argument("pattern")
@click.option("--epsilon", default="1", show_default=True)
@click.option("--json", "as_json", is_flag=True)
@click.option("--out", type=click.Path(), default=None)
@click.option("--timings", is_flag=True)
def cmd_dimension(pattern, epsilon, as_json, out, timings):
    """Projective dimension of the fiber at epsilon (Krull minus n)."""
    J = _pattern_arg(pattern)
    eps = Fraction(epsilon)
    ideal = global_positroid_ideal(J).specialize(eps)
    try:
        krull = ideal.groebner().krull_dimension()
    except ResourceCapExceeded as exc:
        raise click.ClickException(str(exc))
    report = VerificationReport(
        "dim", {"pattern": str(J), "k": J.k, "n": J.n,
                "epsilon": str(eps)})
    report.add_case("dimension", True, krull=krull,
                    projective_dimension=krull - J.n)
    _emit(report, as_json, out, timings)


@main.command("basis")
@click.option("--pattern", required=True)
@click.option("--multidegree", required=True)
@click.option("--epsilon-list", default=DEFAULT_EPSILONS, show_default=True)
@click.option("--json", "as_json", is_flag=True)
@click.option("--out", type=click.Path(), default=None)
@click.option("--timings", is_flag=True)
def cmd_basis(pattern, multidegree, epsilon_list, as_json, out, timings):
    """Admissible monomials, counts, dimension table and basis check."""
    J = _pattern_arg(pattern)
    if J.k != 1:
        raise click.UsageError("the basis machinery requires k = 1")
    m = _parse_multidegree(multidegree, J.n)
    epsilons = _parse_epsilons(epsilon_list)
    result = k1basis.verify_basis(J, m, epsilons=tuple(epsilons))
    mons = k1basis.enumerate_admissible(J, m)
    report = VerificationReport(
        "basis", {"pattern": str(J), "k": J.k, "n": J.n,
                  "multidegree": list(m),
                  "epsilons": [str(e) for e in epsilons]})
    report.add_case("basis", result["pass"],
                    admissible=[str(mo) for mo in mons],
                    count=result["count_admissible"],
                    binomial=result["binomial_count"],
                    dims=result["dims"],
                    evaluation_rank=result["evaluation_rank"])
    _emit(report, as_json, out, timings)


@main.command("membership")
@click.option("--point", "point_file", required=True,
              type=click.Path(exists=True))
@click.option("--pattern", required=True)
@click.option("--epsilon", default=None,
              help="Override the epsilon stored in the point file.")
@click.option("--json", "as_json", is_flag=True)
@click.option("--out", type=click.Path(), default=None)
@click.option("--timings", is_flag=True)
def cmd_membership(point_file, pattern, epsilon, as_json, out, timings):
    """Check a fiber point (JSON file) for positroid-fiber membership."""
    J = _pattern_arg(pattern)
    try:
        with open(point_file) as fh:
            point = FiberPoint.from_json(json.load(fh))
    except (ValueError, KeyError) as exc:
        raise click.UsageError(f"bad point file: {exc}")
    if epsilon is not None:
        point = FiberPoint(Fraction(epsilon), point.spaces)
    member = in_positroid_fiber(point, J)
    report = VerificationReport(
        "membership", {"pattern": str(J), "k": J.k, "n": J.n,
                       "epsilon": str(point.epsilon)})
    report.add_case("membership", member, member=member)
    _emit(report, as_json, out, timings)


if __name__ == "__main__":
    main()
