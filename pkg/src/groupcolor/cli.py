"""Command-line front end.

Subcommands: cycles, bonds, induced, poly, tau, count, verify. Inputs are
the text formats documented in the parsing helpers; output is plain text,
or JSON with --json. Exit codes: 0 success, 1 parse error, 2 budget
exceeded, 3 verification failure.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass

from . import polynomial
from .assigning import Assigning, induced_assigning, parse_assigning, zero_assigning
from .cycles import LinearOrder, enumerate_bonds, enumerate_cycles
from .errors import BudgetError, InputError
from .group import (
    DEFAULT_BUDGET,
    AbelianGroup,
    count_colorings,
    count_tensions,
    parse_edge_function,
)
from .multigraph import MultiGraph, parse_graph
from .verify import verify_instance

METHODS = ("subgraph", "delcon", "broken", "bond", "decompose")


@dataclass
class Job:
    command: str
    graph: str
    group: str | None = None
    f: str | None = None
    assigning: str | None = None
    method: str = "subgraph"
    order: str | None = None
    eval_at: int | None = None
    budget: int | None = None
    json_out: bool = False


class _Parser(argparse.ArgumentParser):
    """argparse exits 2 on bad arguments; this artifact reserves 2 for
    budget overruns, so command-line problems exit 1 like other parse
    errors."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _build_parser() -> _Parser:
    parser = _Parser(prog="groupcolor",
                     description="Chromatic-type polynomials of multigraphs "
                                 "with cycles assigned 0/1 values.")
    sub = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")

    def add(name: str, help_text: str, **needs) -> argparse.ArgumentParser:
        p = sub.add_parser(name, help=help_text)
        p.add_argument("--graph", required=True, metavar="PATH",
                       help="graph file ('vertices N' and 'edge ID TAIL HEAD' lines)")
        if needs.get("group"):
            p.add_argument("--group", required=needs["group"] == "required",
                           metavar="SPEC", help="finite abelian group, e.g. Z3 or Z2x2")
        if needs.get("f"):
            p.add_argument("--f", required=needs["f"] == "required", metavar="PATH",
                           help="edge function file ('f ID R1 R2 ...' lines)")
        if needs.get("assigning"):
            p.add_argument("--assigning", metavar="PATH",
                           help="cycle assigning file ('cycle IDS... = 0|1' lines)")
        if needs.get("method"):
            p.add_argument("--method", choices=METHODS, default="subgraph",
                           help="evaluation strategy (default: subgraph)")
        if needs.get("order"):
            p.add_argument("--order", metavar="LIST",
                           help="linear edge order as ids, e.g. e5,e2,e1 "
                                "(default: increasing id)")
        if needs.get("eval"):
            p.add_argument("--eval", dest="eval_at", type=int, metavar="K",
                           help="also evaluate the polynomial at the integer K")
        if needs.get("budget"):
            p.add_argument("--budget", type=int, metavar="N", help=needs["budget"])
        p.add_argument("--json", dest="json_out", action="store_true",
                       help="emit a JSON document instead of plain text")
        return p

    add("cycles", "list the cycles of the graph with their traversal signs")
    add("bonds", "list the minimal edge cuts of the graph")
    add("induced", "compute the cycle assigning induced by an edge function",
        group="required", f="required")
    add("poly", "compute the polynomial counting proper group colorings",
        group="optional", f="optional", assigning=True, method=True, order=True,
        eval=True, budget="cap on |E| for subset-expansion methods")
    add("tau", "compute the tension-counting polynomial",
        group="optional", f="optional", assigning=True, method=True, order=True,
        eval=True, budget="cap on |E| for subset-expansion methods")
    add("count", "count colorings and tensions by exhaustion",
        group="required", f="required",
        budget="cap on |A|^|V| enumeration states (default 10^8)")
    add("verify", "run the cross-method and oracle checks on one instance",
        group="required", f="required", order=True,
        budget="cap on |A|^|V| enumeration states (default 10^8)")
    return parser


def _read(path: str) -> str:
    try:
        with open(path, encoding="utf-8") as handle:
            return handle.read()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}") from exc


def _parse_order(spec: str, g: MultiGraph) -> LinearOrder:
    ids = []
    for token in spec.split(","):
        token = token.strip()
        if token.startswith(("e", "E")):
            token = token[1:]
        try:
            ids.append(int(token))
        except ValueError:
            raise InputError(f"bad edge id {token!r} in --order") from None
    order = LinearOrder(tuple(ids))
    order.check_covers(g)
    return order


def _load_assigning(job: Job, g: MultiGraph) -> Assigning:
    if job.assigning is not None and job.f is not None:
        raise InputError("--assigning and --f are mutually exclusive")
    if job.assigning is not None:
        return parse_assigning(_read(job.assigning), g)
    if job.f is not None:
        if job.group is None:
            raise InputError("--f requires --group")
        group = AbelianGroup.parse(job.group)
        f = parse_edge_function(_read(job.f), group, g)
        return induced_assigning(g, group, f)
    return zero_assigning(g)


def _emit(job: Job, document: dict, text_lines: list[str]) -> None:
    if job.json_out:
        print(json.dumps(document, indent=2))
    else:
        for line in text_lines:
            print(line)


def _eta_string(signs) -> str:
    return " ".join(f"{s:+d}" for s in signs)


def _do_cycles(job: Job, g: MultiGraph) -> int:
    cycles = enumerate_cycles(g)
    document = {"count": len(cycles), "cycles": [
        {"edges": list(c.edges), "eta": list(c.eta)} for c in cycles
    ]}
    lines = [f"cycle {' '.join(map(str, c.edges))}  eta {_eta_string(c.eta)}"
             for c in cycles]
    _emit(job, document, lines)
    return 0


def _do_bonds(job: Job, g: MultiGraph) -> int:
    bonds = enumerate_bonds(g)
    document = {"count": len(bonds), "bonds": [list(b) for b in bonds]}
    _emit(job, document, [f"bond {' '.join(map(str, b))}" for b in bonds])
    return 0


def _do_induced(job: Job, g: MultiGraph) -> int:
    group = AbelianGroup.parse(job.group)
    f = parse_edge_function(_read(job.f), group, g)
    a = induced_assigning(g, group, f)
    document = {"assigning": [
        {"cycle": list(key), "value": val} for key, val in a.items()
    ]}
    lines = [f"cycle {' '.join(map(str, key))} = {val}" for key, val in a.items()]
    _emit(job, document, lines)
    return 0


def _polynomial_for(job: Job, g: MultiGraph, tension: bool):
    a = _load_assigning(job, g)
    order = _parse_order(job.order, g) if job.order else None
    max_edges = job.budget if job.budget is not None else polynomial.DEFAULT_MAX_EDGES
    c = g.num_components
    if job.method == "subgraph":
        if tension:
            return polynomial.tau_subgraph(g, a, max_edges)
        return polynomial.poly_subgraph(g, a, max_edges)
    if job.method == "delcon":
        tau = polynomial.tau_delcon(g, a)
        return tau if tension else tau.shifted(c)
    if job.method == "broken":
        p = polynomial.poly_broken(g, a, order)
        return p.divided_by_power(c) if tension else p
    if job.method == "bond":
        tau = polynomial.tau_bond(g, a, order)
        return tau if tension else tau.shifted(c)
    p = polynomial.decompose(g, a, max_edges)
    return p.divided_by_power(c) if tension else p


def _do_poly(job: Job, g: MultiGraph, tension: bool) -> int:
    p = _polynomial_for(job, g, tension)
    name = "tau" if tension else "P"
    document = {"method": job.method, "polynomial": p.to_json_dict()}
    lines = [f"{name} = {p}"]
    if job.eval_at is not None:
        value = p.evaluate(job.eval_at)
        document["evaluation"] = {"point": job.eval_at, "value": str(value)}
        lines.append(f"{name}({job.eval_at}) = {value}")
    _emit(job, document, lines)
    return 0


def _do_count(job: Job, g: MultiGraph) -> int:
    group = AbelianGroup.parse(job.group)
    f = parse_edge_function(_read(job.f), group, g)
    budget = job.budget if job.budget is not None else DEFAULT_BUDGET
    colorings = count_colorings(g, group, f, budget=budget)
    tensions = count_tensions(g, group, f, budget=budget)
    _emit(job, {"colorings": str(colorings), "tensions": str(tensions)},
          [f"colorings {colorings}", f"tensions {tensions}"])
    return 0


def _do_verify(job: Job, g: MultiGraph) -> int:
    group = AbelianGroup.parse(job.group)
    f = parse_edge_function(_read(job.f), group, g)
    order = _parse_order(job.order, g) if job.order else None
    budget = job.budget if job.budget is not None else DEFAULT_BUDGET
    report = verify_instance(g, group, f, order=order, budget=budget)
    document = {
        "passed": report.passed,
        "colorings": str(report.colorings),
        "tensions": str(report.tensions),
        "checks": [{"name": c.name, "passed": c.passed, "detail": c.detail}
                   for c in report.checks],
    }
    lines = [f"{'PASS' if c.passed else 'FAIL'} {c.name}: {c.detail}"
             for c in report.checks]
    failed = sum(1 for c in report.checks if not c.passed)
    if failed:
        lines.append(f"FAILED ({failed} of {len(report.checks)} checks)")
    else:
        lines.append(f"ok ({len(report.checks)} checks)")
    _emit(job, document, lines)
    return 0 if report.passed else 3


def run(job: Job) -> int:
    """Execute one job; returns the process exit code."""
    if job.method not in METHODS:
        raise InputError(f"unknown method {job.method!r}")
    g = parse_graph(_read(job.graph))
    if job.command == "cycles":
        return _do_cycles(job, g)
    if job.command == "bonds":
        return _do_bonds(job, g)
    if job.command == "induced":
        return _do_induced(job, g)
    if job.command == "poly":
        return _do_poly(job, g, tension=False)
    if job.command == "tau":
        return _do_poly(job, g, tension=True)
    if job.command == "count":
        return _do_count(job, g)
    if job.command == "verify":
        return _do_verify(job, g)
    raise InputError(f"unknown command {job.command!r}")


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    namespace = parser.parse_args(argv)
    fields = {name: getattr(namespace, name)
              for name in Job.__dataclass_fields__ if hasattr(namespace, name)}
    job = Job(**fields)
    try:
        return run(job)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except BudgetError as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return 2


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
