"""Cross-method and oracle checks for a single (graph, group, f) instance.

Used by the CLI verify command. Each check is one instance-checkable
invariant; pairwise properties over families of assignings (coefficient
monotonicity, group-structure independence) live in the test suite.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from .assigning import Assigning, induced_assigning, zero_assigning
from .cycles import LinearOrder, broken_cycles, enumerate_cycles
from .group import (
    DEFAULT_BUDGET,
    AbelianGroup,
    EdgeFunction,
    coboundary,
    count_colorings,
    count_tensions,
    cycle_sum,
)
from .multigraph import MultiGraph
from .polynomial import (
    IntPolynomial,
    decompose,
    poly_broken,
    poly_subgraph,
    tau_bond,
    tau_delcon,
    tau_subgraph,
)

_RNG_SEED = 2310


@dataclass
class CheckResult:
    name: str
    passed: bool
    detail: str = ""


@dataclass
class VerifyReport:
    checks: list[CheckResult] = field(default_factory=list)
    colorings: int = 0
    tensions: int = 0

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)


def chromatic_polynomial(g: MultiGraph) -> IntPolynomial:
    """Textbook chromatic polynomial by deletion-contraction.

    Zero when the graph has a loop; k^{|V|} when it has no edges;
    otherwise P(G-e) - P(G/e) on the smallest edge.
    """
    memo: dict[MultiGraph, IntPolynomial] = {}

    def recurse(h: MultiGraph) -> IntPolynomial:
        hit = memo.get(h)
        if hit is not None:
            return hit
        if any(e.tail == e.head for e in h.edges):
            result = IntPolynomial.zero()
        elif not h.edges:
            result = IntPolynomial.monomial(h.num_vertices)
        else:
            eid = h.edges[0].eid
            result = recurse(h.delete(eid)) - recurse(h.contract(eid))
        memo[h] = result
        return result

    return recurse(g)


def _direct_unbroken_count(g: MultiGraph, a: Assigning,
                           order: LinearOrder | None) -> int:
    """Subsets that are a-compatible and contain no broken compatible cycle."""
    eids = sorted(g.edge_ids())
    pos = {eid: i for i, eid in enumerate(eids)}

    def mask_of(key) -> int:
        mask = 0
        for eid in key:
            mask |= 1 << pos[eid]
        return mask

    ones = [mask_of(key) for key, val in a.items() if val == 1]
    broken = [mask_of(key) for key in broken_cycles(g, a, order)]
    count = 0
    for mask in range(1 << len(eids)):
        if any(mask & b == b for b in ones):
            continue
        if any(mask & b == b for b in broken):
            continue
        count += 1
    return count


def verify_instance(g: MultiGraph, group: AbelianGroup, f: EdgeFunction,
                    order: LinearOrder | None = None,
                    budget: int = DEFAULT_BUDGET) -> VerifyReport:
    """Run every instance-checkable invariant; budget errors propagate."""
    report = VerifyReport()
    out = report.checks.append

    a = induced_assigning(g, group, f)
    c0 = g.num_components
    p_sub = poly_subgraph(g, a)
    t_sub = tau_subgraph(g, a)
    t_dc = tau_delcon(g, a)
    p_br = poly_broken(g, a, order)
    t_bd = tau_bond(g, a, order)
    p_dec = decompose(g, a)

    agree = p_sub == t_dc.shifted(c0) == p_br == t_bd.shifted(c0) == p_dec
    out(CheckResult(
        "four_method_agreement", agree,
        f"P = {p_sub}" if agree else
        f"subgraph {p_sub}; delcon {t_dc.shifted(c0)}; broken {p_br}; "
        f"bond {t_bd.shifted(c0)}; decompose {p_dec}",
    ))

    colorings = count_colorings(g, group, f, budget=budget)
    tensions = count_tensions(g, group, f, budget=budget)
    report.colorings = colorings
    report.tensions = tensions
    value = p_sub.evaluate(group.order)
    out(CheckResult(
        "coloring_count", value == colorings,
        f"P({group.order}) = {value}, exhaustive = {colorings}",
    ))
    t_value = t_sub.evaluate(group.order)
    out(CheckResult(
        "tension_count", t_value == tensions,
        f"tau({group.order}) = {t_value}, exhaustive = {tensions}",
    ))
    out(CheckResult(
        "colorings_per_tension",
        colorings == group.order**c0 * tensions,
        f"{colorings} vs {group.order}^{c0} * {tensions}",
    ))

    loops = [eid for eid in g.edge_ids() if g.is_loop(eid)]
    zero_loop = any(a.loop_value(eid) == 0 for eid in loops)
    if zero_loop:
        out(CheckResult(
            "tau_degree_law", t_sub.is_zero(),
            f"a loop is valued 0, tau = {t_sub}",
        ))
    else:
        want = g.num_vertices - c0
        out(CheckResult(
            "tau_degree_law", t_sub.degree == want,
            f"degree {t_sub.degree}, expected {want}",
        ))

    rng = random.Random(_RNG_SEED)
    eids = list(g.edge_ids())
    stable = True
    for trial in range(3):
        seq = list(eids)
        if trial == 0:
            seq.reverse()
        else:
            rng.shuffle(seq)
        if poly_broken(g, a, LinearOrder(tuple(seq))) != p_br:
            stable = False
            break
    out(CheckResult("order_independence", stable,
                    "broken-cycle expansion under reversed and shuffled orders"))

    n = g.num_vertices
    if zero_loop:
        out(CheckResult("coefficient_laws", p_sub.is_zero(),
                        f"a loop is valued 0, P = {p_sub}"))
    else:
        r = g.rank()
        ws = [(-1) ** i * p_sub.coefficient(n - i) for i in range(r + 1)]
        ok = ws[0] == 1 and all(w > 0 for w in ws)
        ok = ok and all(
            deg >= n - r for deg in p_sub.coefficients()
        )
        out(CheckResult("coefficient_laws", ok,
                        f"unsigned coefficients {ws}"))

    direct = _direct_unbroken_count(g, a, order)
    at_minus_one = (-1) ** n * p_sub.evaluate(-1)
    out(CheckResult(
        "evaluation_at_minus_one", at_minus_one == direct,
        f"(-1)^{n} P(-1) = {at_minus_one}, direct count = {direct}",
    ))

    cycles = enumerate_cycles(g)
    ok = True
    for _ in range(3):
        coloring = {v: rng.choice(group.elements()) for v in range(n)}
        t = coboundary(g, group, coloring)
        if any(cycle_sum(g, t, c) != group.zero() for c in cycles):
            ok = False
            break
    out(CheckResult("coboundary_cycle_sums", ok,
                    "random coboundaries sum to zero around every cycle"))

    if loops:
        out(CheckResult("chromatic_specialization", True,
                        "skipped: graph has loops"))
    else:
        classic = chromatic_polynomial(g)
        ours = poly_subgraph(g, zero_assigning(g))
        out(CheckResult(
            "chromatic_specialization", ours == classic,
            f"all-zero assigning gives {ours}, textbook recursion gives {classic}",
        ))

    return report
