"""Zero-one assignings on the cycles of a fixed graph.

An assigning maps every cycle to 0 or 1, keyed by the cycle's sorted
edge-id tuple. The ones induced by an edge function f mark exactly the
cycles whose signed f-sum is nonzero; those are the assignings the
expansion theorems are about.
"""

from __future__ import annotations

import itertools
from typing import Iterable, Mapping

from .cycles import Cycle, enumerate_cycles
from .errors import BudgetError, ContractError, InputError
from .group import AbelianGroup, EdgeFunction, cycle_sum
from .multigraph import MultiGraph

EdgeSet = tuple[int, ...]

DEFAULT_SEARCH_BUDGET = 10**7


class Assigning:
    """Map from cycle edge-sets to {0,1}.

    known_admissible records that the instance was built along a path that
    guarantees some (A, f) induces it; the flag is advisory metadata and
    ignored by equality and hashing.
    """

    __slots__ = ("_values", "_items", "known_admissible")

    def __init__(self, values, known_admissible: bool = False) -> None:
        items = values.items() if isinstance(values, Mapping) else values
        norm: dict[EdgeSet, int] = {}
        for key, val in items:
            key = tuple(sorted(int(e) for e in key))
            if val not in (0, 1):
                raise InputError(f"assigning value for {key} must be 0 or 1, got {val!r}")
            if norm.setdefault(key, int(val)) != val:
                raise InputError(f"conflicting values for cycle {key}")
        self._values = norm
        self._items = tuple(sorted(norm.items()))
        self.known_admissible = bool(known_admissible)

    def value(self, edges: Iterable[int]) -> int:
        key = tuple(sorted(int(e) for e in edges))
        try:
            return self._values[key]
        except KeyError:
            raise InputError(f"assigning has no value for cycle {key}") from None

    def loop_value(self, eid: int) -> int:
        return self.value((eid,))

    def keys(self) -> frozenset[EdgeSet]:
        return frozenset(self._values)

    def items(self) -> tuple[tuple[EdgeSet, int], ...]:
        return self._items

    def __contains__(self, key) -> bool:
        return tuple(sorted(int(e) for e in key)) in self._values

    def __len__(self) -> int:
        return len(self._values)

    def __eq__(self, other) -> bool:
        return isinstance(other, Assigning) and self._items == other._items

    def __hash__(self) -> int:
        return hash(self._items)

    def __repr__(self) -> str:
        body = ", ".join(f"{key}: {val}" for key, val in self._items)
        return f"Assigning({{{body}}})"


def check_total(g: MultiGraph, a: Assigning) -> None:
    """Raise unless the assigning covers exactly the cycles of g."""
    expected = {c.edges for c in enumerate_cycles(g)}
    got = set(a.keys())
    if got != expected:
        missing = sorted(expected - got)
        extra = sorted(got - expected)
        parts = []
        if missing:
            parts.append(f"missing cycles {missing}")
        if extra:
            parts.append(f"unknown keys {extra}")
        raise InputError("assigning does not match the graph: " + "; ".join(parts))


def zero_assigning(g: MultiGraph) -> Assigning:
    """The all-zero assigning (always induced, by f = 0)."""
    return Assigning({c.edges: 0 for c in enumerate_cycles(g)}, known_admissible=True)


def induced_assigning(g: MultiGraph, group: AbelianGroup, f: EdgeFunction) -> Assigning:
    """Value 0 on cycles whose signed f-sum vanishes, 1 elsewhere."""
    f.check_total(g)
    zero = group.zero()
    values = {
        c.edges: 0 if cycle_sum(g, f, c) == zero else 1 for c in enumerate_cycles(g)
    }
    return Assigning(values, known_admissible=True)


def from_values(g: MultiGraph, values, known_admissible: bool = False) -> Assigning:
    """Build and validate an assigning against the graph's cycle set."""
    a = Assigning(values, known_admissible=known_admissible)
    check_total(g, a)
    return a


def restrict_delete(g: MultiGraph, a: Assigning, eid: int) -> Assigning:
    """The assigning on g minus the edge: cycles avoiding it keep their value."""
    g.edge(eid)
    values = {key: val for key, val in a.items() if eid not in key}
    return Assigning(values, known_admissible=a.known_admissible)


def restrict_contract(g: MultiGraph, a: Assigning, eid: int) -> Assigning:
    """The assigning on g.contract(eid).

    A cycle of the contraction is either already a cycle of g (then it
    keeps its value) or arises from a cycle of g through the contracted
    edge (then it inherits that value). Circuit minimality rules out both
    cases holding at once.
    """
    if g.is_loop(eid):
        raise ContractError(f"edge {eid} is a loop and cannot be contracted")
    contracted = g.contract(eid)
    values = {}
    for c in enumerate_cycles(contracted):
        if c.edges in a:
            values[c.edges] = a.value(c.edges)
        else:
            values[c.edges] = a.value(c.edges + (eid,))
    return Assigning(values, known_admissible=a.known_admissible)


def is_compatible(g: MultiGraph, a: Assigning, edge_set: Iterable[int]) -> bool:
    """True iff no cycle valued 1 lies inside the edge set."""
    chosen = {int(e) for e in edge_set}
    for key, val in a.items():
        if val == 1 and all(e in chosen for e in key):
            return False
    return True


def delta(g: MultiGraph, a: Assigning, edge_set: Iterable[int]) -> int:
    """Indicator of is_compatible (the expansion weight)."""
    return 1 if is_compatible(g, a, edge_set) else 0


def _factor_tuples(total: int, smallest: int = 2):
    # nondecreasing factor tuples with the given product, factors >= 2
    if total == 1:
        yield ()
        return
    d = smallest
    while d * d <= total:
        if total % d == 0:
            for rest in _factor_tuples(total // d, d):
                yield (d,) + rest
        d += 1
    if total >= smallest:
        yield (total,)


def check_admissible(g: MultiGraph, a: Assigning, max_order: int,
                     budget: int = DEFAULT_SEARCH_BUDGET):
    """Search for a group of order <= max_order and an f inducing the assigning.

    Returns a (group, edge function) witness or None. None means no
    witness among the products of cyclic groups searched, not a proof of
    inadmissibility. Groups are tried in (order, factor tuple) order, and
    isomorphic products may be revisited. The trivial group is skipped.
    """
    check_total(g, a)
    cycles = enumerate_cycles(g)
    eids = g.edge_ids()
    pos = {eid: i for i, eid in enumerate(eids)}
    target = tuple(a.value(c.edges) for c in cycles)
    plans = [
        [(pos[eid], sign) for eid, sign in zip(c.edges, c.eta)] for c in cycles
    ]
    m = len(eids)
    for order in range(2, max_order + 1):
        for moduli in sorted(_factor_tuples(order)):
            group = AbelianGroup(moduli)
            if group.order**m > budget:
                raise BudgetError(
                    f"{group.order}^{m} candidate functions exceed the budget {budget}"
                )
            mods = group.moduli
            zero = group.zero()
            for combo in itertools.product(group.elements(), repeat=m):
                ok = True
                for plan, want in zip(plans, target):
                    acc = zero
                    for i, sign in plan:
                        val = combo[i]
                        if sign > 0:
                            acc = tuple((x + y) % mm for x, y, mm in zip(acc, val, mods))
                        else:
                            acc = tuple((x - y) % mm for x, y, mm in zip(acc, val, mods))
                    if (0 if acc == zero else 1) != want:
                        ok = False
                        break
                if ok:
                    f = EdgeFunction(group, dict(zip(eids, combo)))
                    return group, f
    return None


# -- text format -----------------------------------------------------------


def parse_assigning(text: str, g: MultiGraph) -> Assigning:
    """Parse lines ``cycle <edge ids...> = <0|1>``; must cover every cycle."""
    values = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if parts[0] != "cycle" or "=" not in parts:
            raise InputError(f"line {lineno}: expected 'cycle <edge ids...> = <0|1>'")
        eq = parts.index("=")
        if eq != len(parts) - 2:
            raise InputError(f"line {lineno}: expected a single value after '='")
        try:
            key = tuple(sorted(int(p) for p in parts[1:eq]))
            val = int(parts[-1])
        except ValueError:
            raise InputError(f"line {lineno}: expected integers") from None
        if val not in (0, 1):
            raise InputError(f"line {lineno}: value must be 0 or 1")
        if key in values:
            raise InputError(f"line {lineno}: cycle {key} given twice")
        values[key] = val
    return from_values(g, values)


def format_assigning(a: Assigning) -> str:
    lines = [
        "cycle {} = {}".format(" ".join(str(e) for e in key), val)
        for key, val in a.items()
    ]
    return "\n".join(lines) + ("\n" if lines else "")
