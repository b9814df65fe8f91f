"""Finite abelian groups, edge functions, and brute-force counting oracles.

Groups are explicit products of cyclic groups; every finite abelian group
is isomorphic to one, and the counts computed here depend only on the
order and the induced assigning. Elements are residue tuples.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from functools import cached_property
from typing import TYPE_CHECKING, Iterable, Mapping

from . import kernels
from .errors import BudgetError, ContractError, InputError
from .multigraph import MultiGraph

if TYPE_CHECKING:
    from .cycles import Cycle

Element = tuple[int, ...]

DEFAULT_BUDGET = 10**8

_SPEC_RE = re.compile(r"^[Zz]?\d+$")


@dataclass(frozen=True)
class AbelianGroup:
    """Finite abelian group Z_m1 x ... x Z_mr with residue-tuple elements.

    Parameters
    ----------
    moduli:
        Nonempty sequence of integers >= 1.
    """

    moduli: tuple[int, ...]

    def __post_init__(self) -> None:
        mods = tuple(int(m) for m in self.moduli)
        object.__setattr__(self, "moduli", mods)
        if not mods:
            raise InputError("group needs at least one cyclic factor")
        if any(m < 1 for m in mods):
            raise InputError("moduli must be >= 1")

    @property
    def rank(self) -> int:
        return len(self.moduli)

    @property
    def order(self) -> int:
        n = 1
        for m in self.moduli:
            n *= m
        return n

    def zero(self) -> Element:
        return (0,) * self.rank

    def element(self, residues: Iterable[int]) -> Element:
        """Canonical element from any integer tuple, reduced modulo."""
        residues = tuple(int(r) for r in residues)
        if len(residues) != self.rank:
            raise InputError(
                f"element has {len(residues)} residues, group has rank {self.rank}"
            )
        return tuple(r % m for r, m in zip(residues, self.moduli))

    def _check(self, a: Element) -> None:
        if len(a) != self.rank or any(not 0 <= r < m for r, m in zip(a, self.moduli)):
            raise InputError(f"{a!r} is not an element of {self.spec_string()}")

    def add(self, a: Element, b: Element) -> Element:
        self._check(a)
        self._check(b)
        return tuple((x + y) % m for x, y, m in zip(a, b, self.moduli))

    def neg(self, a: Element) -> Element:
        self._check(a)
        return tuple((-x) % m for x, m in zip(a, self.moduli))

    def sub(self, a: Element, b: Element) -> Element:
        return self.add(a, self.neg(b))

    @cached_property
    def _elements(self) -> tuple[Element, ...]:
        return tuple(itertools.product(*(range(m) for m in self.moduli)))

    def elements(self) -> tuple[Element, ...]:
        """All elements in odometer order (last coordinate fastest)."""
        return self._elements

    @classmethod
    def parse(cls, spec: str) -> AbelianGroup:
        """Parse a spec string like ``Z6`` or ``Z2x2`` (``Z2xZ2`` also works)."""
        parts = spec.strip().split("x")
        if not parts or not parts[0] or not parts[0][0] in "Zz":
            raise InputError(f"bad group spec {spec!r}; expected e.g. Z3 or Z2x2")
        mods = []
        for part in parts:
            part = part.strip()
            if not _SPEC_RE.match(part):
                raise InputError(f"bad group spec {spec!r}; factor {part!r}")
            mods.append(int(part.lstrip("Zz")))
        return cls(tuple(mods))

    def spec_string(self) -> str:
        return "Z" + "x".join(str(m) for m in self.moduli)


@dataclass(frozen=True)
class EdgeFunction:
    """Total map from edge ids to elements of one group (the forbidden
    coboundary values)."""

    group: AbelianGroup
    values: tuple[tuple[int, Element], ...]

    def __init__(self, group: AbelianGroup, values) -> None:
        object.__setattr__(self, "group", group)
        items = values.items() if isinstance(values, Mapping) else values
        norm = {}
        for eid, residues in items:
            eid = int(eid)
            if eid in norm:
                raise InputError(f"edge id {eid} given twice")
            norm[eid] = group.element(residues)
        object.__setattr__(self, "values", tuple(sorted(norm.items())))

    @cached_property
    def _map(self) -> dict[int, Element]:
        return dict(self.values)

    def value(self, eid: int) -> Element:
        try:
            return self._map[eid]
        except KeyError:
            raise InputError(f"edge function has no value for edge {eid}") from None

    def edge_ids(self) -> tuple[int, ...]:
        return tuple(eid for eid, _ in self.values)

    def check_total(self, g: MultiGraph) -> None:
        missing = [eid for eid in g.edge_ids() if eid not in self._map]
        if missing:
            raise InputError(f"edge function misses edges {missing}")

    @classmethod
    def zero(cls, group: AbelianGroup, g: MultiGraph) -> EdgeFunction:
        return cls(group, {eid: group.zero() for eid in g.edge_ids()})


def coboundary(g: MultiGraph, group: AbelianGroup, coloring: Mapping[int, Element]) -> EdgeFunction:
    """Edge function e -> c(head) - c(tail); loops get 0."""
    values = {}
    for e in g.edges:
        if e.tail == e.head:
            values[e.eid] = group.zero()
        else:
            values[e.eid] = group.sub(coloring[e.head], coloring[e.tail])
    return EdgeFunction(group, values)


def _counting_instance(g: MultiGraph, group: AbelianGroup, f: EdgeFunction, budget: int):
    if f.group != group:
        raise InputError("edge function belongs to a different group")
    f.check_total(g)
    if group.order**g.num_vertices > budget:
        raise BudgetError(
            f"{group.order}^{g.num_vertices} colorings exceed the budget {budget}"
        )
    return [(e.tail, e.head, f.value(e.eid)) for e in g.edges]


def count_colorings(g: MultiGraph, group: AbelianGroup, f: EdgeFunction,
                    budget: int = DEFAULT_BUDGET) -> int:
    """Number of colorings c with c(head) - c(tail) != f(e) on every edge.

    A loop has coboundary 0, so a loop with f = 0 forces the count to 0.
    Exhaustive; requires |A|^|V| within the budget.
    """
    edges = _counting_instance(g, group, f, budget)
    return kernels.coloring_count(g.num_vertices, group.moduli, edges)


def count_tensions(g: MultiGraph, group: AbelianGroup, f: EdgeFunction,
                   budget: int = DEFAULT_BUDGET) -> int:
    """Number of distinct coboundaries that avoid f on every edge.

    The coboundary image is deduplicated by the edge-value vector, taken
    in edge-id order.
    """
    edges = _counting_instance(g, group, f, budget)
    return kernels.tension_count(g.num_vertices, group.moduli, edges)


def cycle_sum(g: MultiGraph, f: EdgeFunction, cycle: Cycle) -> Element:
    """Sum of eta(e) * f(e) over the cycle's edges."""
    group = f.group
    total = group.zero()
    for eid, sign in zip(cycle.edges, cycle.eta):
        g.edge(eid)
        val = f.value(eid)
        total = group.add(total, val if sign > 0 else group.neg(val))
    return total


def contract_edge_function(g: MultiGraph, f: EdgeFunction, eid: int) -> EdgeFunction:
    """The edge function on g.contract(eid) matching the coloring bijection.

    Colorings of the contraction correspond to colorings of g whose
    coboundary on the contracted link equals f there; the surviving edges
    at the vanishing endpoint must absorb that offset, so this is not the
    plain restriction of f.
    """
    e = g.edge(eid)
    if e.tail == e.head:
        raise ContractError(f"edge {eid} is a loop; contraction needs a link")
    group = f.group
    f.check_total(g)
    gone = max(e.tail, e.head)
    offset = f.value(eid) if e.head == gone else group.neg(f.value(eid))
    values = {}
    for x in g.edges:
        if x.eid == eid:
            continue
        val = f.value(x.eid)
        if x.head == gone:
            val = group.sub(val, offset)
        if x.tail == gone:
            val = group.add(val, offset)
        values[x.eid] = val
    return EdgeFunction(group, values)


# -- text format -----------------------------------------------------------


def parse_edge_function(text: str, group: AbelianGroup,
                        g: MultiGraph | None = None) -> EdgeFunction:
    """Parse lines ``f <edge-id> <r1> <r2> ...``; '#' starts a comment.

    Residues are reduced modulo the corresponding modulus. When a graph
    is given the function must cover exactly its edges.
    """
    values = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if parts[0] != "f":
            raise InputError(f"line {lineno}: expected 'f <edge-id> <residues...>'")
        if len(parts) != 2 + group.rank:
            raise InputError(
                f"line {lineno}: expected {group.rank} residues for {group.spec_string()}"
            )
        try:
            eid = int(parts[1])
            residues = [int(p) for p in parts[2:]]
        except ValueError:
            raise InputError(f"line {lineno}: expected integers") from None
        if eid in values:
            raise InputError(f"line {lineno}: edge {eid} given twice")
        values[eid] = residues
    f = EdgeFunction(group, values)
    if g is not None:
        f.check_total(g)
        extra = [eid for eid in f.edge_ids() if not g.has_edge(eid)]
        if extra:
            raise InputError(f"edge function mentions unknown edges {extra}")
    return f


def format_edge_function(f: EdgeFunction) -> str:
    lines = [
        "f {} {}".format(eid, " ".join(str(r) for r in val))
        for eid, val in f.values
    ]
    return "\n".join(lines) + "\n"
