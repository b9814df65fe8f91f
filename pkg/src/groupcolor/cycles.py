"""Cycles, bonds, signed incidences, and the subset families built on them.

A cycle is a connected 2-regular subgraph: a loop alone (its vertex gets
degree 2), an unordered pair of parallel edges, or a longer simple circuit.
Cycles are identified by their sorted edge-id tuples throughout the
package. Enumeration is intended for desk scale (around |E| <= 16); the
subset expansions elsewhere enforce their own budgets.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import TYPE_CHECKING, Iterable, Iterator

from .errors import InputError
from .multigraph import MultiGraph

if TYPE_CHECKING:
    from .assigning import Assigning

EdgeSet = tuple[int, ...]  # sorted edge ids


@dataclass(frozen=True)
class Cycle:
    """A cycle recorded by its sorted edge ids and traversal signs.

    ``eta[i]`` is +1 when the reference orientation of ``edges[i]`` agrees
    with the traversal direction and -1 otherwise. Of the two opposite
    traversals the one giving +1 on the smallest edge id is kept, so equal
    cycles compare equal. A loop has eta +1.
    """

    edges: EdgeSet
    eta: tuple[int, ...]

    def __post_init__(self) -> None:
        if tuple(sorted(self.edges)) != self.edges:
            raise InputError("cycle edges must be sorted")
        if len(self.eta) != len(self.edges) or any(s not in (-1, 1) for s in self.eta):
            raise InputError("eta must assign +1 or -1 to each cycle edge")

    def eta_of(self, eid: int) -> int:
        try:
            return self.eta[self.edges.index(eid)]
        except ValueError:
            return 0

    def __len__(self) -> int:
        return len(self.edges)


@dataclass(frozen=True)
class LinearOrder:
    """A linear order on edge ids, smallest first."""

    sequence: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "sequence", tuple(int(e) for e in self.sequence))
        if len(set(self.sequence)) != len(self.sequence):
            raise InputError("linear order repeats an edge id")

    @classmethod
    def natural(cls, g: MultiGraph) -> LinearOrder:
        return cls(g.edge_ids())

    @cached_property
    def _rank(self) -> dict[int, int]:
        return {eid: i for i, eid in enumerate(self.sequence)}

    def rank(self, eid: int) -> int:
        try:
            return self._rank[eid]
        except KeyError:
            raise InputError(f"edge id {eid} not covered by the linear order") from None

    def min_edge(self, eids: Iterable[int]) -> int:
        return min(eids, key=self.rank)

    def max_edge(self, eids: Iterable[int]) -> int:
        return max(eids, key=self.rank)

    def check_covers(self, g: MultiGraph) -> None:
        if set(self.sequence) != set(g.edge_ids()):
            raise InputError("linear order must be a permutation of the graph's edge ids")


def _order_for(g: MultiGraph, order: LinearOrder | None) -> LinearOrder:
    if order is None:
        return LinearOrder.natural(g)
    order.check_covers(g)
    return order


def _canonical(edge_signs: list[tuple[int, int]]) -> Cycle:
    edge_signs.sort()
    edges = tuple(e for e, _ in edge_signs)
    eta = tuple(s for _, s in edge_signs)
    if eta[0] < 0:
        eta = tuple(-s for s in eta)
    return Cycle(edges, eta)


def enumerate_cycles(g: MultiGraph) -> tuple[Cycle, ...]:
    """All cycles of the graph, sorted by edge-id tuple.

    Loops give length-1 cycles and each unordered pair of parallel edges
    gives a length-2 cycle. Longer cycles are grown as paths from their
    smallest vertex; each is emitted once because the closing edge id is
    required to exceed the starting edge id.
    """
    found: list[Cycle] = []
    adj: dict[int, list[tuple[int, int, int]]] = {v: [] for v in range(g.num_vertices)}
    for e in g.edges:
        if e.tail == e.head:
            found.append(Cycle((e.eid,), (1,)))
        else:
            adj[e.tail].append((e.eid, e.head, 1))
            adj[e.head].append((e.eid, e.tail, -1))

    def extend(v: int, start: int, first_eid: int,
               used: set[int], on_path: set[int],
               trail: list[tuple[int, int]]) -> None:
        for eid, w, sign in adj[v]:
            if eid in used:
                continue
            if w == start:
                if eid > first_eid:
                    found.append(_canonical(trail + [(eid, sign)]))
            elif w > start and w not in on_path:
                used.add(eid)
                on_path.add(w)
                trail.append((eid, sign))
                extend(w, start, first_eid, used, on_path, trail)
                trail.pop()
                on_path.discard(w)
                used.discard(eid)

    for start in range(g.num_vertices):
        for eid, w, sign in adj[start]:
            if w <= start:
                continue
            extend(w, start, eid, {eid}, {w}, [(eid, sign)])

    found.sort(key=lambda c: c.edges)
    return tuple(found)


def signed_incidence(g: MultiGraph, cycle: Cycle | Iterable[int]) -> dict[int, int]:
    """Signed incidence vector of a cycle over all edges of the graph.

    Values are +1/-1 on the cycle and 0 elsewhere, canonicalized so the
    smallest cycle edge gets +1. Raises when the edge set is not a cycle.
    """
    if isinstance(cycle, Cycle):
        ids = set(cycle.edges)
    else:
        ids = {int(e) for e in cycle}
    if not ids:
        raise InputError("the empty edge set is not a cycle")
    for eid in ids:
        g.edge(eid)

    vec = {eid: 0 for eid in g.edge_ids()}
    if len(ids) == 1:
        (eid,) = ids
        if not g.is_loop(eid):
            raise InputError("a single non-loop edge is not a cycle")
        vec[eid] = 1
        return vec

    incident: dict[int, list[int]] = {}
    for eid in ids:
        e = g.edge(eid)
        if e.tail == e.head:
            raise InputError("a loop cannot be part of a longer cycle")
        incident.setdefault(e.tail, []).append(eid)
        incident.setdefault(e.head, []).append(eid)
    if any(len(es) != 2 for es in incident.values()):
        raise InputError("edge set is not 2-regular")

    # walk from the smallest edge along its orientation
    first = min(ids)
    e = g.edge(first)
    vec[first] = 1
    seen = {first}
    at = e.head
    while at != e.tail:
        nxt = [x for x in incident[at] if x not in seen]
        if len(nxt) != 1:
            raise InputError("edge set is not a single cycle")
        eid = nxt[0]
        x = g.edge(eid)
        vec[eid] = 1 if x.tail == at else -1
        at = x.head if x.tail == at else x.tail
        seen.add(eid)
    if seen != ids:
        raise InputError("edge set is not connected")
    return vec


def enumerate_bonds(g: MultiGraph) -> tuple[EdgeSet, ...]:
    """All bonds (minimal nonempty edge cuts), sorted.

    Within one component, the cuts between bipartitions whose sides both
    induce connected subgraphs are exactly the bonds. Loops never lie in
    a cut. Intended for components of at most ~20 vertices.
    """
    count, labels = g.components()
    links = [e for e in g.edges if e.tail != e.head]
    bonds = set()
    for comp in range(count):
        verts = [v for v in range(g.num_vertices) if labels[v] == comp]
        if len(verts) < 2:
            continue
        pivot, rest = verts[0], verts[1:]
        comp_links = [e for e in links if labels[e.tail] == comp]
        for bits in range(1 << len(rest)):
            side = {pivot} | {rest[i] for i in range(len(rest)) if bits >> i & 1}
            other = [v for v in verts if v not in side]
            if not other:
                continue
            if not _induces_connected(side, comp_links):
                continue
            if not _induces_connected(set(other), comp_links):
                continue
            cut = tuple(sorted(
                e.eid for e in comp_links if (e.tail in side) != (e.head in side)
            ))
            bonds.add(cut)
    return tuple(sorted(bonds))


def _induces_connected(verts: set[int], links: list) -> bool:
    if len(verts) <= 1:
        return True
    index = {v: i for i, v in enumerate(sorted(verts))}
    parent = list(range(len(verts)))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    classes = len(verts)
    for e in links:
        if e.tail in verts and e.head in verts:
            ru, rv = find(index[e.tail]), find(index[e.head])
            if ru != rv:
                parent[ru] = rv
                classes -= 1
    return classes == 1


def broken_cycles(g: MultiGraph, a: Assigning, order: LinearOrder | None = None) -> tuple[EdgeSet, ...]:
    """Broken compatible cycles: each cycle valued 0 minus its largest edge.

    A loop valued 0 breaks to the empty edge set, which is contained in
    every subgraph. Duplicates are merged; the result is sorted.
    """
    order = _order_for(g, order)
    out = set()
    for c in enumerate_cycles(g):
        if a.value(c.edges) == 0:
            drop = order.max_edge(c.edges)
            out.add(tuple(e for e in c.edges if e != drop))
    return tuple(sorted(out))


def compatible_sets(g: MultiGraph, order: LinearOrder | None = None) -> Iterator[EdgeSet]:
    """Edge subsets meeting no bond exactly in that bond's smallest edge.

    Yields the sets X with X ∩ B != {min B} for every bond B, in
    increasing bitmask order over the edge ids sorted ascending.
    """
    order = _order_for(g, order)
    eids = sorted(g.edge_ids())
    pos = {eid: i for i, eid in enumerate(eids)}
    constraints = []
    for bond in enumerate_bonds(g):
        bmask = 0
        for eid in bond:
            bmask |= 1 << pos[eid]
        constraints.append((bmask, 1 << pos[order.min_edge(bond)]))
    for mask in range(1 << len(eids)):
        if any(mask & bmask == minbit for bmask, minbit in constraints):
            continue
        yield tuple(eids[i] for i in range(len(eids)) if mask >> i & 1)
