"""Multigraphs with stable edge identities.

Vertices are the integers ``0 .. num_vertices-1``. Every edge carries an
integer id that survives deletion and contraction, so edge subsets keep
their meaning across minors. The (tail, head) pair of each edge fixes the
reference orientation. Loops (tail == head) and parallel edges are allowed.

All graph values are immutable; minor operations return new graphs.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, NamedTuple

from .errors import ContractError, InputError


class Edge(NamedTuple):
    eid: int
    tail: int
    head: int


def _component_labels(num_vertices: int, pairs: Iterable[tuple[int, int]]) -> tuple[int, ...]:
    """Dense component labels, numbered by first appearance."""
    parent = list(range(num_vertices))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for u, v in pairs:
        ru, rv = find(u), find(v)
        if ru != rv:
            parent[ru] = rv
    labels = {}
    out = []
    for v in range(num_vertices):
        root = find(v)
        if root not in labels:
            labels[root] = len(labels)
        out.append(labels[root])
    return tuple(out)


@dataclass(frozen=True)
class MultiGraph:
    """Immutable multigraph with a fixed reference orientation.

    Parameters
    ----------
    num_vertices:
        Number of vertices.
    edges:
        Iterable of (eid, tail, head) triples. Ids must be distinct
        nonnegative integers, not necessarily contiguous; they are kept
        sorted internally so equal graphs compare and hash equal.
    """

    num_vertices: int
    edges: tuple[Edge, ...] = ()

    def __post_init__(self) -> None:
        if self.num_vertices < 0:
            raise InputError("vertex count must be nonnegative")
        norm = tuple(sorted((Edge(*e) for e in self.edges), key=lambda e: e.eid))
        object.__setattr__(self, "edges", norm)
        seen = set()
        for e in norm:
            if e.eid < 0:
                raise InputError(f"edge id {e.eid} is negative")
            if e.eid in seen:
                raise InputError(f"duplicate edge id {e.eid}")
            seen.add(e.eid)
            for v in (e.tail, e.head):
                if not 0 <= v < self.num_vertices:
                    raise InputError(f"edge {e.eid} endpoint {v} out of range")

    # -- queries ---------------------------------------------------------

    @cached_property
    def _by_id(self) -> dict[int, Edge]:
        return {e.eid: e for e in self.edges}

    def edge(self, eid: int) -> Edge:
        try:
            return self._by_id[eid]
        except KeyError:
            raise InputError(f"unknown edge id {eid}") from None

    def edge_ids(self) -> tuple[int, ...]:
        return tuple(e.eid for e in self.edges)

    def has_edge(self, eid: int) -> bool:
        return eid in self._by_id

    def is_loop(self, eid: int) -> bool:
        e = self.edge(eid)
        return e.tail == e.head

    def is_bridge(self, eid: int) -> bool:
        """True iff deleting the edge raises the component count."""
        self.edge(eid)
        return self.delete([eid]).num_components > self.num_components

    @cached_property
    def _components(self) -> tuple[int, tuple[int, ...]]:
        labels = _component_labels(self.num_vertices, ((e.tail, e.head) for e in self.edges))
        count = max(labels) + 1 if labels else 0
        return count, labels

    def components(self) -> tuple[int, tuple[int, ...]]:
        """(component count, per-vertex dense labels)."""
        return self._components

    @property
    def num_components(self) -> int:
        return self._components[0]

    def rank(self, edge_ids: Iterable[int] | None = None) -> int:
        """|V| minus the component count of the spanning subgraph on the
        given edge set (all edges when omitted)."""
        if edge_ids is None:
            return self.num_vertices - self.num_components
        pairs = [(self.edge(eid).tail, self.edge(eid).head) for eid in set(edge_ids)]
        labels = _component_labels(self.num_vertices, pairs)
        count = max(labels) + 1 if labels else 0
        return self.num_vertices - count

    # -- minors ----------------------------------------------------------

    def delete(self, edge_ids: int | Iterable[int]) -> MultiGraph:
        """Remove the given edges; vertices and surviving ids unchanged."""
        if isinstance(edge_ids, int):
            edge_ids = (edge_ids,)
        drop = set(edge_ids)
        for eid in drop:
            self.edge(eid)
        keep = tuple(e for e in self.edges if e.eid not in drop)
        return MultiGraph(self.num_vertices, keep)

    def contract(self, eid: int) -> MultiGraph:
        """Identify the ends of a link and remove it.

        The merged vertex takes the smaller of the two endpoint indices
        and the remaining vertices are renumbered densely. Surviving
        edges keep their ids; a parallel edge of the contracted one
        becomes a loop.
        """
        e = self.edge(eid)
        if e.tail == e.head:
            raise ContractError(f"edge {eid} is a loop and cannot be contracted")
        lo, hi = min(e.tail, e.head), max(e.tail, e.head)

        def remap(v: int) -> int:
            if v == hi:
                return lo
            return v - 1 if v > hi else v

        new_edges = tuple(
            Edge(x.eid, remap(x.tail), remap(x.head)) for x in self.edges if x.eid != eid
        )
        return MultiGraph(self.num_vertices - 1, new_edges)

    def component_subgraphs(self) -> tuple[tuple[MultiGraph, tuple[int, ...]], ...]:
        """One (subgraph, original vertex ids) pair per component.

        Vertices are renumbered densely in increasing original order;
        edge ids are preserved.
        """
        count, labels = self.components()
        out = []
        for comp in range(count):
            verts = tuple(v for v in range(self.num_vertices) if labels[v] == comp)
            index = {v: i for i, v in enumerate(verts)}
            edges = tuple(
                Edge(e.eid, index[e.tail], index[e.head])
                for e in self.edges
                if labels[e.tail] == comp
            )
            out.append((MultiGraph(len(verts), edges), verts))
        return tuple(out)


# -- text format -----------------------------------------------------------


def parse_graph(text: str) -> MultiGraph:
    """Parse the line-oriented graph format.

    A ``vertices <n>`` line followed by ``edge <id> <tail> <head>`` lines,
    one item per line; ``#`` starts a comment.
    """
    num_vertices = None
    edges = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if parts[0] == "vertices":
            if num_vertices is not None:
                raise InputError(f"line {lineno}: repeated vertices line")
            if len(parts) != 2:
                raise InputError(f"line {lineno}: expected 'vertices <n>'")
            num_vertices = _parse_int(parts[1], lineno)
        elif parts[0] == "edge":
            if num_vertices is None:
                raise InputError(f"line {lineno}: edge before vertices line")
            if len(parts) != 4:
                raise InputError(f"line {lineno}: expected 'edge <id> <tail> <head>'")
            eid, tail, head = (_parse_int(p, lineno) for p in parts[1:])
            edges.append(Edge(eid, tail, head))
        else:
            raise InputError(f"line {lineno}: unknown directive {parts[0]!r}")
    if num_vertices is None:
        raise InputError("missing vertices line")
    try:
        return MultiGraph(num_vertices, tuple(edges))
    except InputError as exc:
        raise InputError(f"inconsistent graph: {exc}") from None


def _parse_int(token: str, lineno: int) -> int:
    try:
        return int(token)
    except ValueError:
        raise InputError(f"line {lineno}: expected integer, got {token!r}") from None


def format_graph(g: MultiGraph) -> str:
    lines = [f"vertices {g.num_vertices}"]
    lines.extend(f"edge {e.eid} {e.tail} {e.head}" for e in g.edges)
    return "\n".join(lines) + "\n"
