"""Fixture corpus: every connected multigraph with at most 4 vertices and
at most 6 edges (loops and parallel edges included), one representative
per isomorphism class. 283 graphs.

Representatives are canonical (lexicographically least sorted edge list
over all vertex relabelings) so the corpus is deterministic.
"""

from __future__ import annotations

import itertools

from groupcolor import Edge, MultiGraph

MAX_VERTICES = 4
MAX_EDGES = 6


def _connected(n: int, pairs) -> bool:
    parent = list(range(n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for u, v in pairs:
        parent[find(u)] = find(v)
    return len({find(v) for v in range(n)}) == 1


def _canonical(n: int, pairs) -> tuple[tuple[int, int], ...]:
    best = None
    for perm in itertools.permutations(range(n)):
        mapped = sorted(
            (min(perm[u], perm[v]), max(perm[u], perm[v])) for u, v in pairs
        )
        key = tuple(mapped)
        if best is None or key < best:
            best = key
    return best


def build_corpus() -> tuple[MultiGraph, ...]:
    graphs = []
    for n in range(1, MAX_VERTICES + 1):
        vertex_pairs = [(u, v) for u in range(n) for v in range(u, n)]
        seen = set()
        low = 0 if n == 1 else n - 1
        for m in range(low, MAX_EDGES + 1):
            for combo in itertools.combinations_with_replacement(vertex_pairs, m):
                if n > 1 and not _connected(n, combo):
                    continue
                key = _canonical(n, combo)
                if key in seen:
                    continue
                seen.add(key)
                graphs.append(MultiGraph(
                    n,
                    tuple(Edge(i + 1, u, v) for i, (u, v) in enumerate(key)),
                ))
    return tuple(graphs)
