"""Pure-Python counting kernels.

Same observable behavior as the compiled extension; used when the build
did not produce it or when GROUPCOLOR_PURE=1 disables it.
"""

from __future__ import annotations

import itertools


def coloring_count(num_vertices, moduli, edges):
    # edges: (tail, head, value) triples, value a residue tuple.
    # Backtracks over vertices in index order; each edge is checked as
    # soon as both endpoints are colored.
    if num_vertices == 0:
        return 1
    r = len(moduli)
    by_close = [[] for _ in range(num_vertices)]
    for t, h, fv in edges:
        by_close[max(t, h)].append((t, h, tuple(fv)))
    elements = list(itertools.product(*(range(m) for m in moduli)))
    coloring = [None] * num_vertices

    def admissible(v):
        for t, h, fv in by_close[v]:
            ct, ch = coloring[t], coloring[h]
            for i in range(r):
                if (ch[i] - ct[i]) % moduli[i] != fv[i]:
                    break
            else:
                return False  # difference equals the forbidden value
        return True

    def walk(v):
        if v == num_vertices:
            return 1
        total = 0
        for elem in elements:
            coloring[v] = elem
            if admissible(v):
                total += walk(v + 1)
        return total

    return walk(0)


def tension_count(num_vertices, moduli, edges):
    # Counts distinct coboundary vectors that avoid the forbidden value
    # on every edge. No pruning: the image must be deduplicated.
    if num_vertices == 0:
        return 1
    r = len(moduli)
    edges = [(t, h, tuple(fv)) for t, h, fv in edges]
    elements = list(itertools.product(*(range(m) for m in moduli)))
    seen = set()
    for coloring in itertools.product(elements, repeat=num_vertices):
        vec = []
        for t, h, fv in edges:
            ct, ch = coloring[t], coloring[h]
            d = tuple((ch[i] - ct[i]) % moduli[i] for i in range(r))
            if d == fv:
                vec = None
                break
            vec.append(d)
        if vec is not None:
            seen.add(tuple(vec))
    return len(seen)


def subgraph_histogram(num_vertices, endpoints, bad_masks):
    # signed[c] = sum over subsets X avoiding every bad mask, with the
    # spanning subgraph on X having c components, of (-1)^|X|.
    m = len(endpoints)
    signed = [0] * (num_vertices + 1)
    for mask in range(1 << m):
        skip = False
        for b in bad_masks:
            if mask & b == b:
                skip = True
                break
        if skip:
            continue
        parent = list(range(num_vertices))
        comp = num_vertices
        bits = 0
        for i in range(m):
            if mask >> i & 1:
                bits += 1
                x = endpoints[i][0]
                while parent[x] != x:
                    parent[x] = parent[parent[x]]
                    x = parent[x]
                y = endpoints[i][1]
                while parent[y] != y:
                    parent[y] = parent[parent[y]]
                    y = parent[y]
                if x != y:
                    parent[x] = y
                    comp -= 1
        signed[comp] += 1 if bits % 2 == 0 else -1
    return signed
