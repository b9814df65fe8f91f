# cython: language_level=3
# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled counting kernels.

Mirrors kernels/pure.py behind integer-encoded signatures; the dispatcher
in kernels/__init__.py encodes group elements as indices and picks this
module when the build produced it.
"""

from libc.stdlib cimport calloc, free, malloc


def coloring_count(int num_vertices, int order,
                   int[:] tails, int[:] heads, int[:] fvals,
                   int[:] close_off, int[:] sub):
    """Backtracking count of colorings avoiding per-edge differences.

    Edges must be pre-sorted so those whose later endpoint is v occupy
    close_off[v] .. close_off[v+1]; sub is the flat subtraction table,
    sub[a*order + b] = index of a - b.
    """
    cdef long long count = 0
    cdef int n = num_vertices
    cdef int v, i
    cdef bint ok
    cdef int *assign = <int *> malloc(n * sizeof(int))
    if assign == NULL:
        raise MemoryError
    try:
        v = 0
        assign[0] = -1
        while v >= 0:
            assign[v] += 1
            if assign[v] == order:
                v -= 1
                continue
            ok = True
            for i in range(close_off[v], close_off[v + 1]):
                if sub[assign[heads[i]] * order + assign[tails[i]]] == fvals[i]:
                    ok = False
                    break
            if not ok:
                continue
            if v == n - 1:
                count += 1
            else:
                v += 1
                assign[v] = -1
        return count
    finally:
        free(assign)


def tension_count(int num_vertices, int order,
                  int[:] tails, int[:] heads, int[:] fvals,
                  int[:] sub, int shift):
    """Number of distinct coboundary vectors avoiding the forbidden values.

    Iterates every coloring and packs the coboundary into bit fields of
    width `shift` per edge; the caller guarantees m * shift <= 63.
    """
    cdef int n = num_vertices
    cdef int m = tails.shape[0]
    cdef int i, e, d
    cdef bint ok
    cdef unsigned long long packed
    cdef int *assign = <int *> calloc(n, sizeof(int))
    if assign == NULL:
        raise MemoryError
    seen = set()
    try:
        while True:
            packed = 0
            ok = True
            for e in range(m):
                d = sub[assign[heads[e]] * order + assign[tails[e]]]
                if d == fvals[e]:
                    ok = False
                    break
                packed |= (<unsigned long long> d) << (e * shift)
            if ok:
                seen.add(packed)
            i = n - 1
            while i >= 0 and assign[i] == order - 1:
                assign[i] = 0
                i -= 1
            if i < 0:
                break
            assign[i] += 1
        return len(seen)
    finally:
        free(assign)


def subgraph_histogram(int num_vertices, int[:] tails, int[:] heads,
                       long long[:] bad_masks):
    """Signed subset counts per component number, skipping bad supersets."""
    cdef int m = tails.shape[0]
    cdef int nb = bad_masks.shape[0]
    cdef long long full = (<long long> 1) << m
    cdef long long mask
    cdef int i, b, x, y, comp, bits
    cdef bint skip
    cdef long long *signed_counts = <long long *> calloc(num_vertices + 1, sizeof(long long))
    cdef int *parent = <int *> malloc((num_vertices if num_vertices > 0 else 1) * sizeof(int))
    if signed_counts == NULL or parent == NULL:
        free(signed_counts)
        free(parent)
        raise MemoryError
    try:
        for mask in range(full):
            skip = False
            for b in range(nb):
                if mask & bad_masks[b] == bad_masks[b]:
                    skip = True
                    break
            if skip:
                continue
            for i in range(num_vertices):
                parent[i] = i
            comp = num_vertices
            bits = 0
            for i in range(m):
                if mask >> i & 1:
                    bits += 1
                    x = tails[i]
                    while parent[x] != x:
                        parent[x] = parent[parent[x]]
                        x = parent[x]
                    y = heads[i]
                    while parent[y] != y:
                        parent[y] = parent[parent[y]]
                        y = parent[y]
                    if x != y:
                        parent[x] = y
                        comp -= 1
            if bits % 2 == 0:
                signed_counts[comp] += 1
            else:
                signed_counts[comp] -= 1
        return [signed_counts[i] for i in range(num_vertices + 1)]
    finally:
        free(signed_counts)
        free(parent)
