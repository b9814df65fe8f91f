"""Kernel dispatch: compiled extension when built, pure Python otherwise.

The compiled backend works on integer-encoded group elements and needs a
flat subtraction table, so it is only used for group orders up to
_TABLE_MAX_ORDER (and, for tensions, when the packed coboundary fits in
63 bits). Everything else falls back to the pure backend. Set
GROUPCOLOR_PURE=1 before import to force pure Python.
"""

from __future__ import annotations

import itertools
import os
from array import array
from functools import lru_cache

from . import pure

if os.environ.get("GROUPCOLOR_PURE"):
    _speedups = None
else:
    try:
        from groupcolor import _speedups
    except ImportError:
        _speedups = None

BACKEND = "speedups" if _speedups is not None else "pure"

_TABLE_MAX_ORDER = 2048


@lru_cache(maxsize=16)
def _group_tables(moduli: tuple[int, ...]):
    """(element index map, flat subtraction table) for a small group."""
    elements = list(itertools.product(*(range(m) for m in moduli)))
    index = {elem: i for i, elem in enumerate(elements)}
    order = len(elements)
    sub = array("i", bytes(4 * order * order))
    for ia, a in enumerate(elements):
        for ib, b in enumerate(elements):
            d = tuple((x - y) % m for x, y, m in zip(a, b, moduli))
            sub[ia * order + ib] = index[d]
    return index, sub


def _order_of(moduli) -> int:
    order = 1
    for m in moduli:
        order *= m
    return order


def coloring_count(num_vertices: int, moduli, edges) -> int:
    """Colorings whose coboundary avoids the per-edge forbidden value.

    edges: (tail, head, value) triples with value a residue tuple.
    """
    if num_vertices == 0:
        return 1
    moduli = tuple(moduli)
    order = _order_of(moduli)
    if _speedups is not None and order <= _TABLE_MAX_ORDER:
        index, sub = _group_tables(moduli)
        es = sorted(edges, key=lambda e: max(e[0], e[1]))
        tails = array("i", [t for t, _, _ in es])
        heads = array("i", [h for _, h, _ in es])
        fvals = array("i", [index[tuple(fv)] for _, _, fv in es])
        close_off = array("i", bytes(4 * (num_vertices + 1)))
        for t, h, _ in es:
            close_off[max(t, h) + 1] += 1
        for v in range(num_vertices):
            close_off[v + 1] += close_off[v]
        return _speedups.coloring_count(
            num_vertices, order, tails, heads, fvals, close_off, sub
        )
    return pure.coloring_count(num_vertices, moduli, edges)


def tension_count(num_vertices: int, moduli, edges) -> int:
    """Distinct coboundaries avoiding the forbidden value everywhere."""
    if num_vertices == 0:
        return 1
    moduli = tuple(moduli)
    order = _order_of(moduli)
    edges = list(edges)
    shift = max(1, (order - 1).bit_length())
    if (
        _speedups is not None
        and order <= _TABLE_MAX_ORDER
        and len(edges) * shift <= 63
    ):
        index, sub = _group_tables(moduli)
        tails = array("i", [t for t, _, _ in edges])
        heads = array("i", [h for _, h, _ in edges])
        fvals = array("i", [index[tuple(fv)] for _, _, fv in edges])
        return _speedups.tension_count(
            num_vertices, order, tails, heads, fvals, sub, shift
        )
    return pure.tension_count(num_vertices, moduli, edges)


def subgraph_histogram(num_vertices: int, endpoints, bad_masks) -> list[int]:
    """Signed subset counts per component number; see kernels.pure."""
    endpoints = list(endpoints)
    masks = sorted(set(int(b) for b in bad_masks))
    if _speedups is not None and len(endpoints) <= 62:
        tails = array("i", [t for t, _ in endpoints])
        heads = array("i", [h for _, h in endpoints])
        bad = array("q", masks) if masks else array("q", [])
        return _speedups.subgraph_histogram(num_vertices, tails, heads, bad)
    return pure.subgraph_histogram(num_vertices, endpoints, masks)
