"""Exact integer polynomials in k and the four computation methods.

P(G, a; k) is the signed sum of k^{c(H)} over the a-compatible spanning
subgraphs H; tau is P divided by k^{c(G)}. The subgraph expansion, the
deletion-contraction recursion, the broken-cycle expansion, and the bond
expansion must all agree; the test suite checks them against each other
and against exhaustive coloring counts.

The recursion runs on tau, not P, because the bridge step of the P
recursion carries the rational factor (k-1)/k; P is recovered as
k^{c(G)} * tau. All arithmetic stays in integers.
"""

from __future__ import annotations

import warnings
from typing import Iterable, Mapping

from . import kernels
from .assigning import (
    Assigning,
    check_total,
    restrict_contract,
    restrict_delete,
)
from .cycles import LinearOrder, broken_cycles, enumerate_bonds, _order_for
from .errors import AdmissibilityWarning, BudgetError, InputError
from .multigraph import MultiGraph

DEFAULT_MAX_EDGES = 20


class IntPolynomial:
    """Sparse univariate polynomial in k with exact integer coefficients.

    Immutable; zero coefficients are never stored. The zero polynomial
    has degree None.
    """

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Mapping[int, int] | None = None) -> None:
        clean = {}
        if coeffs:
            for deg, c in coeffs.items():
                deg = int(deg)
                c = int(c)
                if deg < 0:
                    raise InputError(f"negative degree {deg}")
                if c:
                    clean[deg] = c
        self._coeffs = clean

    @classmethod
    def zero(cls) -> IntPolynomial:
        return cls()

    @classmethod
    def one(cls) -> IntPolynomial:
        return cls({0: 1})

    @classmethod
    def monomial(cls, degree: int, coefficient: int = 1) -> IntPolynomial:
        return cls({degree: coefficient})

    @property
    def degree(self) -> int | None:
        return max(self._coeffs) if self._coeffs else None

    def is_zero(self) -> bool:
        return not self._coeffs

    def coefficient(self, degree: int) -> int:
        return self._coeffs.get(degree, 0)

    def coefficients(self) -> dict[int, int]:
        return dict(self._coeffs)

    def terms(self) -> tuple[tuple[int, int], ...]:
        """(degree, coefficient) pairs, highest degree first."""
        return tuple(sorted(self._coeffs.items(), reverse=True))

    def __add__(self, other: IntPolynomial) -> IntPolynomial:
        out = dict(self._coeffs)
        for deg, c in other._coeffs.items():
            out[deg] = out.get(deg, 0) + c
        return IntPolynomial(out)

    def __neg__(self) -> IntPolynomial:
        return IntPolynomial({deg: -c for deg, c in self._coeffs.items()})

    def __sub__(self, other: IntPolynomial) -> IntPolynomial:
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return IntPolynomial({deg: c * other for deg, c in self._coeffs.items()})
        out: dict[int, int] = {}
        for d1, c1 in self._coeffs.items():
            for d2, c2 in other._coeffs.items():
                out[d1 + d2] = out.get(d1 + d2, 0) + c1 * c2
        return IntPolynomial(out)

    def __rmul__(self, other: int) -> IntPolynomial:
        return self * other

    def __pow__(self, n: int) -> IntPolynomial:
        if n < 0:
            raise InputError("negative polynomial power")
        result = IntPolynomial.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other) -> bool:
        return isinstance(other, IntPolynomial) and self._coeffs == other._coeffs

    def __hash__(self) -> int:
        return hash(tuple(sorted(self._coeffs.items())))

    def shifted(self, n: int) -> IntPolynomial:
        """Multiply by k^n."""
        if n < 0:
            raise InputError("shift must be nonnegative; use divided_by_power")
        return IntPolynomial({deg + n: c for deg, c in self._coeffs.items()})

    def divided_by_power(self, n: int) -> IntPolynomial:
        """Exact division by k^n; every degree must be at least n."""
        if any(deg < n for deg in self._coeffs):
            raise InputError(f"polynomial is not divisible by k^{n}")
        return IntPolynomial({deg - n: c for deg, c in self._coeffs.items()})

    def evaluate(self, point: int) -> int:
        """Exact value at an integer point (sparse Horner)."""
        result = 0
        prev = None
        for deg, c in self.terms():
            if prev is None:
                result = c
            else:
                result = result * point ** (prev - deg) + c
            prev = deg
        if prev is None:
            return 0
        return result * point**prev

    def __str__(self) -> str:
        if not self._coeffs:
            return "0"
        parts = []
        for deg, c in self.terms():
            mag = abs(c)
            if deg == 0:
                body = str(mag)
            else:
                var = "k" if deg == 1 else f"k^{deg}"
                body = var if mag == 1 else f"{mag}*{var}"
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(parts)

    def __repr__(self) -> str:
        return f"IntPolynomial({self._coeffs!r})"

    def to_json_dict(self) -> dict:
        return {
            "variable": "k",
            "degree": self.degree,
            "coefficients": {str(deg): str(c) for deg, c in self.terms()},
        }

    @classmethod
    def from_json_dict(cls, doc: Mapping) -> IntPolynomial:
        try:
            coeffs = {int(deg): int(c) for deg, c in doc["coefficients"].items()}
        except (KeyError, TypeError, ValueError):
            raise InputError("bad polynomial document") from None
        return cls(coeffs)


def evaluate(p: IntPolynomial, point: int) -> int:
    return p.evaluate(point)


_K_MINUS_ONE = IntPolynomial({1: 1, 0: -1})


def _warn_unknown_admissibility(a: Assigning, method: str) -> None:
    if not a.known_admissible:
        warnings.warn(
            f"{method} assumes an assigning induced by some edge function; "
            "this one is not known to be",
            AdmissibilityWarning,
            stacklevel=3,
        )


def _compatible_histogram(g: MultiGraph, a: Assigning, max_edges: int) -> list[int]:
    check_total(g, a)
    eids = sorted(g.edge_ids())
    if len(eids) > max_edges:
        raise BudgetError(
            f"{len(eids)} edges exceed the subset enumeration budget {max_edges}"
        )
    pos = {eid: i for i, eid in enumerate(eids)}
    bad = []
    for key, val in a.items():
        if val == 1:
            mask = 0
            for eid in key:
                mask |= 1 << pos[eid]
            bad.append(mask)
    endpoints = [(g.edge(eid).tail, g.edge(eid).head) for eid in eids]
    return kernels.subgraph_histogram(g.num_vertices, endpoints, bad)


def poly_subgraph(g: MultiGraph, a: Assigning,
                  max_edges: int = DEFAULT_MAX_EDGES) -> IntPolynomial:
    """P by direct enumeration of a-compatible spanning subgraphs."""
    signed = _compatible_histogram(g, a, max_edges)
    return IntPolynomial({c: v for c, v in enumerate(signed)})


def tau_subgraph(g: MultiGraph, a: Assigning,
                 max_edges: int = DEFAULT_MAX_EDGES) -> IntPolynomial:
    """tau by the same enumeration, with exponent rank(G) - rank(H).

    That exponent equals c(H) - c(G), so this is P shifted down by c(G).
    """
    signed = _compatible_histogram(g, a, max_edges)
    c0 = g.num_components
    return IntPolynomial({c - c0: v for c, v in enumerate(signed) if v})


def tau_delcon(g: MultiGraph, a: Assigning) -> IntPolynomial:
    """tau by deletion-contraction.

    Loops contribute their assigning value as a factor (0 kills the
    polynomial), bridges contribute k-1, and any other edge splits into
    the deletion minus the contraction. Subproblems repeat, so results
    are memoized on the (graph, assigning) value.
    """
    check_total(g, a)
    memo: dict[tuple[MultiGraph, Assigning], IntPolynomial] = {}

    def recurse(h: MultiGraph, b: Assigning) -> IntPolynomial:
        key = (h, b)
        hit = memo.get(key)
        if hit is not None:
            return hit
        eids = h.edge_ids()
        if not eids:
            result = IntPolynomial.one()
        else:
            loops = [eid for eid in eids if h.is_loop(eid)]
            if loops:
                eid = loops[0]
                if b.loop_value(eid) == 0:
                    result = IntPolynomial.zero()
                else:
                    result = recurse(h.delete(eid), restrict_delete(h, b, eid))
            else:
                bridges = [eid for eid in eids if h.is_bridge(eid)]
                if bridges:
                    eid = bridges[0]
                    result = _K_MINUS_ONE * recurse(
                        h.delete(eid), restrict_delete(h, b, eid)
                    )
                else:
                    eid = eids[0]
                    result = recurse(
                        h.delete(eid), restrict_delete(h, b, eid)
                    ) - recurse(h.contract(eid), restrict_contract(h, b, eid))
        memo[key] = result
        return result

    return recurse(g, a)


def poly_broken(g: MultiGraph, a: Assigning,
                order: LinearOrder | None = None) -> IntPolynomial:
    """P by the broken-cycle expansion.

    Sums (-1)^i w_i k^{|V|-i} where w_i counts the i-edge spanning
    forests containing no broken compatible cycle. The coefficients do
    not depend on the linear order; the default is increasing edge id.
    """
    check_total(g, a)
    _warn_unknown_admissibility(a, "poly_broken")
    broken = broken_cycles(g, a, order)
    if () in broken:
        # a loop valued 0 breaks to the empty set, which every subgraph contains
        return IntPolynomial.zero()
    eids = sorted(g.edge_ids())
    pos = {eid: i for i, eid in enumerate(eids)}
    masks = []
    for key in broken:
        mask = 0
        for eid in key:
            mask |= 1 << pos[eid]
        masks.append(mask)
    endpoints = [(g.edge(eid).tail, g.edge(eid).head) for eid in eids]
    m = len(eids)
    n = g.num_vertices
    counts = [0] * (m + 1)

    def grow(start: int, mask: int, parent: list[int], size: int) -> None:
        counts[size] += 1
        for j in range(start, m):
            t, h = endpoints[j]
            x = t
            while parent[x] != x:
                x = parent[x]
            rt = x
            x = h
            while parent[x] != x:
                x = parent[x]
            rh = x
            if rt == rh:
                continue  # would close a cycle; supersets are not forests either
            new_mask = mask | (1 << j)
            if any(b & new_mask == b for b in masks):
                continue
            nxt = list(parent)
            nxt[rt] = rh
            grow(j + 1, new_mask, nxt, size + 1)

    grow(0, 0, list(range(n)), 0)
    return IntPolynomial(
        {n - i: (c if i % 2 == 0 else -c) for i, c in enumerate(counts) if c}
    )


def tau_bond(g: MultiGraph, a: Assigning,
             order: LinearOrder | None = None) -> IntPolynomial:
    """tau by the bond expansion over compatible sets.

    Sums delta(X) (-1)^|X| (k-1)^{rank(G)-rank(X)} over the subsets X
    meeting no bond exactly in that bond's smallest edge.
    """
    check_total(g, a)
    _warn_unknown_admissibility(a, "tau_bond")
    order = _order_for(g, order)
    eids = sorted(g.edge_ids())
    pos = {eid: i for i, eid in enumerate(eids)}
    m = len(eids)
    constraints = []
    for bond in enumerate_bonds(g):
        bmask = 0
        for eid in bond:
            bmask |= 1 << pos[eid]
        constraints.append((bmask, 1 << pos[order.min_edge(bond)]))
    bad = []
    for key, val in a.items():
        if val == 1:
            mask = 0
            for eid in key:
                mask |= 1 << pos[eid]
            bad.append(mask)
    endpoints = [(g.edge(eid).tail, g.edge(eid).head) for eid in eids]
    n = g.num_vertices
    rank_g = g.rank()
    acc: dict[int, int] = {}
    for mask in range(1 << m):
        if any(mask & bmask == minbit for bmask, minbit in constraints):
            continue
        if any(mask & b == b for b in bad):
            continue
        parent = list(range(n))
        comp = n
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
        expo = rank_g - (n - comp)
        acc[expo] = acc.get(expo, 0) + (1 if bits % 2 == 0 else -1)
    powers = [IntPolynomial.one()]
    for _ in range(max(acc) if acc else 0):
        powers.append(powers[-1] * _K_MINUS_ONE)
    total = IntPolynomial.zero()
    for expo, coeff in sorted(acc.items()):
        if coeff:
            total = total + powers[expo] * coeff
    return total


def decompose(g: MultiGraph, a: Assigning,
              max_edges: int = DEFAULT_MAX_EDGES) -> IntPolynomial:
    """P as the product of the components' polynomials.

    Every cycle lives inside one component, so the assigning restricts by
    filtering keys.
    """
    check_total(g, a)
    result = IntPolynomial.one()
    for sub, _verts in g.component_subgraphs():
        inside = set(sub.edge_ids())
        values = {key: val for key, val in a.items() if set(key) <= inside}
        part = Assigning(values, known_admissible=a.known_admissible)
        result = result * poly_subgraph(sub, part, max_edges=max_edges)
    return result
