from __future__ import annotations

import itertools

import pytest

import oracles
from groupcolor import (
    Cycle,
    Edge,
    InputError,
    LinearOrder,
    MultiGraph,
    broken_cycles,
    compatible_sets,
    enumerate_bonds,
    enumerate_cycles,
    signed_incidence,
    zero_assigning,
)


def k4() -> MultiGraph:
    edges = [Edge(i + 1, u, v)
             for i, (u, v) in enumerate(itertools.combinations(range(4), 2))]
    return MultiGraph(4, tuple(edges))


def endpoints_of(g: MultiGraph) -> dict[int, tuple[int, int]]:
    return {e.eid: (e.tail, e.head) for e in g.edges}


def test_k4_has_seven_cycles():
    cycles = enumerate_cycles(k4())
    assert len(cycles) == 7
    sizes = sorted(len(c) for c in cycles)
    assert sizes == [3, 3, 3, 3, 4, 4, 4]


def test_triangle_eta_follows_orientation():
    g = MultiGraph(3, (Edge(1, 0, 1), Edge(2, 1, 2), Edge(3, 2, 0)))
    (c,) = enumerate_cycles(g)
    assert c.edges == (1, 2, 3)
    assert c.eta == (1, 1, 1)
    flipped = MultiGraph(3, (Edge(1, 0, 1), Edge(2, 1, 2), Edge(3, 0, 2)))
    (c,) = enumerate_cycles(flipped)
    assert c.eta == (1, 1, -1)


def test_loop_and_digon_cycles():
    g = MultiGraph(1, (Edge(4, 0, 0),))
    assert enumerate_cycles(g) == (Cycle((4,), (1,)),)
    same_way = MultiGraph(2, (Edge(1, 0, 1), Edge(2, 0, 1)))
    assert enumerate_cycles(same_way) == (Cycle((1, 2), (1, -1)),)
    opposed = MultiGraph(2, (Edge(1, 0, 1), Edge(2, 1, 0)))
    assert enumerate_cycles(opposed) == (Cycle((1, 2), (1, 1)),)


def test_cycles_match_subset_oracle(corpus):
    for g in corpus:
        got = [c.edges for c in enumerate_cycles(g)]
        assert sorted(got) == oracles.subset_cycles(endpoints_of(g))
        assert got == sorted(got)


def test_eta_starts_positive_and_conserves_flow(corpus):
    for g in corpus:
        for c in enumerate_cycles(g):
            assert c.eta[0] == 1
            net = [0] * g.num_vertices
            for eid, sign in zip(c.edges, c.eta):
                e = g.edge(eid)
                net[e.head] += sign
                net[e.tail] -= sign
            assert not any(net)


def test_signed_incidence_matches_eta():
    g = k4()
    for c in enumerate_cycles(g):
        vec = signed_incidence(g, c)
        assert set(vec) == set(g.edge_ids())
        for eid in g.edge_ids():
            assert vec[eid] == (c.eta_of(eid) if eid in c.edges else 0)
        assert vec == signed_incidence(g, c.edges)


def test_theta_incidence_relation():
    g = MultiGraph(2, (Edge(1, 0, 1), Edge(2, 0, 1), Edge(3, 0, 1)))
    v12 = signed_incidence(g, (1, 2))
    v13 = signed_incidence(g, (1, 3))
    v23 = signed_incidence(g, (2, 3))
    assert all(v23[e] == v13[e] - v12[e] for e in (1, 2, 3))


def test_signed_incidence_rejects_non_cycles():
    g = MultiGraph(4, (Edge(1, 0, 1), Edge(2, 1, 2), Edge(3, 2, 0),
                       Edge(4, 2, 3), Edge(5, 3, 2), Edge(6, 0, 0)))
    for bad in ((), (1,), (1, 2), (6, 1, 2, 3), (1, 2, 3, 4, 5), (9,)):
        with pytest.raises(InputError):
            signed_incidence(g, bad)


def test_triangle_bonds():
    g = MultiGraph(3, (Edge(1, 0, 1), Edge(2, 1, 2), Edge(3, 2, 0)))
    assert enumerate_bonds(g) == ((1, 2), (1, 3), (2, 3))


def test_bonds_match_minimal_cut_oracle(corpus):
    for g in corpus:
        got = list(enumerate_bonds(g))
        assert got == oracles.minimal_cuts(g.num_vertices, endpoints_of(g))


def test_bonds_skip_loops_and_other_components():
    g = MultiGraph(3, (Edge(1, 0, 1), Edge(2, 1, 1), Edge(3, 2, 2)))
    assert enumerate_bonds(g) == ((1,),)


def test_linear_order():
    g = MultiGraph(3, (Edge(1, 0, 1), Edge(2, 1, 2), Edge(3, 2, 0)))
    order = LinearOrder((3, 1, 2))
    assert order.min_edge((1, 2, 3)) == 3
    assert order.max_edge((1, 2)) == 2
    order.check_covers(g)
    with pytest.raises(InputError):
        LinearOrder((1, 2)).check_covers(g)
    with pytest.raises(InputError):
        LinearOrder((1, 1, 2))
    assert LinearOrder.natural(g).sequence == (1, 2, 3)


def test_broken_cycles_depend_on_order():
    g = MultiGraph(3, (Edge(1, 0, 1), Edge(2, 1, 2), Edge(3, 2, 0)))
    a = zero_assigning(g)
    assert broken_cycles(g, a) == ((1, 2),)
    assert broken_cycles(g, a, LinearOrder((3, 2, 1))) == ((2, 3),)


def test_broken_cycles_skip_positive_values():
    g = MultiGraph(2, (Edge(1, 0, 1), Edge(2, 0, 1), Edge(3, 0, 1)))
    values = {(1, 2): 1, (1, 3): 0, (2, 3): 1}
    from groupcolor import from_values
    a = from_values(g, values)
    assert broken_cycles(g, a) == ((1,),)


def test_compatible_sets_k2_and_triangle():
    k2 = MultiGraph(2, (Edge(1, 0, 1),))
    assert list(compatible_sets(k2)) == [()]
    g = MultiGraph(3, (Edge(1, 0, 1), Edge(2, 1, 2), Edge(3, 2, 0)))
    assert sorted(compatible_sets(g)) == [(), (1, 2, 3), (2, 3), (3,)]


def test_compatible_sets_brute(corpus):
    for g in corpus[:120]:
        bonds = enumerate_bonds(g)
        eids = g.edge_ids()
        expected = []
        for r in range(len(eids) + 1):
            for combo in itertools.combinations(eids, r):
                chosen = set(combo)
                if all(chosen & set(b) != {min(b)} for b in bonds):
                    expected.append(tuple(sorted(combo)))
        assert sorted(compatible_sets(g)) == sorted(expected)
