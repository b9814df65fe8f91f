from __future__ import annotations

import random

import pytest

from groupcolor import (
    AbelianGroup,
    Assigning,
    BudgetError,
    ContractError,
    Edge,
    EdgeFunction,
    InputError,
    MultiGraph,
    check_admissible,
    contract_edge_function,
    delta,
    format_assigning,
    from_values,
    induced_assigning,
    is_compatible,
    parse_assigning,
    restrict_contract,
    restrict_delete,
    zero_assigning,
)
from groupcolor.assigning import check_total

Z2 = AbelianGroup((2,))
Z3 = AbelianGroup((3,))
Z22 = AbelianGroup((2, 2))


def triangle() -> MultiGraph:
    return MultiGraph(3, (Edge(1, 0, 1), Edge(2, 1, 2), Edge(3, 2, 0)))


def theta() -> MultiGraph:
    return MultiGraph(2, (Edge(1, 0, 1), Edge(2, 0, 1), Edge(3, 0, 1)))


def test_assigning_normalizes_and_validates():
    a = Assigning({(3, 1, 2): 1})
    assert a.value((1, 2, 3)) == 1
    assert a.value((2, 3, 1)) == 1
    assert (3, 2, 1) in a and len(a) == 1
    assert a.items() == (((1, 2, 3), 1),)
    with pytest.raises(InputError):
        Assigning({(1,): 2})
    with pytest.raises(InputError):
        Assigning([((1, 2), 0), ((2, 1), 1)])
    with pytest.raises(InputError):
        a.value((1, 2))
    Assigning([((1, 2), 0), ((2, 1), 0)])


def test_equality_ignores_admissibility_flag():
    a = Assigning({(1, 2): 1}, known_admissible=True)
    b = Assigning({(1, 2): 1}, known_admissible=False)
    assert a == b and hash(a) == hash(b)
    assert a != Assigning({(1, 2): 0})


def test_check_total():
    g = triangle()
    check_total(g, Assigning({(1, 2, 3): 0}))
    with pytest.raises(InputError):
        check_total(g, Assigning({}))
    with pytest.raises(InputError):
        check_total(g, Assigning({(1, 2, 3): 0, (1, 2): 1}))
    with pytest.raises(InputError):
        from_values(g, {})


def test_induced_values():
    g = triangle()
    assert induced_assigning(g, Z3, EdgeFunction.zero(Z3, g)) == zero_assigning(g)
    a = induced_assigning(g, Z3, EdgeFunction(Z3, {1: (1,), 2: (0,), 3: (0,)}))
    assert a.value((1, 2, 3)) == 1
    assert a.known_admissible
    b = induced_assigning(g, Z3, EdgeFunction(Z3, {1: (1,), 2: (1,), 3: (1,)}))
    assert b.value((1, 2, 3)) == 0


def test_induced_respects_orientation():
    same_way = MultiGraph(2, (Edge(1, 0, 1), Edge(2, 0, 1)))
    opposed = MultiGraph(2, (Edge(1, 0, 1), Edge(2, 1, 0)))
    f = EdgeFunction(Z3, {1: (1,), 2: (1,)})
    assert induced_assigning(same_way, Z3, f).value((1, 2)) == 0
    assert induced_assigning(opposed, Z3, f).value((1, 2)) == 1


def test_loop_values():
    g = MultiGraph(1, (Edge(1, 0, 0),))
    assert induced_assigning(g, Z2, EdgeFunction.zero(Z2, g)).loop_value(1) == 0
    assert induced_assigning(g, Z2, EdgeFunction(Z2, {1: (1,)})).loop_value(1) == 1


def test_restrict_delete():
    g = triangle()
    a = from_values(g, {(1, 2, 3): 1})
    assert restrict_delete(g, a, 1) == Assigning({})
    with pytest.raises(InputError):
        restrict_delete(g, a, 9)


def test_restrict_contract_triangle_and_digon():
    g = triangle()
    a = from_values(g, {(1, 2, 3): 1})
    b = restrict_contract(g, a, 1)
    assert b.value((2, 3)) == 1
    digon = g.contract(1)
    c = restrict_contract(digon, b, 2)
    assert c.loop_value(3) == 1
    with pytest.raises(ContractError):
        restrict_contract(MultiGraph(1, (Edge(1, 0, 0),)), Assigning({(1,): 0}), 1)


def test_restrict_contract_keeps_untouched_cycles():
    g = MultiGraph(3, (Edge(1, 0, 1), Edge(2, 1, 2), Edge(3, 1, 2)))
    a = from_values(g, {(2, 3): 1})
    b = restrict_contract(g, a, 1)
    assert b.value((2, 3)) == 1


def test_minor_consistency_with_induced(corpus):
    rng = random.Random(1117)
    sample = corpus[::19]
    for g in sample:
        if not g.edges:
            continue
        for group in (Z3, Z22):
            f = EdgeFunction(group, {
                eid: tuple(rng.randrange(m) for m in group.moduli)
                for eid in g.edge_ids()
            })
            a = induced_assigning(g, group, f)
            eid = rng.choice(g.edge_ids())
            got = restrict_delete(g, a, eid)
            sub = EdgeFunction(group, {
                x: f.value(x) for x in g.edge_ids() if x != eid})
            assert got == induced_assigning(g.delete(eid), group, sub)
            links = [x for x in g.edge_ids() if not g.is_loop(x)]
            if not links:
                continue
            eid = rng.choice(links)
            got = restrict_contract(g, a, eid)
            fc = contract_edge_function(g, f, eid)
            assert got == induced_assigning(g.contract(eid), group, fc)


def test_compatibility_indicator():
    g = triangle()
    a = from_values(g, {(1, 2, 3): 1})
    assert is_compatible(g, a, (1, 2))
    assert not is_compatible(g, a, (1, 2, 3))
    assert delta(g, a, ()) == 1
    assert delta(g, a, (3, 2, 1)) == 0
    z = zero_assigning(g)
    assert delta(g, z, (1, 2, 3)) == 1


def test_admissibility_witness_found():
    g = triangle()
    a = from_values(g, {(1, 2, 3): 1})
    found = check_admissible(g, a, max_order=4)
    assert found is not None
    group, f = found
    assert group.order == 2
    assert induced_assigning(g, group, f) == a


def test_admissibility_rejects_theta_with_single_one():
    g = theta()
    a = from_values(g, {(1, 2): 1, (1, 3): 0, (2, 3): 0})
    assert check_admissible(g, a, max_order=6) is None


def test_admissibility_finds_theta_with_two_ones():
    g = theta()
    a = from_values(g, {(1, 2): 1, (1, 3): 1, (2, 3): 0})
    found = check_admissible(g, a, max_order=4)
    assert found is not None
    group, f = found
    assert induced_assigning(g, group, f) == a


def test_admissibility_budget():
    g = theta()
    a = from_values(g, {(1, 2): 1, (1, 3): 0, (2, 3): 0})
    with pytest.raises(BudgetError):
        check_admissible(g, a, max_order=6, budget=10)


def test_parse_format_assigning():
    g = triangle()
    text = "cycle 1 2 3 = 1\n"
    a = parse_assigning(text, g)
    assert a.value((1, 2, 3)) == 1
    assert not a.known_admissible
    assert format_assigning(a) == text
    assert parse_assigning("# note\ncycle 3 2 1 = 1\n", g) == a
    for bad in ("", "cycle 1 2 = 1\n", "cycle 1 2 3 = 2\n", "loop 1 = 0\n",
                "cycle 1 2 3 = 1\ncycle 3 2 1 = 1\n", "cycle 1 2 3 =\n",
                "cycle 1 2 3 = 1 1\n"):
        with pytest.raises(InputError):
            parse_assigning(bad, g)
    assert format_assigning(Assigning({})) == ""
