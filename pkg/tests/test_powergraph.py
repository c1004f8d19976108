import pytest

from catalog import CATALOG, catalog_up_to, group
from oracles import oracle_power_edges, oracle_totient
from powercograph.cograph import is_cograph
from powercograph.graph import Graph
from powercograph.groups.builders import cycles_to_perm
from powercograph.numtheory import is_prime_power
from powercograph.powergraph import (
    derived_graph,
    directed_power_graph,
    edge_count_formula,
    enhanced_power_graph,
    gk_graph,
    is_eulerian,
    p2_restriction,
    p2_vertices,
    power_graph,
    reduced_power_graph,
)


def test_directed_examples():
    assert directed_power_graph(group("cyclic:1")).arc_count() == 0
    assert directed_power_graph(group("cyclic:5")).arc_count() == 16
    D = directed_power_graph(group("cyclic:2"))
    assert D.arc_count() == 1 and D.has_arc(1, 0) and not D.has_arc(0, 1)


def test_power_graph_examples():
    P = power_graph(group("cyclic:5"))
    assert P.edge_count() == 10
    assert all(P.degree(v) == 4 for v in range(5))
    assert power_graph(group("cyclic:6")).edge_count() == 13
    assert power_graph(group("sym:3")).edge_count() == 6


def test_derived_examples():
    gk = gk_graph(group("cyclic:6"))
    assert gk.vertex_labels == [2, 3] and gk.edge_count() == 1
    gk = derived_graph(group("alt:5"), "gk")
    assert gk.vertex_labels == [2, 3, 5] and gk.edge_count() == 0
    red = reduced_power_graph(group("cyclic:4"))
    assert red.n == 3 and red.edge_count() == 3
    with pytest.raises(ValueError):
        derived_graph(group("cyclic:4"), "bogus")


def test_edge_count_formula_examples():
    assert edge_count_formula(group("cyclic:1")) == 0
    assert edge_count_formula(group("cyclic:6")) == 13
    assert edge_count_formula(group("cyclic:5")) == 10


def test_p2_examples():
    assert len(p2_vertices(group("cyclic:8"))) == 3
    assert len(p2_vertices(group("alt:5"))) == 59
    assert len(p2_vertices(group("cyclic:30"))) == 30 - 1 - oracle_totient(30)
    assert p2_restriction(group("cyclic:30")).n == 21


@pytest.mark.parametrize("text", catalog_up_to(200))
def test_power_graph_matches_oracle(text):
    G = group(text)
    P = power_graph(G)
    assert set(P.edges()) == oracle_power_edges(G)


@pytest.mark.parametrize("text", CATALOG)
def test_bullet_facts(text):
    G = group(text)
    P = power_graph(G)
    P.check()
    assert P.edge_count() == edge_count_formula(G)
    assert P.is_connected()
    assert is_eulerian(P) == (G.order % 2 == 1)
    complete = P.edge_count() == G.order * (G.order - 1) // 2
    assert complete == (G.order == 1 or (G.is_cyclic() and is_prime_power(G.order)))
    assert P.is_subgraph_of(enhanced_power_graph(G))


@pytest.mark.parametrize("text", catalog_up_to(2000))
def test_directed_structure(text):
    G = group(text)
    D = directed_power_graph(G)
    assert D.is_transitive()
    for x in range(G.order):
        for y in range(G.order):
            if x != y and D.has_arc(x, y) and D.has_arc(y, x):
                assert G.cyclic_subgroup(x) == G.cyclic_subgroup(y)


@pytest.mark.parametrize("text", catalog_up_to(2000))
def test_cograph_status_agrees_on_full_reduced_and_p2(text):
    G = group(text)
    a = is_cograph(power_graph(G))
    b = is_cograph(reduced_power_graph(G)) if G.order > 1 else a
    c = is_cograph(p2_restriction(G)) if G.order > 1 else a
    assert a == b == c


def test_p2_restriction_is_induced_subgraph():
    G = group("sym:5")
    P = power_graph(G)
    R = p2_restriction(G)
    assert R.rows == P.induced(R.vertex_labels).rows


def test_sym6_path_from_three_cycles_and_transposition():
    G = group("sym:6")
    p, q, r, x, y, z = 1, 2, 3, 4, 5, 6
    path = [
        cycles_to_perm(6, [(p, q, r), (x, y)]),
        cycles_to_perm(6, [(x, y)]),
        cycles_to_perm(6, [(q, r, z), (x, y)]),
        cycles_to_perm(6, [(q, z, r)]),
    ]
    vs = [G.index[k] for k in path]
    P = power_graph(G)
    sub = P.induced(vs)
    assert sorted(sub.edges()) == [(0, 1), (1, 2), (2, 3)]


def test_hex_round_trip():
    P = power_graph(group("dihedral:5"))
    assert Graph.from_hex(P.to_hex()).rows == P.rows
