from collections import Counter
from itertools import combinations

import pytest

from catalog import CATALOG, HEIS3_C2, catalog_up_to, group
from oracles import oracle_conjugate, oracle_is_nilpotent, oracle_orders, oracle_powers
from powercograph.finite_field import field_for_order
from powercograph.groups import (
    CapExceeded,
    GroupSpec,
    SpecError,
    build_group,
    expected_order,
    heis3_involutions,
    parse_spec,
)
from powercograph.groups.builders import MatrixOps, cycles_to_perm


# -- parsing -------------------------------------------------------------------


@pytest.mark.parametrize("text,want", [
    ("dihedral:6", GroupSpec("dihedral", (6,))),
    ("dp(cyclic:4,cyclic:6)", GroupSpec("dp", (GroupSpec("cyclic", (4,)), GroupSpec("cyclic", (6,))))),
    ("sd(7,6,3)", GroupSpec("sd", (7, 6, 3))),
    (" dp ( cyclic : 4 , sym:3 ) ", GroupSpec("dp", (GroupSpec("cyclic", (4,)), GroupSpec("sym", (3,))))),
    ("m11", GroupSpec("m11")),
    ("heis3", GroupSpec("heis3")),
])
def test_parse_examples(text, want):
    assert parse_spec(text) == want


@pytest.mark.parametrize("text", CATALOG)
def test_canonical_text_round_trips(text):
    spec = parse_spec(text)
    assert parse_spec(str(spec)) == spec


@pytest.mark.parametrize("text", [
    "sd(7,6,2)", "sd(8,2,3)", "sd(7,4,3)", "foo:3", "cyclic", "cyclic:0", "dp(cyclic:2)",
    "psl2:6", "psl3:1", "heis3_c2:45", "cyclic:3 extra", "dp(cyclic:2,cyclic:3", "sym:-1", "",
])
def test_parse_errors(text):
    with pytest.raises(SpecError):
        parse_spec(text)


def test_parse_error_reports_order_problem():
    with pytest.raises(SpecError, match="order 3"):
        parse_spec("sd(7,6,2)")


# -- construction ---------------------------------------------------------------


@pytest.mark.parametrize("text", CATALOG)
def test_catalog_orders_and_axioms(text):
    G = group(text)
    assert G.order == expected_order(parse_spec(text))
    G.check_axioms(samples=2000)
    orders = G.orders
    assert all(G.order % o == 0 for o in orders)
    assert orders[0] == 1
    assert len({G.encoding(i) for i in range(G.order)}) == G.order


@pytest.mark.parametrize("text", ["sym:5", "m11", "psl3:4", "psl2:27", "heis3_c2:7"])
def test_named_orders_full_axioms(text):
    G = group(text)
    G.check_axioms(samples=10_000, seed=1)


def test_known_orders():
    assert group("sym:5").order == 120
    assert group("m11").order == 7920
    assert group("psl3:4").order == 20160
    assert group("dp(cyclic:4,cyclic:6)").order == 24
    assert group("dp(cyclic:4,cyclic:6)").is_abelian()


def test_m11_generators():
    G = group("m11")
    a = cycles_to_perm(11, [tuple(range(1, 12))])
    b = cycles_to_perm(11, [(3, 7, 11, 8), (4, 10, 5, 6)])
    assert {G.keys[i] for i in G.generators} == {a, b}
    assert G.element_order(G.index[a]) == 11


@pytest.mark.parametrize("text", catalog_up_to(1000))
def test_orders_match_oracle(text):
    G = group(text)
    assert G.orders == oracle_orders(G)
    for x in range(0, G.order, max(1, G.order // 50)):
        assert G.cyclic_subgroup(x) == oracle_powers(G, x)


def test_psl27_and_psl32_have_same_order_statistics():
    a, b = group("psl2:7"), group("psl3:2")
    assert a.order == b.order == 168
    assert Counter(a.orders) == Counter(b.orders)


def test_cyclic_subgroup_examples():
    G = group("cyclic:6")
    assert G.cyclic_subgroup(0) == {0}
    assert len(G.cyclic_subgroup(G.index[(1,)])) == 6
    assert len(G.cyclic_subgroup(G.index[(2,)])) == 3
    C12 = group("cyclic:12")
    assert C12.element_order(C12.index[(3,)]) == 4


def test_conjugacy_examples():
    G = group("sym:4")
    t1, t2 = G.index[cycles_to_perm(4, [(1, 2)])], G.index[cycles_to_perm(4, [(3, 4)])]
    dbl = G.index[cycles_to_perm(4, [(1, 2), (3, 4)])]
    assert G.are_conjugate(t1, t1)
    assert G.are_conjugate(t1, t2)
    assert not G.are_conjugate(dbl, t1)


@pytest.mark.parametrize("text", ["sym:4", "dihedral:6", "alt:4", "heis3_c2:0", "sd(7,6,3)"])
def test_conjugacy_matches_oracle(text):
    G = group(text)
    for x, y in combinations(range(G.order), 2):
        if (x * 7 + y) % 5 == 0:
            assert G.are_conjugate(x, y) == oracle_conjugate(G, x, y)


def test_nilpotent_examples():
    assert group("cyclic:12").is_nilpotent()
    assert not group("dihedral:6").is_nilpotent()
    assert group("heis3").is_nilpotent()


@pytest.mark.parametrize("text", catalog_up_to(400))
def test_nilpotent_matches_commuting_oracle(text):
    G = group(text)
    assert G.is_nilpotent() == oracle_is_nilpotent(G)


def _max_cyclic_orders(text):
    subs, trivial = group(text).maximal_cyclic_subgroups()
    return sorted({len(s) for s in subs}), trivial


def test_maximal_cyclic_examples():
    assert _max_cyclic_orders("sym:5") == ([4, 5, 6], True)
    assert _max_cyclic_orders("cyclic:6") == ([6], True)
    assert len(group("cyclic:6").maximal_cyclic_subgroups()[0]) == 1
    assert _max_cyclic_orders("dihedral:6") == ([2, 6], True)


@pytest.mark.parametrize("text", catalog_up_to(720))
def test_maximal_cyclic_matches_inclusion_oracle(text):
    G = group(text)
    cyclics = {frozenset(oracle_powers(G, x)) for x in range(G.order)}
    maximal = {c for c in cyclics if not any(c < d for d in cyclics)}
    subs, trivial = G.maximal_cyclic_subgroups()
    assert set(subs) == maximal and len(subs) == len(maximal)
    want = all(len(a & b) == 1 for a, b in combinations(maximal, 2))
    assert trivial == want


def test_heis3_variants():
    assert len(heis3_involutions()) == len(HEIS3_C2) == 45
    H = group("heis3")
    for phi in heis3_involutions():
        assert sorted(phi) == list(range(27))
        assert any(phi[i] != i for i in range(27))
    for text in HEIS3_C2[:5]:
        G = group(text)
        assert G.order == 54
        assert not G.is_nilpotent()
        assert 6 in G.orders
    assert H.is_nilpotent()


def test_projective_canonical_form_merges_scalar_multiples():
    F = field_for_order(4)
    ops = MatrixOps(F, 3, F.roots_of_unity(3))
    w = F.primitive_element()
    m = ops.diagonal([w, w, w])
    assert ops.canonical(m) == ops.identity()
    g = ops.elementary(0, 1, w)
    assert ops.canonical(tuple(F.mul(w, x) for x in g)) == ops.canonical(g)


def test_cap_exceeded():
    with pytest.raises(CapExceeded):
        build_group("sym:9")
    with pytest.raises(CapExceeded):
        build_group("sym:6", cap=100)


def test_dense_table_limit():
    with pytest.raises(CapExceeded):
        group("m11").cayley_table()
    T = group("sym:4").cayley_table()
    assert len(T) == 24 and T[0] == list(range(24))
