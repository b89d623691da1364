import pytest
from hypothesis import given, settings, strategies as st

from insepsurf.algebra import GF2k
from insepsurf.localres import (
    D4,
    D8,
    E8,
    ELLIPTIC_19_0,
    A1,
    DualGraph,
    LocalVF,
    NotIsolated,
    blowup_once,
    catalog_graph,
    classify_pair,
    fundamental_cycle,
    match_graph,
    resolve,
)


def test_order_table():
    assert classify_pair(1, 1) == A1
    assert classify_pair(2, 2) == D4
    assert classify_pair(4, 2) == D8 and classify_pair(2, 4) == D8
    assert classify_pair(4, 4) == ELLIPTIC_19_0
    assert str(classify_pair(6, 4)) == "Unclassified(6,4)"
    assert not classify_pair(3, 5).classified
    assert classify_pair(4, 2, "poles") == E8


# expected outcomes fixed by hand: blow-up counts and types
ZEROS = [((1, 1), "A1", 1), ((2, 2), "D4", 4), ((4, 2), "D8", 8), ((2, 4), "D8", 8), ((4, 4), "Elliptic19_0", 6)]


@pytest.mark.parametrize("ab,name,blowups", ZEROS)
def test_engine_matches_table_at_zeros(ab, name, blowups):
    res = resolve(LocalVF(*ab, "zeros"))
    assert str(res.type) == name == str(classify_pair(*ab))
    assert res.matched
    assert res.blowups == blowups
    assert res.graph.is_negative_definite()


@pytest.mark.parametrize("ab,name", [((2, 2), "D4"), ((4, 2), "E8"), ((2, 4), "E8"), ((4, 4), "Elliptic19_0")])
def test_engine_at_poles(ab, name):
    res = resolve(LocalVF(*ab, "poles"))
    assert str(res.type) == name == str(classify_pair(*ab, "poles"))


def test_pole_64_is_unclassified():
    res = resolve(LocalVF(6, 4, "poles"))
    assert not res.matched
    assert str(res.type) == "Unclassified(6,4)"


def test_elliptic_graph_shape():
    res = resolve(LocalVF(4, 4, "zeros"))
    g = res.graph
    assert sorted(g.selfint) == [-3, -2, -2, -2, -2, -2]
    assert res.multiplicity == 16
    Z, Z2, pa = fundamental_cycle(g)
    assert (Z2, pa) == (-2, 1)


@pytest.mark.parametrize("name,pa", [("A1", 0), ("D4", 0), ("D8", 0), ("E8", 0), ("Elliptic19_0", 1)])
def test_fundamental_cycles(name, pa):
    Z, Z2, p = fundamental_cycle(catalog_graph(name))
    assert Z2 == -2 and p == pa


def test_d4_cycle():
    Z, _, _ = fundamental_cycle(catalog_graph("D4"))
    assert Z == [2, 1, 1, 1]


def test_elliptic_cycle():
    Z, _, _ = fundamental_cycle(catalog_graph("Elliptic19_0"))
    # centre twice, tips once: Z.E_c = -6 + 5 = -1, Z.tip = 0
    assert Z == [2, 1, 1, 1, 1, 1]


def test_disjoint_minus2():
    assert catalog_graph("D4").max_independent_minus2() == 3
    assert catalog_graph("D8").max_independent_minus2() == 5
    assert catalog_graph("E8").max_independent_minus2() == 4
    assert catalog_graph("Elliptic19_0").max_independent_minus2() == 5


def test_match_and_isomorphism():
    # relabel D4 with the centre last
    g = DualGraph([-2] * 4, [0] * 4, {(0, 3): 1, (1, 3): 1, (2, 3): 1})
    assert match_graph(g) == D4
    assert not catalog_graph("D8").isomorphic(catalog_graph("E8"))


def test_first_blowup_of_a1():
    v = LocalVF(1, 1, "zeros")
    P, Q, _ = v.polys()
    out = blowup_once(P, Q, GF2k(1))
    # x d/dx + y d/dy is radial: the exceptional curve is not integral
    assert out.integral is False


def test_rejections():
    with pytest.raises(NotIsolated):
        LocalVF(0, 2).check()
    with pytest.raises(ValueError):
        LocalVF(1, 1, "poles").check()
    with pytest.raises(ValueError):
        LocalVF(2, 2, "zeros", u=(1,), v=(1, 1)).check()  # y^2 (1 + y) d/dy is not additive


@settings(max_examples=10, deadline=None)
@given(st.sampled_from([(2, 2), (4, 2), (2, 4)]), st.lists(st.integers(0, 1), min_size=1, max_size=5))
def test_even_unit_perturbations_do_not_change_the_type(ab, tail):
    # units in x^2, y^2 keep the field additive; the type should not move
    u = [1]
    for c in tail:
        u += [0, c]
    res = resolve(LocalVF(*ab, "zeros", u=tuple(u), v=(1,)))
    assert res.type == classify_pair(*ab)
