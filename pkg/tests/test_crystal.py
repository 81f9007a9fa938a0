import itertools
import json

import pytest
from hypothesis import given, strategies as st

from conftest import T, pair
from krcrystal.alphabet import STANDARD, GroundData, NodeKind, coroot_pairing, node_kind
from krcrystal.crystal import (
    CrystalGraph,
    apply_e,
    apply_f,
    apply_tensor_rule,
    check_axioms,
    component_bfs,
    decompose,
    eps_phi,
    graph_from_elements,
    is_genuine_hw,
)
from krcrystal.tableaux import (
    TensorElement,
    count_sst,
    enumerate_sst,
    genuine_highest_tableau,
    is_hook,
    is_valid,
    partitions_of,
    weight_of,
)

G22, G34 = GroundData(2, 2), GroundData(3, 4)
small_g = st.sampled_from([G22, GroundData(1, 3), GroundData(3, 1), GroundData(2, 3)])
shapes = st.integers(1, 5).flatmap(lambda k: st.sampled_from(list(partitions_of(k))))


def draw_tableau(data, g, max_cells=5):
    lam = data.draw(st.integers(1, max_cells).flatmap(lambda k: st.sampled_from(list(partitions_of(k)))))
    pool = enumerate_sst(g, lam)
    if not pool:
        return None
    return data.draw(st.sampled_from(pool))


def test_signature_on_letters():
    x = pair(T([1]), T([1]))
    assert apply_f(G22, STANDARD, 1, x) == pair(T([2]), T([1]))
    assert eps_phi(G22, STANDARD, 1, (1, 1)) == (0, 2)
    assert eps_phi(G22, STANDARD, 1, (2, 1)) == (1, 1)


def test_odd_plus_on_highest_rectangle():
    H = genuine_highest_tableau(G34, (5, 5, 5))
    y = apply_f(G34, STANDARD, 3, H)
    assert y == H.replace(2, 4, 4)
    assert is_valid(G34, y)


@pytest.mark.parametrize("lam", [(5, 5, 5), (5, 3, 2, 2), (2, 1), (4, 4, 4, 1)])
def test_highest_killed_by_raising(lam):
    H = genuine_highest_tableau(G34, lam)
    assert all(apply_e(G34, STANDARD, i, H) is None for i in G34.finite_nodes())


def test_odd_node_zero_pairing():
    # node 3 pairs as mu_3 + mu_4, so a filling avoiding 3 and 4 is isolated
    x = T([1, 5], [2])
    assert coroot_pairing(G34, weight_of(G34, x), 3) == 0
    assert eps_phi(G34, STANDARD, 3, x) == (0, 0)


def test_letter_chain():
    graph = component_bfs(G22, STANDARD, (1,), G22.finite_nodes())
    assert len(graph) == 4
    assert sorted((graph.nodes[u], i, graph.nodes[v]) for u, i, v in graph.edges) == [
        ((1,), 1, (2,)), ((2,), 2, (3,)), ((3,), 3, (4,))]


def test_component_of_rectangle_is_whole_sst():
    graph = component_bfs(G34, STANDARD, genuine_highest_tableau(G34, (5, 5, 5)), G34.finite_nodes())
    assert len(graph) == count_sst(G34, (5, 5, 5))


def test_affine_closure_of_pair():
    letters = [T([a]) for a in G22.letters]
    graph = component_bfs(G22, STANDARD, pair(letters[2], letters[1]), G22.nodes)
    assert len(graph) == 16
    assert check_axioms(G22, STANDARD, graph) == []


def test_genuine_shapes():
    H = genuine_highest_tableau(G34, (5, 3, 2, 2))
    assert is_genuine_hw(G34, TensorElement.of(H)) == (5, 3, 2, 2)
    x = pair(T([2]), T([1]))
    assert apply_e(G22, STANDARD, 1, x) is not None
    assert is_genuine_hw(G22, x) is None


def test_decompose_letters_squared():
    pairs = [pair(T([a]), T([b])) for a, b in itertools.product(G22.letters, repeat=2)]
    graph = graph_from_elements(G22, STANDARD, pairs, G22.finite_nodes())
    assert dict(decompose(G22, graph)) == {(2,): 1, (1, 1): 1}


@pytest.mark.parametrize("r,s", [(1, 2), (2, 2), (3, 1), (2, 3)])
def test_single_rectangle_decomposition(r, s):
    graph = graph_from_elements(G22, STANDARD, enumerate_sst(G22, (s,) * r), G22.finite_nodes())
    assert dict(decompose(G22, graph)) == {(s,) * r: 1}


def test_graph_json_round_trip():
    graph = component_bfs(G22, STANDARD, T([1, 2]), G22.finite_nodes())
    again = CrystalGraph.from_json(json.loads(graph.dumps()))
    assert again == graph
    assert again.dumps() == graph.dumps()


def test_dot_export():
    graph = component_bfs(G22, STANDARD, (1,), G22.finite_nodes())
    dot = graph.to_dot()
    assert dot.startswith("digraph crystal {")
    assert dot.count("->") == 3


def test_bad_node_for_order():
    with pytest.raises(ValueError):
        apply_f(G22, STANDARD, 0, T([1, 2], [3]))


@given(small_g, st.data())
def test_tensor_rule_matches_word_rule(g, data):
    a, b = draw_tableau(data, g, 4), draw_tableau(data, g, 4)
    if a is None or b is None:
        return
    x = pair(a, b)
    for i in g.finite_nodes():
        for raising in (False, True):
            word_route = (apply_e if raising else apply_f)(g, STANDARD, i, x)
            assert apply_tensor_rule(g, STANDARD, i, x, raising) == word_route


@given(small_g, st.data())
def test_operators_are_partial_inverses(g, data):
    x = draw_tableau(data, g)
    if x is None:
        return
    for i in g.finite_nodes():
        y = apply_f(g, STANDARD, i, x)
        if y is not None:
            assert is_valid(g, y)
            assert apply_e(g, STANDARD, i, y) == x
        z = apply_e(g, STANDARD, i, x)
        if z is not None:
            assert is_valid(g, z)
            assert apply_f(g, STANDARD, i, z) == x


@given(small_g, st.data())
def test_string_lengths(g, data):
    x = draw_tableau(data, g)
    if x is None:
        return
    for i in g.finite_nodes():
        e, f = eps_phi(g, STANDARD, i, x)
        p = coroot_pairing(g, weight_of(g, x), i)
        if node_kind(g, i) in (NodeKind.EVEN_PLUS, NodeKind.EVEN_MINUS):
            assert f - e == p
        else:
            assert e + f <= 1
            if p == 0:
                assert (e, f) == (0, 0)
            else:
                assert (e, f) != (0, 0)


@given(small_g, shapes)
def test_each_hook_shape_is_one_component(g, lam):
    if not is_hook(g, lam):
        return
    graph = component_bfs(g, STANDARD, genuine_highest_tableau(g, lam), g.finite_nodes())
    assert {x.rows for x in graph.nodes} == {x.rows for x in enumerate_sst(g, lam)}
    assert check_axioms(g, STANDARD, graph) == []
