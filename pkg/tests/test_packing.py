import json

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import complete_graph, graphs, path_graph
from oracles import edge_list, floyd_warshall
from packmeasure import Graph, RequestError, k_d_packing, maximal_d_packing


def test_path_d2():
    assert maximal_d_packing(path_graph(5), 2).members == (1, 4)


def test_clique_d1_single_member():
    assert len(maximal_d_packing(complete_graph(5), 1)) == 1


def test_d0_takes_everything_in_degree_order():
    g = Graph.from_edges([(0, 1), (1, 2), (1, 3), (3, 4)])
    assert maximal_d_packing(g, 0).members == (1, 3, 0, 2, 4)


def test_k_prefix_and_truncation():
    p = k_d_packing(path_graph(5), 1, 2)
    assert p.members == (1,) and not p.truncated
    p = k_d_packing(complete_graph(5), 3, 1)
    assert len(p) == 1 and p.truncated
    g = path_graph(6)
    assert sorted(k_d_packing(g, 10, 0).members) == list(range(6))


def test_empty_graph():
    assert maximal_d_packing(Graph.from_edges([], n=0), 3).members == ()


def test_bad_parameters():
    with pytest.raises(RequestError):
        maximal_d_packing(path_graph(3), -1)
    with pytest.raises(RequestError):
        k_d_packing(path_graph(3), 0, 1)


def test_json_uses_raw_labels():
    g = Graph.from_edges([(0, 1), (1, 2)], labels=[10, 20, 30])
    payload = maximal_d_packing(g, 1).to_json(g)
    assert payload == {"d": 1, "members": [20], "truncated": False}
    json.dumps(payload)


def check_packing(g, packing, d, maximal):
    dist = floyd_warshall(g.n, edge_list(g))
    members = packing.members
    assert len(set(members)) == len(members)
    for i, u in enumerate(members):
        for v in members[i + 1:]:
            assert dist[u][v] > d
    if maximal:
        for w in range(g.n):
            assert any(dist[u][w] <= d for u in members)


@settings(max_examples=150, deadline=None)
@given(graphs(max_n=40), st.integers(0, 6))
def test_packing_properties(g, d):
    packing = maximal_d_packing(g, d)
    check_packing(g, packing, d, maximal=True)
    if g.n:
        deg = g.degrees
        top = max(range(g.n), key=lambda v: (deg[v], -v))
        assert packing.members[0] == top
    assert maximal_d_packing(g, d) == packing


@settings(max_examples=100, deadline=None)
@given(graphs(max_n=40), st.integers(1, 10), st.integers(0, 5))
def test_k_packing_is_prefix(g, k, d):
    full = maximal_d_packing(g, d).members
    part = k_d_packing(g, k, d)
    assert part.members == full[:k]
    assert part.truncated == (len(full) < k)
