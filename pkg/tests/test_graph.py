import io

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import cycle_graph, graphs, path_graph, star_graph
from oracles import INF, edge_list, floyd_warshall
from packmeasure import (
    UNREACHABLE,
    EmptyGraphError,
    Graph,
    GraphParseError,
    bfs_distances,
    degree,
    load_edge_list,
    multi_source_distances,
    shell_sizes,
    write_edge_list,
)


def test_load_collapses_duplicates_and_drops_loops():
    g = load_edge_list(b"1 2\n2 1\n2 2\n1 3\n")
    assert (g.n, g.m) == (3, 2)
    assert g.load_stats == {"arcs": 4, "self_loops": 1, "duplicates": 1}


def test_load_skips_comments_and_keeps_first_appearance_order():
    text = "# Directed graph\n# FromNodeId ToNodeId\n\n30\t10\n10\t20\n"
    g = load_edge_list(io.StringIO(text))
    assert g.labels.tolist() == [30, 10, 20]
    assert g.index_of(20) == 2
    assert g.adjacency == [[1], [0, 2], [1]]


def test_load_from_path(tmp_path):
    path = tmp_path / "g.txt"
    path.write_text("5 6\n6 7\n")
    g = load_edge_list(path)
    assert (g.n, g.m) == (3, 2)


@pytest.mark.parametrize("text,lineno", [("1 2\n1 x\n", 2), ("# c\n1 2 3\n", 2), ("7\n", 1)])
def test_load_reports_bad_line(text, lineno):
    with pytest.raises(GraphParseError) as err:
        load_edge_list(text.encode())
    assert err.value.lineno == lineno
    assert f"line {lineno}" in str(err.value)


@pytest.mark.parametrize("text", ["", "# only a comment\n", "4 4\n"])
def test_load_empty_edge_set(text):
    with pytest.raises(EmptyGraphError):
        load_edge_list(text.encode())


def test_degree():
    assert degree(star_graph(4), 0) == 4
    assert degree(Graph.from_edges([(0, 1)], n=3), 2) == 0
    assert degree(path_graph(3), 1) == 2
    with pytest.raises(IndexError):
        degree(path_graph(3), 3)


def test_bfs_examples():
    assert bfs_distances(path_graph(3), 0).dist.tolist() == [0, 1, 2]
    two_edges = Graph.from_edges([(0, 1), (2, 3)])
    assert bfs_distances(two_edges, 0).dist.tolist() == [0, 1, UNREACHABLE, UNREACHABLE]
    for s in range(5):
        assert sorted(bfs_distances(cycle_graph(5), s).dist.tolist()) == [0, 1, 1, 2, 2]
    with pytest.raises(IndexError):
        bfs_distances(path_graph(3), -1)


def test_shell_sizes_examples():
    assert shell_sizes(star_graph(4), 0) == [4]
    assert shell_sizes(star_graph(4), 1) == [1, 3]
    assert shell_sizes(path_graph(5), 0) == [1, 1, 1, 1]
    assert shell_sizes(Graph.from_edges([], n=2), 0) == []


def test_multi_source_depth_limit():
    dist = multi_source_distances(path_graph(7), [0, 6], max_depth=2)
    assert dist.tolist() == [0, 1, 2, UNREACHABLE, 2, 1, 0]


@settings(max_examples=150, deadline=None)
@given(graphs(max_n=50))
def test_bfs_matches_floyd_warshall(g):
    fw = floyd_warshall(g.n, edge_list(g))
    for s in range(g.n):
        expected = [UNREACHABLE if d == INF else d for d in fw[s]]
        assert bfs_distances(g, s).dist.tolist() == expected


@settings(max_examples=100, deadline=None)
@given(graphs(max_n=40))
def test_shells_sum_to_component_size(g):
    for v in range(g.n):
        component = np.count_nonzero(bfs_distances(g, v).dist != UNREACHABLE)
        assert sum(shell_sizes(g, v)) == component - 1


@settings(max_examples=100, deadline=None)
@given(graphs(min_n=2, max_n=25), st.randoms(use_true_random=False))
def test_graph_invariants_and_reorder_idempotence(g, rnd):
    if g.m == 0:
        return
    adj = g.adjacency
    for v, nbrs in enumerate(adj):
        assert v not in nbrs
        assert nbrs == sorted(set(nbrs))
        assert all(v in adj[u] for u in nbrs)
    assert sum(map(len, adj)) == 2 * g.m

    lines = [f"{u} {v}" if rnd.random() < 0.5 else f"{v} {u}" for u, v in edge_list(g)]
    lines += [f"{v} {u}" for u, v in edge_list(g) if rnd.random() < 0.3]
    rnd.shuffle(lines)
    h = load_edge_list("\n".join(lines).encode())
    relabelled = {(min(h.label_of(u), h.label_of(v)), max(h.label_of(u), h.label_of(v)))
                  for u, v in edge_list(h)}
    assert relabelled == set(edge_list(g))


def test_canonical_edge_list_round_trip(tmp_path):
    g = load_edge_list(b"9 3\n3 5\n5 9\n9 3\n")
    out = tmp_path / "canon.txt"
    write_edge_list(g, out)
    text = out.read_text()
    assert text.splitlines()[1:] == ["9\t3", "9\t5", "3\t5"]
    h = load_edge_list(out)
    assert h.labels.tolist() == g.labels.tolist()
    assert h.adjacency == g.adjacency


def test_graph_is_read_only():
    g = path_graph(3)
    with pytest.raises(ValueError):
        g.indices[0] = 2


def test_load_gzip(tmp_path):
    import gzip

    path = tmp_path / "g.txt.gz"
    with gzip.open(path, "wt") as fh:
        fh.write("# c\n1 2\n2 3\n")
    assert load_edge_list(path).m == 2
