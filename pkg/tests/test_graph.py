import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from matroidlimit import graph as G
from matroidlimit import oracles
from matroidlimit.graph import Graph, GraphError


def test_rejects_loops_multi_edges_and_degree():
    with pytest.raises(GraphError):
        Graph(2, ((0, 0),), 2)
    with pytest.raises(GraphError):
        Graph(2, ((0, 1), (1, 0)), 2)
    with pytest.raises(GraphError):
        Graph(3, ((0, 1), (0, 2)), 1)
    with pytest.raises(GraphError):
        Graph(2, ((0, 5),), 2)


def test_rank_examples():
    p3 = Graph(3, ((0, 1), (1, 2)), 2)
    assert G.normalized_rank(p3, []) == 0
    assert G.normalized_rank(p3, [0]) == Fraction(1, 3)
    assert G.normalized_rank(p3, [0, 1]) == Fraction(2, 3)
    assert G.matroid_rank(p3, [0, 1]) == 2
    assert G.components(p3, [1]) == [[0], [1, 2]]


def test_rank_rejects_bad_edge_ids():
    g = Graph(2, ((0, 1),), 1)
    with pytest.raises(ValueError):
        G.normalized_rank(g, [3])


def test_rank_matches_dfs_oracle(graphs):
    rng = random.Random(5)
    for g in graphs.values():
        for _ in range(30):
            f = [e for e in range(g.edge_count) if rng.random() < 0.5]
            assert G.normalized_rank(g, f) == oracles.brute_rank(g, f)


def test_orientation_is_ignored(graphs):
    rng = random.Random(2)
    for g in graphs.values():
        flipped = g.reversed([e for e in range(g.edge_count) if rng.random() < 0.5])
        for _ in range(10):
            f = [e for e in range(g.edge_count) if rng.random() < 0.5]
            assert G.normalized_rank(g, f) == G.normalized_rank(flipped, f)


def test_relabel_keeps_rank(graphs):
    g = graphs["bull"]
    h = g.relabel([4, 2, 0, 1, 3])
    for f in ([0, 1], [2, 3, 4], list(range(5))):
        assert G.normalized_rank(g, f) == G.normalized_rank(h, f)


def test_involution_symmetry(graphs):
    g = graphs["paw"]
    assert G.involution_symmetry_check(g, [0, 1], [2, 3])


def test_greedy_edge_coloring_is_proper(graphs):
    for g in graphs.values():
        colors = G.greedy_proper_edge_coloring(g)
        assert G.is_proper_edge_coloring(g, colors)
        assert max(colors, default=0) <= 2 * g.degree_bound - 1


def test_serialization_round_trip(graphs, tmp_path):
    for name, g in graphs.items():
        assert G.from_edgelist(G.to_edgelist(g)) == g
        assert G.from_json(G.to_json(g)) == g
        path = tmp_path / f"{name}.json"
        G.save_graph(g, str(path))
        assert G.load_graph(str(path)) == g


@st.composite
def graph_and_subsets(draw):
    n = draw(st.integers(1, 8))
    pairs = [(a, b) for a in range(n) for b in range(a + 1, n)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True, max_size=10)) if pairs else []
    g = Graph(n, tuple(chosen), max(1, n - 1))
    ids = st.sets(st.integers(0, max(0, len(chosen) - 1))) if chosen else st.just(set())
    return g, draw(ids), draw(ids)


@settings(max_examples=200, deadline=None)
@given(graph_and_subsets())
def test_rank_is_normalized_monotone_submodular(case):
    g, a, b = case
    r = lambda f: G.normalized_rank(g, sorted(f))
    assert r(set()) == 0
    assert r(a & b) <= r(a) <= r(a | b) <= 1
    assert r(a | b) + r(a & b) <= r(a) + r(b)
    assert r(a) == G.normalized_rank_vertex_average(g, sorted(a))
