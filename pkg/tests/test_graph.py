import random
from itertools import combinations

import pytest
from hypothesis import given

import oracles
from conftest import bipartite_graphs, graphs
from robustcliq.errors import OddCycle
from robustcliq.graph import (
    Graph,
    VertexSet,
    bipartition,
    common_neighbors,
    cycle_graph,
    independence_number,
    independent_sets,
    induced_subgraph,
    is_bipartite,
    make_grid,
    maximum_matching,
    minimum_vertex_cover,
    path_graph,
    random_graph,
    to_mask,
)


# -- oracles first -----------------------------------------------------------


@given(graphs(max_n=8))
def test_independence_number_matches_brute_force(data):
    n, edges = data
    assert independence_number(Graph(n, edges)) == oracles.alpha(set(edges), range(n))


@given(graphs(max_n=7))
def test_independence_number_of_subset(data):
    n, edges = data
    g = Graph(n, edges)
    w = list(range(0, n, 2))
    assert independence_number(g, VertexSet.of(n, w)) == oracles.alpha(set(edges), w)


@given(graphs(max_n=7))
def test_independent_sets_match_brute_force(data):
    n, edges = data
    g = Graph(n, edges)
    for k in range(1, 4):
        got = [frozenset(s.to_tuple()) for s in independent_sets(g, k)]
        assert len(got) == len(set(got))
        assert set(got) == set(oracles.independent_sets(n, set(edges), k))


def test_independent_sets_are_lexicographic():
    out = [s.to_tuple() for s in independent_sets(make_grid(2, 3), 2)]
    assert out == sorted(out)


@given(bipartite_graphs())
def test_matching_and_cover_sizes(data):
    n, edges = data
    g = Graph(n, edges)
    m = maximum_matching(g)
    cover = minimum_vertex_cover(g)
    assert len(m) == oracles.matching_number(edges)
    assert len(cover) == oracles.cover_number(n, edges)
    assert len(cover) == len(m)  # König
    assert all(a in cover or b in cover for a, b in edges)
    used = [v for e in m for v in e]
    assert len(used) == len(set(used)) and all(g.has_edge(a, b) for a, b in m)


@given(bipartite_graphs())
def test_gallai_identity(data):
    n, edges = data
    g = Graph(n, edges)
    assert independence_number(g) + len(minimum_vertex_cover(g)) == n


# -- grids and small families --------------------------------------------------


@pytest.mark.parametrize("m,n", [(2, 2), (2, 3), (3, 4), (4, 4), (5, 3)])
def test_grid_counts(m, n):
    g = make_grid(m, n)
    assert g.vertex_count == m * n
    assert len(g.edges) == m * (n - 1) + n * (m - 1)
    assert g.is_connected() and not g.has_triangle()
    assert g.cycle_rank() == (m - 1) * (n - 1)
    assert g.labels[0] == "(1,1)" and g.labels[m * n - 1] == f"({m},{n})"


def test_grid_rejects_degenerate():
    with pytest.raises(ValueError):
        make_grid(1, 4)


def test_grid_2_2_is_c4():
    assert make_grid(2, 2).edges == {(0, 1), (0, 2), (1, 3), (2, 3)}
    assert len(cycle_graph(4).edges) == 4


def test_checkerboard_is_independent():
    g = make_grid(5, 3)
    board = to_mask(i * 3 + j for i in range(5) for j in range(3) if (i + j) % 2 == 0)
    assert g.is_independent(board)
    assert independence_number(g) == 8


def test_grid_alpha_is_half_rounded_up():
    for m, n in [(2, 2), (2, 3), (3, 3), (3, 4), (4, 4)]:
        assert independence_number(make_grid(m, n)) == (m * n + 1) // 2


# -- bipartition -----------------------------------------------------------------


def test_bipartition_of_grid():
    g = make_grid(3, 3)
    b = bipartition(g)
    assert b.is_valid_for(g)
    assert sorted(len(b.members(s)) for s in (0, 1)) == [4, 5]


def test_odd_cycle_witness():
    g = cycle_graph(5)
    with pytest.raises(OddCycle) as info:
        bipartition(g)
    w = info.value.witness
    assert len(w) % 2 == 1
    assert all(g.has_edge(w[i], w[(i + 1) % len(w)]) for i in range(len(w)))
    assert not is_bipartite(g) and is_bipartite(path_graph(5))


# -- misc ------------------------------------------------------------------------


def test_vertex_set_ops():
    a = VertexSet.of(5, [0, 2])
    b = VertexSet.of(5, [2, 3])
    assert (a | b).to_tuple() == (0, 2, 3)
    assert (a & b).to_tuple() == (2,)
    assert a.complement().to_tuple() == (1, 3, 4)
    assert len(a) == 2 and 2 in a and 1 not in a


def test_induced_subgraph_relabels():
    g = make_grid(2, 3)
    sub = induced_subgraph(g, [1, 2, 4, 5])
    assert sub.original == (1, 2, 4, 5)
    assert sub.graph.edges == {(0, 1), (0, 2), (1, 3), (2, 3)}


def test_common_neighbors():
    g = make_grid(3, 3)
    assert common_neighbors(g, 1, 3).to_tuple() == (0, 4)


def test_json_round_trip():
    g = make_grid(3, 2)
    again = Graph.from_json(g.to_json())
    assert again.edges == g.edges and again.labels == g.labels
    assert again.to_json() == g.to_json()


def test_random_graph_seeded():
    a = random_graph(8, 0.4, random.Random(3))
    b = random_graph(8, 0.4, random.Random(3))
    assert a.edges == b.edges


def test_graph_rejects_loops_and_bad_vertices():
    with pytest.raises(ValueError):
        Graph(3, [(1, 1)])
    with pytest.raises(ValueError):
        Graph(3, [(0, 3)])


def test_all_pairs_has_edge():
    g = make_grid(2, 2)
    for a, b in combinations(range(4), 2):
        assert g.has_edge(a, b) == ((a, b) in g.edges)
        assert g.has_edge(b, a) == g.has_edge(a, b)
