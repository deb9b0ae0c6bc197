import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hamspec.errors import DuplicateEdge, InvalidEdge, InvalidSize, VertexOutOfRange
from hamspec.graph import (
    build_graph,
    complement,
    connected_components,
    edge_count_between,
    edges_inside,
    is_connected,
    neighborhood,
    relabel,
    volume,
)
from hamspec.generators import path, star

TRIANGLE = build_graph(3, [(0, 1), (1, 2), (2, 0)])


@st.composite
def graphs(draw, max_n=8):
    n = draw(st.integers(1, max_n))
    pairs = list(itertools.combinations(range(n), 2))
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True) if pairs else st.just([]))
    return build_graph(n, chosen)


def ordered_pairs_oracle(g, x, y):
    # count ordered (u, v) with u in X, v in Y straight from the edge list
    x, y = set(x), set(y)
    return sum((u in x and v in y) + (v in x and u in y) for u, v in g.edges())


def test_triangle():
    assert TRIANGLE.degrees == (2, 2, 2)
    assert TRIANGLE.m == 3


def test_single_edge():
    g = build_graph(2, [(0, 1)])
    assert g.m == 1 and g.degrees == (1, 1)


@pytest.mark.parametrize(
    "n, edges, err",
    [
        (3, [(0, 1), (0, 1)], DuplicateEdge),
        (3, [(0, 1), (1, 0)], DuplicateEdge),
        (3, [(1, 1)], InvalidEdge),
        (3, [(0, 3)], VertexOutOfRange),
        (3, [(-1, 2)], VertexOutOfRange),
        (0, [], InvalidSize),
    ],
)
def test_build_errors(n, edges, err):
    with pytest.raises(err):
        build_graph(n, edges)


def test_volume():
    assert volume(TRIANGLE, range(3)) == 6
    assert volume(TRIANGLE, []) == 0
    assert volume(star(4), {0}) == 3


def test_edge_count_between_examples():
    assert edge_count_between(TRIANGLE, range(3), range(3)) == 6
    assert edge_count_between(TRIANGLE, {0}, {1}) == 1
    assert edge_count_between(path(3), {0, 1}, {1, 2}) == 2


def test_neighborhood_examples():
    assert neighborhood(TRIANGLE, {0}) == {1, 2}
    assert neighborhood(TRIANGLE, range(3)) == frozenset()
    assert neighborhood(path(4), {1}) == {0, 2}


def test_components_examples():
    assert connected_components(TRIANGLE)[0] == 1
    assert connected_components(build_graph(4, [(0, 1), (2, 3)]))[0] == 2
    assert connected_components(build_graph(3, []))[0] == 3


@settings(max_examples=200, deadline=None)
@given(graphs(), st.data())
def test_edge_count_matches_enumeration(g, data):
    x = data.draw(st.sets(st.integers(0, g.n - 1)))
    y = data.draw(st.sets(st.integers(0, g.n - 1)))
    assert edge_count_between(g, x, y) == ordered_pairs_oracle(g, x, y)
    assert edge_count_between(g, x, x) == 2 * edges_inside(g, x)
    assert edge_count_between(g, x, range(g.n)) == volume(g, x)


@settings(max_examples=200, deadline=None)
@given(graphs())
def test_graph_invariants(g):
    for u in range(g.n):
        assert u not in g.adjacency[u]
        assert len(set(g.adjacency[u])) == len(g.adjacency[u])
        for v in g.adjacency[u]:
            assert u in g.adjacency[v]
    assert 2 * g.m == sum(g.degrees)


@settings(max_examples=100, deadline=None)
@given(graphs(), st.data())
def test_neighborhood_excludes_set(g, data):
    x = data.draw(st.sets(st.integers(0, g.n - 1)))
    expected = {v for u in x for v in g.adjacency[u]} - x
    assert neighborhood(g, x) == expected
    assert complement(g, x) | x == set(range(g.n))


@settings(max_examples=100, deadline=None)
@given(graphs())
def test_components_label_reachability(g):
    count, labels = connected_components(g)
    assert len(set(labels)) == count
    for u, v in g.edges():
        assert labels[u] == labels[v]
    assert is_connected(g) == (count == 1)


@settings(max_examples=50, deadline=None)
@given(graphs(), st.randoms(use_true_random=False))
def test_relabel_preserves_structure(g, rnd):
    perm = list(range(g.n))
    rnd.shuffle(perm)
    h = relabel(g, perm)
    assert h.m == g.m
    assert sorted(h.degrees) == sorted(g.degrees)
    for u, v in g.edges():
        assert h.has_edge(perm[u], perm[v])
