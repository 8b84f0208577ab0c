import random

import pytest

from ramsey_jahangir import (
    Graph,
    Graph6Error,
    add_edge,
    clique_union_sizes,
    complement,
    complete,
    components,
    disjoint_union,
    empty,
    from_edges,
    from_graph6,
    induced,
    relabel,
    to_graph6,
)

from helpers_naive import naive_graph6, random_graph


def test_empty_and_complete():
    e = empty(5)
    assert e.edge_count() == 0
    k = complete(5)
    assert k.edge_count() == 10
    assert all(k.degree(v) == 4 for v in range(5))
    assert complement(e) == k
    assert complement(k) == e


def test_from_edges_rejects_bad_input():
    with pytest.raises(ValueError):
        from_edges(3, [(0, 3)])
    with pytest.raises(ValueError):
        from_edges(3, [(1, 1)])


def test_graph_rejects_self_loops_and_bad_rows():
    with pytest.raises(ValueError):
        Graph(2, (1, 0))  # vertex 0 adjacent to itself
    with pytest.raises(ValueError):
        Graph(2, (0,))
    with pytest.raises(ValueError):
        Graph(1, (2,))  # bit outside the vertex range


def test_validate_catches_asymmetry():
    g = Graph(2, (2, 0))  # 0 says it has 1, but 1 disagrees
    with pytest.raises(ValueError):
        g.validate()


def test_edges_are_sorted_pairs():
    g = from_edges(4, [(2, 1), (3, 0), (0, 1)])
    assert list(g.edges()) == [(0, 1), (0, 3), (1, 2)]


def test_disjoint_union_shifts_second_block():
    g = disjoint_union(complete(3), complete(2))
    assert g.order == 5
    assert g.has_edge(3, 4)
    assert not any(g.has_edge(u, v) for u in range(3) for v in (3, 4))


def test_induced_returns_index_map():
    g = from_edges(5, [(0, 2), (2, 4), (1, 3)])
    sub, idx = induced(g, [4, 0, 2])
    assert idx == (0, 2, 4)
    assert sub.order == 3
    assert list(sub.edges()) == [(0, 1), (1, 2)]


def test_relabel_round_trip():
    rng = random.Random(11)
    for _ in range(25):
        g = random_graph(rng, 8)
        perm = list(range(8))
        rng.shuffle(perm)
        h = relabel(g, perm)
        assert h.edge_count() == g.edge_count()
        inverse = [0] * 8
        for v, p in enumerate(perm):
            inverse[p] = v
        assert relabel(h, inverse) == g


def test_add_edge():
    g = empty(3)
    g = add_edge(g, 0, 2)
    assert g.has_edge(0, 2) and g.has_edge(2, 0)
    assert add_edge(g, 0, 2) == g  # idempotent
    with pytest.raises(ValueError):
        add_edge(g, 0, 0)


def test_components_ordering():
    g = from_edges(7, [(1, 4), (2, 5), (5, 6)])
    assert components(g) == [[0], [1, 4], [2, 5, 6], [3]]


def test_clique_union_sizes():
    g = disjoint_union(complete(4), disjoint_union(complete(1), complete(3)))
    assert clique_union_sizes(g) == (4, 3, 1)
    assert clique_union_sizes(empty(3)) == (1, 1, 1)
    # a path is not a clique union
    assert clique_union_sizes(from_edges(3, [(0, 1), (1, 2)])) is None


# graph6 -----------------------------------------------------------------


def test_graph6_known_codes():
    # codes computed by hand from the format definition
    assert to_graph6(empty(0)) == "?"
    assert to_graph6(complete(2)) == "A_"
    assert to_graph6(empty(2)) == "A?"
    assert to_graph6(from_edges(5, [(0, 2), (0, 4), (1, 3), (3, 4)])) == "DQc"


def test_graph6_matches_independent_encoder():
    rng = random.Random(99)
    for order in (0, 1, 2, 5, 13, 62, 63, 100):
        for _ in range(5):
            g = random_graph(rng, order, 0.4)
            assert to_graph6(g) == naive_graph6(order, g.edges())


def test_graph6_round_trip():
    rng = random.Random(5)
    for _ in range(60):
        order = rng.randrange(0, 30)
        g = random_graph(rng, order)
        assert from_graph6(to_graph6(g)) == g


def test_graph6_rejects_garbage():
    for junk in ("", " ", "A", "A?extra", chr(200), "~~"):
        with pytest.raises(Graph6Error):
            from_graph6(junk)
