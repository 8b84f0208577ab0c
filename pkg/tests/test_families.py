import pytest

from ramsey_jahangir import (
    CliqueUnion,
    Complete,
    Cycle,
    DisjointPaths,
    Jahangir,
    Path,
    Thm1,
    Thm2EvenM,
    Thm2OddM,
    Thm3,
    UnsupportedPartitionError,
    Wheel,
    build,
    build_complete_multipartite,
    clique_union_sizes,
    extremal_graph,
    format_spec,
    multipartite_contains_even_cycle,
    parse_spec,
    pattern_edges,
)


def test_pattern_orders():
    assert Path(7).order == 7
    assert Cycle(5).order == 5
    assert Wheel(6).order == 7
    assert Jahangir(2, 3).order == 7
    assert DisjointPaths(3, 4).order == 12
    assert Complete(5).order == 5
    assert CliqueUnion((4, 1)).order == 5


def test_pattern_validation():
    with pytest.raises(ValueError):
        Path(0)
    with pytest.raises(ValueError):
        Cycle(2)
    with pytest.raises(ValueError):
        Wheel(2)
    with pytest.raises(ValueError):
        Jahangir(1, 3)
    with pytest.raises(ValueError):
        Jahangir(2, 1)
    with pytest.raises(ValueError):
        DisjointPaths(0, 3)
    with pytest.raises(ValueError):
        CliqueUnion(())
    with pytest.raises(ValueError):
        CliqueUnion((3, 0))


def test_edge_counts():
    # P_n has n-1 edges, C_n has n, W_k has 2k, J_{s,m} has sm + m
    assert len(pattern_edges(Path(9))) == 8
    assert len(pattern_edges(Cycle(6))) == 6
    assert len(pattern_edges(Wheel(6))) == 12
    assert len(pattern_edges(Jahangir(2, 3))) == 9
    assert len(pattern_edges(Jahangir(3, 4))) == 16
    assert len(pattern_edges(DisjointPaths(2, 5))) == 8
    assert len(pattern_edges(Complete(6))) == 15
    assert len(pattern_edges(CliqueUnion((3, 2)))) == 4


def test_jahangir_layout():
    """Rim 0..sm-1 in a cycle, hub last, spokes every s-th rim vertex."""
    g = build(Jahangir(3, 2))
    hub = 6
    assert g.degree(hub) == 2
    assert g.has_edge(0, hub) and g.has_edge(3, hub)
    assert not g.has_edge(1, hub)
    for i in range(6):
        assert g.has_edge(i, (i + 1) % 6)
    # J_{2,m}: every other rim vertex is a spoke foot
    h = build(Jahangir(2, 3))
    feet = [v for v in range(6) if h.has_edge(v, 6)]
    assert feet == [0, 2, 4]


def test_wheel_is_jahangir_plus_spokes():
    w = build(Wheel(6))
    j = build(Jahangir(2, 3))
    assert set(j.edges()) <= set(w.edges())
    assert w.degree(6) == 6


def test_disjoint_paths_blocks():
    g = build(DisjointPaths(2, 3))
    assert list(g.edges()) == [(0, 1), (1, 2), (3, 4), (4, 5)]


def test_format_round_trip():
    specs = [
        Path(23),
        Cycle(6),
        Wheel(6),
        Jahangir(2, 3),
        DisjointPaths(2, 23),
        Complete(5),
        CliqueUnion((3, 1)),
    ]
    for spec in specs:
        assert parse_spec(format_spec(spec)) == spec


def test_parse_spec_text():
    assert parse_spec("P23") == Path(23)
    assert parse_spec("p23") == Path(23)  # case-insensitive
    assert parse_spec("J2,3") == Jahangir(2, 3)
    assert parse_spec("2P23") == DisjointPaths(2, 23)
    assert parse_spec("K3+K1") == CliqueUnion((3, 1))
    assert parse_spec("k3+k1") == CliqueUnion((3, 1))
    for bad in ("", "P", "X5", "J2", "J2,", "2,3", "P 5", " P5", "K3+", "P-1"):
        with pytest.raises(ValueError):
            parse_spec(bad)


def test_theorem_case_shape_validation():
    Thm1(23, 2, 3)  # fine
    with pytest.raises(ValueError):
        Thm1(23, 3, 3)  # s must be even here
    with pytest.raises(ValueError):
        Thm1(23, 2, 2)  # m >= 3
    with pytest.raises(ValueError):
        Thm2EvenM(12, 2, 2)  # s must be odd here
    with pytest.raises(ValueError):
        Thm2EvenM(12, 3, 3)  # m must be even here
    with pytest.raises(ValueError):
        Thm2OddM(32, 3, 2)  # m must be odd here
    with pytest.raises(ValueError):
        Thm3(0, 23, 2, 3)
    # Shape only: small n is allowed so the constructions stay inspectable.
    Thm1(5, 2, 3)
    Thm2OddM(3, 3, 3)


def test_extremal_shapes():
    g = extremal_graph(Thm1(23, 2, 3))
    assert g.order == 24
    assert clique_union_sizes(g) == (22, 2)

    g = extremal_graph(Thm2EvenM(12, 3, 2))
    assert g.order == 22
    assert clique_union_sizes(g) == (11, 11)

    g = extremal_graph(Thm2OddM(32, 3, 3))
    assert g.order == 63
    assert clique_union_sizes(g) == (31, 31, 1)

    g = extremal_graph(Thm3(2, 23, 2, 3))
    assert g.order == 47
    assert clique_union_sizes(g) == (45, 2)


def test_build_complete_multipartite():
    g = build_complete_multipartite((2, 3))
    assert g.order == 5
    assert g.edge_count() == 6
    assert not g.has_edge(0, 1)
    assert not g.has_edge(2, 3)
    assert g.has_edge(0, 2)


def test_multipartite_even_cycle_two_parts():
    # C_L fits K_{a,b} iff L is even and min(a, b) >= L/2
    assert multipartite_contains_even_cycle((3, 3), 6)
    assert not multipartite_contains_even_cycle((2, 22), 6)
    assert not multipartite_contains_even_cycle((3, 3), 5)
    assert not multipartite_contains_even_cycle((40, 40), 7)


def test_multipartite_even_cycle_three_parts_small():
    assert multipartite_contains_even_cycle((2, 2, 2), 6)
    # C_4 = a-c-b-d-a lives in K_{1,1,2} even though no two parts suffice
    assert multipartite_contains_even_cycle((1, 1, 2), 4)
    assert not multipartite_contains_even_cycle((1, 1, 1), 4)


def test_multipartite_even_cycle_unsupported():
    with pytest.raises(UnsupportedPartitionError):
        multipartite_contains_even_cycle((10, 10, 10), 8)
