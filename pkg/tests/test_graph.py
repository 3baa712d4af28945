import itertools

import networkx as nx
import pytest

from sudoku_chroma.coloring import chromatic_number, clique_number
from sudoku_chroma.errors import InvalidClique, InvalidEdge, InvalidParameter
from sudoku_chroma.graph import (
    Graph,
    add_apex,
    attach_clique,
    build_bistar,
    build_complete,
    build_complete_bipartite,
    build_cycle,
    build_path,
    corona,
    degree,
    disjoint_union,
    embed_kplus1,
    induced_subgraph,
    is_bipartite,
    is_connected,
    max_degree,
    pendant_vertices,
)
from sudoku_chroma.enumeration import are_isomorphic, enumerate_connected


def edges(G):
    return G.sorted_edges()


def test_graph_rejects_loops_and_duplicates():
    with pytest.raises(InvalidParameter):
        Graph.from_edges(3, [(1, 1)])
    with pytest.raises(InvalidParameter):
        Graph.from_edges(3, [(0, 1), (1, 0)])
    with pytest.raises(InvalidParameter):
        Graph.from_edges(3, [(0, 3)])


def test_graph_is_immutable():
    G = build_path(3)
    with pytest.raises(AttributeError):
        G.n = 4


class TestPath:
    def test_single_vertex(self):
        G = build_path(1)
        assert G.n == 1 and G.m == 0

    def test_p4(self):
        assert edges(build_path(4)) == [(0, 1), (1, 2), (2, 3)]

    def test_p6_fixture(self):
        G = build_path(6)
        assert G.n == 6 and edges(G) == [(i, i + 1) for i in range(5)]

    def test_zero_rejected(self):
        with pytest.raises(InvalidParameter):
            build_path(0)


class TestCycle:
    def test_triangle(self):
        assert build_cycle(3) == build_complete(3)

    def test_c4_bipartite(self):
        assert is_bipartite(build_cycle(4))

    def test_c6(self):
        G = build_cycle(6)
        assert G.m == 6 and all(degree(G, v) == 2 for v in G.vertices())
        assert G.has_edge(5, 0)

    @pytest.mark.parametrize("n", [0, 1, 2])
    def test_small_rejected(self, n):
        with pytest.raises(InvalidParameter):
            build_cycle(n)


class TestCompleteBipartite:
    def test_star_k16(self):
        G = build_complete_bipartite(1, 6)
        assert G.n == 7 and degree(G, 0) == 6 and len(pendant_vertices(G)) == 6

    def test_k34(self):
        G = build_complete_bipartite(3, 4)
        assert G.m == 12
        assert not any(G.has_edge(a, b) for a, b in itertools.combinations(range(3), 2))
        assert not any(G.has_edge(a, b) for a, b in itertools.combinations(range(3, 7), 2))

    def test_k11_is_k2(self):
        assert build_complete_bipartite(1, 1) == build_path(2)

    def test_rejects_zero(self):
        with pytest.raises(InvalidParameter):
            build_complete_bipartite(0, 3)


class TestBistar:
    def test_b32(self):
        G = build_bistar(3, 2)
        assert G.n == 7
        assert sorted(G.adj[0]) == [1, 2, 3, 4]
        assert sorted(G.adj[1]) == [0, 5, 6]
        assert pendant_vertices(G) == [2, 3, 4, 5, 6]

    def test_b11_is_p4(self):
        assert are_isomorphic(build_bistar(1, 1), build_path(4))

    def test_b22(self):
        G = build_bistar(2, 2)
        assert G.n == 6 and degree(G, 0) == 3 and degree(G, 1) == 3

    def test_rejects_zero(self):
        with pytest.raises(InvalidParameter):
            build_bistar(2, 0)


class TestCorona:
    def test_point(self):
        assert are_isomorphic(corona(build_path(1), 3), build_complete_bipartite(1, 3))

    def test_p2(self):
        G = corona(build_path(2), 2)
        assert G.n == 6 and sorted(G.adj[0]) == [1, 2, 3] and sorted(G.adj[1]) == [0, 4, 5]

    def test_order_seven_base(self):
        G = corona(build_path(7), 2)
        assert G.n == 21 and len(pendant_vertices(G)) == 14

    def test_rejects_zero(self):
        with pytest.raises(InvalidParameter):
            corona(build_path(2), 0)

    def test_order_and_pendants_all_small(self):
        for n in range(1, 7):
            for G in enumerate_connected(n):
                for l in range(1, 4):
                    H = corona(G, l)
                    assert H.n == n * (1 + l)
                    # K_1 with one pendant is K_2, where both ends are pendants
                    want = 2 if (n, l) == (1, 1) else n * l
                    assert len(pendant_vertices(H)) == want
                    assert all(H.has_edge(u, v) for u, v in G.edges)

    def test_preserves_bipartiteness(self):
        for n in range(1, 6):
            for G in enumerate_connected(n):
                assert is_bipartite(corona(G, 2)) == is_bipartite(G)


class TestAttachClique:
    def test_p6_with_triangle(self):
        H = attach_clique(build_path(6), 2, 3, 3)
        assert H.n == 7 and H.has_edge(2, 6) and H.has_edge(3, 6)
        assert not is_bipartite(H)

    def test_p6_with_k5(self):
        H = attach_clique(build_path(6), 2, 3, 5)
        assert H.n == 9
        assert all(H.has_edge(a, b) for a, b in itertools.combinations([2, 3, 6, 7, 8], 2))
        assert clique_number(H) == 5

    def test_k2_closes_triangle(self):
        assert attach_clique(build_path(2), 0, 1, 3) == build_complete(3)

    def test_non_edge(self):
        with pytest.raises(InvalidEdge):
            attach_clique(build_path(4), 0, 2, 3)

    def test_small_m(self):
        with pytest.raises(InvalidParameter):
            attach_clique(build_path(4), 0, 1, 2)

    def test_destroys_bipartiteness(self):
        for n in range(2, 6):
            for G in enumerate_connected(n):
                if not is_bipartite(G):
                    continue
                u, v = G.sorted_edges()[0]
                for m in (3, 4, 5):
                    H = attach_clique(G, u, v, m)
                    assert not is_bipartite(H) and clique_number(H) >= 3
                    assert all(H.has_edge(a, b) for a, b in G.edges)


class TestApex:
    def test_k2(self):
        assert add_apex(build_path(2), [0, 1]) == build_complete(3)

    def test_c4_edge(self):
        H = add_apex(build_cycle(4), [0, 1])
        assert H.n == 5 and sorted(H.adj[4]) == [0, 1]

    def test_k3(self):
        assert add_apex(build_complete(3), [0, 1, 2]) == build_complete(4)

    def test_non_clique(self):
        with pytest.raises(InvalidClique):
            add_apex(build_cycle(4), [0, 2])


class TestEmbed:
    def test_k3_orders(self):
        g2, g3 = embed_kplus1(build_complete(3), 3)
        assert (g2.n, g3.n) == (12, 13)
        assert sorted(g3.adj[12]) == [0, 1, 2]

    def test_c5_orders(self):
        g2, g3 = embed_kplus1(build_cycle(5), 3)
        assert (g2.n, g3.n) == (20, 21)

    def test_k3_chromatic(self):
        g2, g3 = embed_kplus1(build_complete(3), 3)
        assert chromatic_number(g2) == 3 and chromatic_number(g3) == 4

    def test_wrong_k(self):
        with pytest.raises(InvalidParameter):
            embed_kplus1(build_cycle(5), 4)
        with pytest.raises(InvalidParameter):
            embed_kplus1(build_cycle(4), 2)


class TestQueries:
    def test_pendants_b32(self):
        assert len(pendant_vertices(build_bistar(3, 2))) == 5

    def test_max_degree_p6(self):
        assert max_degree(build_path(6)) == 2

    def test_attach_not_bipartite(self):
        assert not is_bipartite(attach_clique(build_path(6), 2, 3, 3))

    def test_out_of_range(self):
        with pytest.raises(InvalidParameter):
            degree(build_path(3), 3)
        with pytest.raises(InvalidParameter):
            induced_subgraph(build_path(3), [0, 5])

    def test_induced_subgraph_mapping(self):
        G = build_cycle(6)
        H, order = induced_subgraph(G, [5, 0, 1, 3])
        assert order == [0, 1, 3, 5]
        assert edges(H) == [(0, 1), (0, 3)]

    def test_connectivity(self):
        assert is_connected(build_path(1))
        assert not is_connected(disjoint_union(build_path(2), build_path(2)))

    def test_bipartite_matches_networkx_and_chromatic(self):
        # every graph on at most 7 vertices, including disconnected ones
        for nxg in nx.graph_atlas_g()[1:]:
            G = Graph.from_edges(nxg.number_of_nodes(), nxg.edges())
            assert is_bipartite(G) == nx.is_bipartite(nxg)
            assert is_bipartite(G) == (chromatic_number(G) <= 2)
            assert is_connected(G) == nx.is_connected(nxg)
