import networkx as nx
import pytest

from wcbetti.chordality import (
    chordless_paths, copair_edges, find_hole, has_hole_bruteforce, is_two_pair, is_weakly_chordal,
    is_weakly_chordal_bruteforce, nv_bipartition, two_pair_oracle,
)
from wcbetti.graph import (
    GraphError, GuardExceeded, builtin, complement, complete_graph, cycle_graph, from_edge_list, induced,
    path_graph,
)

from conftest import all_graphs, from_networkx, random_graph


class TestTwoPair:
    def test_p3(self):
        assert is_two_pair(path_graph(3), 1, 3) and two_pair_oracle(path_graph(3), 1, 3)

    def test_p4(self):
        assert not is_two_pair(path_graph(4), 1, 4) and not two_pair_oracle(path_graph(4), 1, 4)

    def test_square_diagonal(self):
        paths = sorted(chordless_paths(cycle_graph(4), 1, 3))
        assert paths == [[1, 2, 3], [1, 4, 3]]
        assert is_two_pair(cycle_graph(4), 1, 3) and two_pair_oracle(cycle_graph(4), 1, 3)

    def test_disconnected_is_vacuous(self):
        G = builtin("2k2")
        assert list(chordless_paths(G, 1, 3)) == []
        assert is_two_pair(G, 1, 3) and two_pair_oracle(G, 1, 3)

    def test_hexagon_opposite(self):
        paths = sorted(chordless_paths(cycle_graph(6), 1, 4))
        assert paths == [[1, 2, 3, 4], [1, 6, 5, 4]]
        assert not is_two_pair(cycle_graph(6), 1, 4) and not two_pair_oracle(cycle_graph(6), 1, 4)

    @pytest.mark.parametrize("u, v", [(1, 1), (1, 2)])
    def test_errors(self, u, v):
        with pytest.raises(GraphError):
            is_two_pair(path_graph(3), u, v)
        with pytest.raises(GraphError):
            two_pair_oracle(path_graph(3), u, v)

    def test_oracle_random_up_to_10(self, rng):
        for _ in range(300):
            G = random_graph(rng, rng.randint(2, 10))
            for u in G.vertices:
                for v in range(u + 1, G.n + 1):
                    if not G.has_edge(u, v):
                        assert is_two_pair(G, u, v) == two_pair_oracle(G, u, v), (G, u, v)


class TestCopairEdges:
    def test_square(self):
        C = cycle_graph(4)
        assert copair_edges(C) == list(C.edges)

    def test_edge(self):
        assert copair_edges(complete_graph(2)) == [(1, 2)]

    def test_pentagon(self):
        # every non-adjacent pair of the (pentagon) complement joins by a 3-edge chordless path
        comp = complement(cycle_graph(5))
        for u, v in cycle_graph(5).edges:
            assert any(len(p) == 4 for p in chordless_paths(comp, u, v))
        assert copair_edges(cycle_graph(5)) == []


class TestWeaklyChordal:
    def test_examples(self):
        assert is_weakly_chordal(cycle_graph(4))
        assert not is_weakly_chordal(cycle_graph(5))
        assert not is_weakly_chordal(builtin("katzman"))

    def test_hole_found_is_induced_cycle(self):
        hole = find_hole(cycle_graph(7))
        assert sorted(hole) == list(range(1, 8))

    def test_trees(self):
        for n in range(2, 17):
            for T in nx.nonisomorphic_trees(n):
                assert is_weakly_chordal(from_networkx(T))
                if n >= 12:
                    break

    def test_guard(self):
        with pytest.raises(GuardExceeded):
            is_weakly_chordal(path_graph(17))

    def test_bruteforce_all_small(self):
        for n in range(1, 7):
            for G in all_graphs(n):
                assert (find_hole(G) is None) != has_hole_bruteforce(G)

    def test_bruteforce_random_up_to_10(self, rng):
        for _ in range(300):
            G = random_graph(rng, rng.randint(5, 10))
            assert is_weakly_chordal(G) == is_weakly_chordal_bruteforce(G)
            assert is_weakly_chordal(G) == is_weakly_chordal(complement(G))

    def test_two_pair_characterisation(self, rng):
        # weakly chordal => every induced subgraph is complete or has a two-pair
        atlas = [from_networkx(H) for H in nx.graph_atlas_g()[1:] if H.number_of_nodes() <= 7]
        for G in atlas + weakly_chordal_sample(rng, 40, 8, 8):
            if not is_weakly_chordal(G):
                continue
            for mask in range(1, 1 << G.n):
                S, _ = induced(G, mask)
                assert S.is_complete() or any(
                    is_two_pair(S, u, v) for u in S.vertices for v in range(u + 1, S.n + 1)
                    if not S.has_edge(u, v))


def weakly_chordal_sample(rng, count, lo=2, hi=10):
    out = []
    while len(out) < count:
        G = random_graph(rng, rng.randint(lo, hi))
        if is_weakly_chordal(G):
            out.append(G)
    return out


class TestNvBipartition:
    def test_square(self):
        p = nv_bipartition(cycle_graph(4), (1, 2))
        assert (p.U, p.V, p.W_UV | p.W_U | p.W_V) == ({4}, {3}, set())
        assert (p.X, p.Y) == ({1, 3}, {2, 4})

    def test_edge(self):
        p = nv_bipartition(complete_graph(2), (1, 2))
        assert (p.X, p.Y) == ({1}, {2})

    def test_path(self):
        p = nv_bipartition(path_graph(3), (1, 2))
        assert p.V == {3} and (p.X, p.Y) == ({1, 3}, {2})

    def test_rejects_non_copair(self):
        G = from_edge_list(5, [(1, 2), (2, 3), (3, 4)])
        with pytest.raises(GraphError):
            nv_bipartition(G, (2, 3))

    def test_rejects_non_weakly_chordal(self):
        G = from_edge_list(7, [(1, 2), (2, 3), (3, 4), (4, 5), (5, 1), (6, 7)])
        with pytest.raises(GraphError):
            nv_bipartition(G, (6, 7))

    def test_postcondition_random(self, rng):
        for G in weakly_chordal_sample(rng, 300):
            for u, v in copair_edges(G):
                p = nv_bipartition(G, (u, v))
                N = G.neighbors(u) | G.neighbors(v)
                assert p.X | p.Y == N and not p.X & p.Y
                assert u in p.X and v in p.Y
                assert all(G.has_edge(x, y) for x in p.X for y in p.Y)
                parts = [p.T, p.U, p.V, p.W_UV, p.W_U, p.W_V]
                assert sum(len(s) for s in parts) == len(N)
                assert p.case != "fallback"
                # every member of U sees every member of V
                assert all(G.has_edge(a, b) for a in p.U for b in p.V)
                assert all(G.has_edge(w, x) for w in p.W_UV for x in p.U | p.V)
