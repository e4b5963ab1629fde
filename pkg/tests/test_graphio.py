import networkx as nx
import pytest

from wcbetti.graph import katzman_graph
from wcbetti.graphio import ParseError, format_edge_list, parse_edge_list, parse_graph6, to_graph6

from conftest import random_graph


def test_edge_list_with_comments():
    text = "# a square\nn 4\n1 2\n2 3  # side\n3 4\n\n4 1\n"
    G = parse_edge_list(text)
    assert G.edges == ((1, 2), (1, 4), (2, 3), (3, 4))


@pytest.mark.parametrize("text", ["1 2\n", "n x\n", "n 3\n1\n", "n 3\n1 4\n", "n 3\n2 2\n", ""])
def test_edge_list_errors(text):
    with pytest.raises(ParseError):
        parse_edge_list(text)


def test_round_trip_is_byte_identical(rng):
    for _ in range(50):
        G = random_graph(rng, rng.randint(1, 12))
        text = format_edge_list(G)
        assert format_edge_list(parse_edge_list(text)) == text
        assert parse_edge_list(text) == G


def test_graph6_known_strings():
    # decoded independently by networkx
    for s in ["A_", "Bw", "Ch", "DQc", "J~{???????_"]:
        H = nx.from_graph6_bytes(s.encode())
        G = parse_graph6(s)
        assert G.n == H.number_of_nodes()
        assert set(G.edges) == {tuple(sorted((a + 1, b + 1))) for a, b in H.edges()}


def test_graph6_agrees_with_networkx_and_edge_list(rng):
    for _ in range(200):
        G = random_graph(rng, rng.randint(1, 10))
        s = to_graph6(G)
        H = nx.Graph()
        H.add_nodes_from(range(G.n))
        H.add_edges_from((u - 1, v - 1) for u, v in G.edges)
        assert s == nx.to_graph6_bytes(H, header=False).decode().strip()
        assert parse_graph6(s) == parse_edge_list(format_edge_list(G))


def test_graph6_katzman_round_trip():
    K = katzman_graph()
    assert parse_graph6(to_graph6(K)) == K


@pytest.mark.parametrize("s", ["", "A", "A__", "Bx", "A`", "~??", "?"])
def test_graph6_malformed(s):
    with pytest.raises(ParseError):
        parse_graph6(s)
