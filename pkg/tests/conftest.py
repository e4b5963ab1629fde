import random
from itertools import combinations

import pytest

from wcbetti.graph import Graph, from_edge_list


def graph_from_bits(n, code):
    """Labeled graph whose k-th vertex pair (lexicographic) is an edge iff bit k of code is set."""
    pairs = list(combinations(range(1, n + 1), 2))
    return from_edge_list(n, [p for k, p in enumerate(pairs) if code >> k & 1])


def all_graphs(n):
    for code in range(1 << (n * (n - 1) // 2)):
        yield graph_from_bits(n, code)


def random_graph(rng, n, p=None):
    p = rng.uniform(0.15, 0.85) if p is None else p
    return from_edge_list(n, [(u, v) for u in range(1, n + 1) for v in range(u + 1, n + 1) if rng.random() < p])


def from_networkx(H):
    nodes = sorted(H.nodes())
    idx = {x: k for k, x in enumerate(nodes, start=1)}
    return from_edge_list(max(len(nodes), 1), [(idx[a], idx[b]) for a, b in H.edges()])


def relabel(G, perm):
    """Apply the permutation perm (dict old -> new) to G."""
    return from_edge_list(G.n, [(perm[u], perm[v]) for u, v in G.edges])


@pytest.fixture
def rng():
    return random.Random(20261017)


# acceptance reporting ------------------------------------------------------

_ACCEPTANCE = []


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker and (rep.when == "call" or rep.failed):
        _ACCEPTANCE.append((marker.args[0], marker.args[1], rep.outcome))


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion")


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    verdicts = {}
    for number, title, outcome in _ACCEPTANCE:
        ok = verdicts.get(number, (title, True))[1]
        verdicts[number] = (title, ok and outcome == "passed")
    terminalreporter.section("acceptance criteria")
    for number, (title, ok) in sorted(verdicts.items()):
        terminalreporter.write_line(f"criterion {number:>2}: {'PASS' if ok else 'FAIL'}  {title}")
