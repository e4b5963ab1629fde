"""Immutable simple graphs on vertices 1..n backed by neighbor bitmasks.

Vertex ``v`` occupies bit ``v - 1`` of every internal mask; all public
arguments and return values use 1-indexed vertex labels.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable

MAX_VERTICES = 24


class GraphError(ValueError):
    """Invalid graph construction or operation."""


class GuardExceeded(RuntimeError):
    """A size guard protecting an exponential computation was exceeded."""


def bit(v: int) -> int:
    return 1 << (v - 1)


def iter_bits(mask: int):
    """Yield the 1-indexed vertices present in ``mask`` in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length()
        mask ^= low


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= bit(v)
    return m


@dataclass(frozen=True)
class VertexSubset:
    """A subset of [n] stored as a characteristic bitmask."""

    n: int
    mask: int

    def __post_init__(self):
        if self.mask < 0 or self.mask >> self.n:
            raise GraphError(f"mask {self.mask:#b} uses bits outside 1..{self.n}")

    @classmethod
    def of(cls, n: int, vertices: Iterable[int]) -> "VertexSubset":
        vs = list(vertices)
        for v in vs:
            if not 1 <= v <= n:
                raise GraphError(f"vertex {v} outside 1..{n}")
        return cls(n, mask_of(vs))

    @property
    def size(self) -> int:
        return self.mask.bit_count()

    def __len__(self) -> int:
        return self.size

    def __iter__(self):
        return iter_bits(self.mask)

    def __contains__(self, v) -> bool:
        return isinstance(v, int) and 1 <= v <= self.n and bool(self.mask & bit(v))

    def vertices(self) -> list[int]:
        return list(iter_bits(self.mask))


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph with ``adj[v - 1]`` the neighbor mask of ``v``."""

    n: int
    adj: tuple[int, ...]

    def __post_init__(self):
        if self.n < 0:
            raise GraphError("negative vertex count")
        if len(self.adj) != self.n:
            raise GraphError("adjacency length does not match n")
        full = (1 << self.n) - 1
        for i, m in enumerate(self.adj):
            if m & ~full:
                raise GraphError(f"vertex {i + 1} has a neighbor outside 1..{self.n}")
            if m >> i & 1:
                raise GraphError(f"loop at vertex {i + 1}")
            for j in iter_bits(m):
                if not self.adj[j - 1] >> i & 1:
                    raise GraphError(f"asymmetric adjacency between {i + 1} and {j}")

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    @property
    def vertices(self) -> range:
        return range(1, self.n + 1)

    @cached_property
    def edges(self) -> tuple[tuple[int, int], ...]:
        out = []
        for u in range(1, self.n + 1):
            for v in iter_bits(self.adj[u - 1] >> u << u):
                out.append((u, v))
        return tuple(out)

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def nbr_mask(self, u: int) -> int:
        return self.adj[u - 1]

    def neighbors(self, u: int) -> frozenset[int]:
        """Open neighborhood N(u)."""
        self._check_vertex(u)
        return frozenset(iter_bits(self.adj[u - 1]))

    def closed_neighbors(self, u: int) -> frozenset[int]:
        """Closed neighborhood N[u]."""
        return self.neighbors(u) | {u}

    def degree(self, u: int) -> int:
        self._check_vertex(u)
        return self.adj[u - 1].bit_count()

    def has_edge(self, u: int, v: int) -> bool:
        return 1 <= u <= self.n and 1 <= v <= self.n and bool(self.adj[u - 1] & bit(v))

    def is_complete(self) -> bool:
        full = self.full_mask
        return all(m | bit(v) == full for v, m in enumerate(self.adj, start=1))

    def subset(self, vertices: Iterable[int]) -> VertexSubset:
        return VertexSubset.of(self.n, vertices)

    def _check_vertex(self, u: int) -> None:
        if not 1 <= u <= self.n:
            raise GraphError(f"vertex {u} outside 1..{self.n}")

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={list(self.edges)})"


def _from_masks(adj: list[int]) -> Graph:
    return Graph(len(adj), tuple(adj))


def from_edge_list(n: int, pairs: Iterable[Iterable[int]], max_n: int = MAX_VERTICES) -> Graph:
    """Build a graph on 1..n; duplicate pairs collapse to one edge."""
    if n < 1:
        raise GraphError("a graph needs at least one vertex")
    if n > max_n:
        raise GuardExceeded(f"n = {n} exceeds the vertex guard {max_n}")
    adj = [0] * n
    for pair in pairs:
        u, v = pair
        if not (1 <= u <= n and 1 <= v <= n):
            raise GraphError(f"edge {{{u},{v}}} has a vertex outside 1..{n}")
        if u == v:
            raise GraphError(f"loop at vertex {u}")
        adj[u - 1] |= bit(v)
        adj[v - 1] |= bit(u)
    return _from_masks(adj)


def as_mask(G: Graph, sigma) -> int:
    """Normalize a VertexSubset, mask or iterable of vertices to a mask of G."""
    if isinstance(sigma, VertexSubset):
        if sigma.n != G.n:
            raise GraphError("vertex subset belongs to a graph of different order")
        return sigma.mask
    if isinstance(sigma, int):
        if sigma < 0 or sigma & ~G.full_mask:
            raise GraphError("mask uses bits outside the vertex set")
        return sigma
    return G.subset(sigma).mask


def complement(G: Graph) -> Graph:
    full = G.full_mask
    return _from_masks([full & ~m & ~bit(v) for v, m in enumerate(G.adj, start=1)])


def induced_mask(G: Graph, mask: int) -> tuple[Graph, dict[int, int]]:
    old = list(iter_bits(mask))
    relabel = {o: i for i, o in enumerate(old, start=1)}
    adj = []
    for o in old:
        m = 0
        for w in iter_bits(G.adj[o - 1] & mask):
            m |= bit(relabel[w])
        adj.append(m)
    return _from_masks(adj), relabel


def induced(G: Graph, sigma) -> tuple[Graph, dict[int, int]]:
    """Induced subgraph on sigma, relabeled 1..|sigma| preserving order.

    Returns the subgraph and the map old label -> new label.
    """
    mask = as_mask(G, sigma)
    if not mask:
        raise GraphError("cannot induce on an empty vertex set")
    return induced_mask(G, mask)


def delete_edge(G: Graph, u: int, v: int) -> Graph:
    """Remove edge {u, v}, keeping both endpoints."""
    if not G.has_edge(u, v):
        raise GraphError(f"{{{u},{v}}} is not an edge")
    adj = list(G.adj)
    adj[u - 1] &= ~bit(v)
    adj[v - 1] &= ~bit(u)
    return _from_masks(adj)


def add_edge(G: Graph, u: int, v: int) -> Graph:
    if u == v or not (1 <= u <= G.n and 1 <= v <= G.n):
        raise GraphError(f"cannot add {{{u},{v}}}")
    adj = list(G.adj)
    adj[u - 1] |= bit(v)
    adj[v - 1] |= bit(u)
    return _from_masks(adj)


def delete_vertices(G: Graph, vertices) -> Graph:
    """Induced subgraph on the surviving vertices (possibly the 0-vertex graph)."""
    gone = as_mask(G, vertices)
    keep = G.full_mask & ~gone
    if not keep:
        return Graph(0, ())
    return induced_mask(G, keep)[0]


def maximal_independent_sets(G: Graph):
    """Yield every maximal independent set as a mask (Bron-Kerbosch on the complement)."""
    comp = [G.full_mask & ~m & ~bit(v) for v, m in enumerate(G.adj, start=1)]

    def expand(r: int, p: int, x: int):
        if not p and not x:
            yield r
            return
        pivot = next(iter_bits(p | x))
        for v in iter_bits(p & ~comp[pivot - 1]):
            b = bit(v)
            yield from expand(r | b, p & comp[v - 1], x & comp[v - 1])
            p &= ~b
            x |= b

    if G.n:
        yield from expand(0, G.full_mask, 0)


def big_height(G: Graph) -> int:
    """Largest minimal vertex cover, i.e. n minus the smallest maximal independent set."""
    if not G.edge_count:
        raise GraphError("big-height is undefined for an edgeless graph")
    return max(G.n - s.bit_count() for s in maximal_independent_sets(G))


def min_vertex_cover_size(G: Graph) -> int:
    best = 0
    for s in maximal_independent_sets(G):
        best = max(best, s.bit_count())
    return G.n - best


# named constructions ------------------------------------------------------

def path_graph(n: int) -> Graph:
    return from_edge_list(n, [(i, i + 1) for i in range(1, n)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise GraphError("a cycle needs at least three vertices")
    return from_edge_list(n, [(i, i % n + 1) for i in range(1, n + 1)])


def complete_graph(n: int) -> Graph:
    return from_edge_list(n, [(u, v) for u in range(1, n + 1) for v in range(u + 1, n + 1)])


def star_graph(leaves: int) -> Graph:
    """K_{1,leaves} with centre 1."""
    return from_edge_list(leaves + 1, [(1, v) for v in range(2, leaves + 2)])


def edgeless_graph(n: int) -> Graph:
    return from_edge_list(n, [])


KATZMAN_LABELS = ("a0", "a1", "a2", "a3", "a4", "a5", "b1", "b2", "b3", "b4", "b5")


def katzman_graph() -> Graph:
    """Katzman's 11-vertex graph; vertex k carries label ``KATZMAN_LABELS[k - 1]``.

    a0 is a hub over a1..a5, the a's form a pentagram, the b's a pentagon,
    and each a_i sees b_i plus one skew spoke.
    """
    idx = {name: k for k, name in enumerate(KATZMAN_LABELS, start=1)}
    named = [
        ("a0", "a1"), ("a0", "a2"), ("a0", "a3"), ("a0", "a4"), ("a0", "a5"),
        ("a1", "a3"), ("a3", "a5"), ("a5", "a2"), ("a2", "a4"), ("a4", "a1"),
        ("b1", "b2"), ("b2", "b3"), ("b3", "b4"), ("b4", "b5"), ("b5", "b1"),
        ("a1", "b1"), ("a2", "b2"), ("a3", "b3"), ("a4", "b4"), ("a5", "b5"),
        ("a1", "b5"), ("a5", "b4"), ("a4", "b3"), ("a3", "b2"), ("a2", "b1"),
    ]
    return from_edge_list(11, [(idx[a], idx[b]) for a, b in named])


BUILTINS = {
    "k2": lambda: complete_graph(2),
    "p3": lambda: path_graph(3),
    "p4": lambda: path_graph(4),
    "c4": lambda: cycle_graph(4),
    "c5": lambda: cycle_graph(5),
    "c6": lambda: cycle_graph(6),
    "star3": lambda: star_graph(3),
    "2k2": lambda: from_edge_list(4, [(1, 2), (3, 4)]),
    "katzman": katzman_graph,
}


def builtin(name: str) -> Graph:
    try:
        return BUILTINS[name.lower()]()
    except KeyError:
        raise GraphError(f"unknown builtin graph {name!r}; choose from {sorted(BUILTINS)}") from None
