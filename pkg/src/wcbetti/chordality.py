"""Two-pairs, co-pair edges, weakly chordal recognition and the N(u)|N(v) bipartition."""

from __future__ import annotations

import logging
from dataclasses import dataclass
from itertools import combinations

from .graph import Graph, GraphError, GuardExceeded, bit, complement, iter_bits, mask_of

log = logging.getLogger(__name__)

WEAKLY_CHORDAL_GUARD = 16


class ProofObligationError(RuntimeError):
    """A step that must hold for a co-pair edge of a weakly chordal graph failed."""


def _check_nonadjacent(G: Graph, u: int, v: int) -> None:
    if u == v:
        raise GraphError("a two-pair needs two distinct vertices")
    if not (1 <= u <= G.n and 1 <= v <= G.n):
        raise GraphError(f"vertices {u}, {v} outside 1..{G.n}")
    if G.has_edge(u, v):
        raise GraphError(f"{{{u},{v}}} is an edge; two-pairs are non-adjacent")


def _reachable(G: Graph, start: int, allowed: int) -> int:
    seen = bit(start)
    frontier = seen
    while frontier:
        nxt = 0
        for w in iter_bits(frontier):
            nxt |= G.adj[w - 1]
        frontier = nxt & allowed & ~seen
        seen |= frontier
    return seen


def is_two_pair(G: Graph, u: int, v: int) -> bool:
    """True iff every chordless u-v path has exactly two edges.

    u and v form a two-pair exactly when their common neighbourhood separates
    them (no path at all counts as a two-pair).
    """
    _check_nonadjacent(G, u, v)
    common = G.adj[u - 1] & G.adj[v - 1]
    return not _reachable(G, u, G.full_mask & ~common) & bit(v)


def chordless_paths(G: Graph, u: int, v: int):
    """Yield every chordless (induced) u-v path as a vertex list."""
    def extend(path: list[int], used: int, earlier: int):
        # earlier: union of neighbourhoods of all path vertices except the last
        last = path[-1]
        for w in iter_bits(G.adj[last - 1] & ~used & ~earlier):
            if w == v:
                yield path + [w]
            else:
                yield from extend(path + [w], used | bit(w), earlier | G.adj[last - 1])

    yield from extend([u], bit(u), 0)


def two_pair_oracle(G: Graph, u: int, v: int) -> bool:
    """Brute-force two-pair test by listing all chordless u-v paths."""
    _check_nonadjacent(G, u, v)
    return all(len(p) == 3 for p in chordless_paths(G, u, v))


def copair_edges(G: Graph) -> list[tuple[int, int]]:
    """Edges whose endpoints form a two-pair in the complement, in lexicographic order."""
    comp = complement(G)
    return [(u, v) for u, v in G.edges if is_two_pair(comp, u, v)]


def is_copair_edge(G: Graph, u: int, v: int) -> bool:
    if not G.has_edge(u, v):
        raise GraphError(f"{{{u},{v}}} is not an edge")
    return is_two_pair(complement(G), u, v)


def find_hole(G: Graph, min_length: int = 5) -> list[int] | None:
    """Return the vertices of some induced cycle of length >= min_length, or None."""
    for s in range(1, G.n + 1):
        sb = bit(s)
        above = G.full_mask & ~((sb << 1) - 1)

        def grow(path: list[int], used: int, earlier: int):
            last = path[-1]
            for w in iter_bits(G.adj[last - 1] & above & ~used & ~earlier):
                wn = G.adj[w - 1]
                if wn & sb and len(path) > 1:
                    if len(path) + 1 >= min_length:
                        return path + [w]
                    continue
                found = grow(path + [w], used | bit(w), earlier | G.adj[last - 1])
                if found:
                    return found
            return None

        # the second vertex may touch s; every later one may only close the cycle
        for x in iter_bits(G.adj[s - 1] & above):
            found = grow([s, x], sb | bit(x), sb)
            if found:
                return found
    return None


def has_hole_bruteforce(G: Graph, min_length: int = 5) -> bool:
    """Subset enumeration: does some set of >= min_length vertices induce a cycle?"""
    for k in range(min_length, G.n + 1):
        for combo in combinations(range(1, G.n + 1), k):
            m = mask_of(combo)
            if all((G.adj[x - 1] & m).bit_count() == 2 for x in combo):
                if _reachable(G, combo[0], m) == m:
                    return True
    return False


def is_weakly_chordal(G: Graph, max_n: int = WEAKLY_CHORDAL_GUARD) -> bool:
    """No induced cycle on five or more vertices in G or its complement."""
    if G.n > max_n:
        raise GuardExceeded(f"n = {G.n} exceeds the weak-chordality guard {max_n}")
    return find_hole(G) is None and find_hole(complement(G)) is None


def is_weakly_chordal_bruteforce(G: Graph) -> bool:
    return not has_hole_bruteforce(G) and not has_hole_bruteforce(complement(G))


@dataclass(frozen=True)
class NvPartition:
    """Split of N(u) | N(v) into T, U, V, W_UV, W_U, W_V and a bipartition X | Y."""

    u: int
    v: int
    T: frozenset[int]
    U: frozenset[int]
    V: frozenset[int]
    W_UV: frozenset[int]
    W_U: frozenset[int]
    W_V: frozenset[int]
    X: frozenset[int]
    Y: frozenset[int]
    case: str

    @property
    def vertices(self) -> frozenset[int]:
        return self.X | self.Y


def _fs(mask: int) -> frozenset[int]:
    return frozenset(iter_bits(mask))


def _complete_between(G: Graph, X: int, Y: int) -> bool:
    return all(G.adj[x - 1] & Y == Y for x in iter_bits(X))


def complement_components(G: Graph, mask: int) -> list[int]:
    """Connected components (as masks) of the complement of G[mask]."""
    comps = []
    rest = mask
    while rest:
        start = rest & -rest
        comp = start
        frontier = start
        while frontier:
            nxt = 0
            for w in iter_bits(frontier):
                nxt |= mask & ~G.adj[w - 1] & ~bit(w)
            frontier = nxt & ~comp
            comp |= frontier
        comps.append(comp)
        rest &= ~comp
    return comps


def nv_bipartition(G: Graph, e: tuple[int, int], check: bool = True) -> NvPartition:
    """Complete bipartite subgraph on N(u) | N(v) with e = {u, v} as a cross edge.

    Candidate splits are tried in the order of the classical case analysis
    (labels "4", "5", "7", "8"), then "7-8 split", which lets W_UV straddle
    the sides along complement components.  Every candidate is validated.
    If none validates, the complement components of
    N(u) | N(v) are searched exhaustively and ``case`` is ``"fallback"``.
    """
    u, v = sorted(e)
    if not G.has_edge(u, v):
        raise GraphError(f"{{{u},{v}}} is not an edge")
    if check:
        if not is_copair_edge(G, u, v):
            raise GraphError(f"{{{u},{v}}} is not a co-pair edge")
        if not is_weakly_chordal(G):
            raise GraphError("graph is not weakly chordal")
    Nu, Nv = G.adj[u - 1], G.adj[v - 1]
    bu, bv = bit(u), bit(v)
    N = Nu | Nv
    U = N & ~Nv & ~bv
    V = N & ~Nu & ~bu
    W = Nu & Nv
    W_UV = W_U = W_V = 0
    for w in iter_bits(W):
        a = G.adj[w - 1]
        miss_v = V & ~a
        miss_u = U & ~a
        if miss_v and miss_u:
            raise ProofObligationError(f"common neighbour {w} misses vertices of both U and V")
        if miss_v:
            W_U |= bit(w)
        elif miss_u:
            W_V |= bit(w)
        else:
            W_UV |= bit(w)

    candidates = []
    if not W_U:
        candidates.append(("4", bu | V, bv | U | W_V | W_UV))
    if not W_V:
        candidates.append(("5", bu | V | W_U | W_UV, bv | U))
    if W_U and W_V:
        candidates.append(("7", bu | V | W_U, bv | U | W_V | W_UV))
        candidates.append(("8", bu | V | W_U | W_UV, bv | U | W_V))
    if W_U and W_V:
        # W_UV may have to straddle the two sides: group by complement components
        X = 0
        for c in complement_components(G, N):
            if c & (bu | V | W_U):
                X |= c
        if not X & bv:
            candidates.append(("7-8 split", X, N & ~X))
    chosen = None
    for case, X, Y in candidates:
        if _complete_between(G, X, Y):
            chosen = case, X, Y
            break
    if chosen is None:
        chosen = _fallback_split(G, N, u, v)
        log.warning("N(u)|N(v) bipartition for edge %s needed the exhaustive fallback", (u, v))
    case, X, Y = chosen
    return NvPartition(u, v, _fs(bu | bv), _fs(U), _fs(V), _fs(W_UV), _fs(W_U), _fs(W_V),
                       _fs(X), _fs(Y), case)


def _fallback_split(G: Graph, N: int, u: int, v: int) -> tuple[str, int, int]:
    comps = complement_components(G, N)
    cu = next(c for c in comps if c & bit(u))
    cv = next(c for c in comps if c & bit(v))
    if cu == cv:
        raise ProofObligationError(f"u={u} and v={v} share a complement component of N(u)|N(v)")
    others = [c for c in comps if c not in (cu, cv)]
    for choice in range(1 << len(others)):
        X, Y = cu, cv
        for k, c in enumerate(others):
            if choice >> k & 1:
                Y |= c
            else:
                X |= c
        if _complete_between(G, X, Y):
            return "fallback", X, Y
    raise ProofObligationError(f"no complete bipartite split of N(u)|N(v) for edge {(u, v)}")
