"""Strongly disjoint families of complete bipartite subgraphs.

A family B_1..B_r is strongly disjoint when the blocks are vertex disjoint
and there are pairwise 3-disjoint edges e_i, each crossing the bipartition
of its own block.  Such a family covering sigma forces
beta_{|sigma|-r,sigma}(R/I(G)) != 0, and for weakly chordal G the converse
holds; ``extract_certificate`` builds the family by following the
edge-deletion / neighbourhood-deletion induction.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field as dc_field
from itertools import combinations

from .chordality import ProofObligationError, complement_components, copair_edges, is_weakly_chordal, nv_bipartition
from .graph import (Graph, GraphError, GuardExceeded, as_mask, bit, delete_edge, induced, induced_mask,
                    iter_bits, mask_of)
from .hochster import TABLE_GUARD, betti_entry
from .homology import QQ, FieldSpec, restriction_homology

log = logging.getLogger(__name__)

SEARCH_GUARD = 16
EDGE_GUARD = 120


class CertificateError(ValueError):
    """Certificate extraction was asked for something its preconditions exclude."""


@dataclass(frozen=True)
class CompleteBipartiteSubgraph:
    """Sides X, Y with every X-Y pair an edge; edges inside a side are allowed."""

    X: frozenset[int]
    Y: frozenset[int]

    @classmethod
    def of(cls, X, Y) -> "CompleteBipartiteSubgraph":
        X, Y = frozenset(X), frozenset(Y)
        if min(X | Y, default=0) in Y:
            X, Y = Y, X
        return cls(X, Y)

    @property
    def vertices(self) -> frozenset[int]:
        return self.X | self.Y

    def crosses(self, e: tuple[int, int]) -> bool:
        a, b = e
        return (a in self.X and b in self.Y) or (a in self.Y and b in self.X)

    def __repr__(self) -> str:
        return f"K[{sorted(self.X)}|{sorted(self.Y)}]"


@dataclass(frozen=True)
class StronglyDisjointFamily:
    blocks: tuple[CompleteBipartiteSubgraph, ...]
    reps: tuple[tuple[int, int], ...]

    @property
    def r(self) -> int:
        return len(self.blocks)

    @property
    def sigma(self) -> frozenset[int]:
        out: frozenset[int] = frozenset()
        for b in self.blocks:
            out |= b.vertices
        return out

    @property
    def value(self) -> int:
        """sum |V(B_i)| - r"""
        return sum(len(b.vertices) for b in self.blocks) - self.r

    def relabel(self, mapping: dict[int, int]) -> "StronglyDisjointFamily":
        blocks = tuple(CompleteBipartiteSubgraph.of({mapping[x] for x in b.X}, {mapping[y] for y in b.Y})
                       for b in self.blocks)
        reps = tuple(tuple(sorted((mapping[a], mapping[b]))) for a, b in self.reps)
        return StronglyDisjointFamily(blocks, reps)

    def to_dict(self) -> dict:
        return {
            "r": self.r,
            "sigma": sorted(self.sigma),
            "blocks": [{"X": sorted(b.X), "Y": sorted(b.Y), "rep": list(e)}
                       for b, e in zip(self.blocks, self.reps)],
        }


@dataclass(frozen=True)
class Verdict:
    ok: bool
    reason: str = ""

    def __bool__(self) -> bool:
        return self.ok


def _closed(G: Graph, e: tuple[int, int]) -> int:
    a, b = e
    return G.adj[a - 1] | G.adj[b - 1] | bit(a) | bit(b)


def _three_disjoint(G: Graph, e, f) -> bool:
    c, d = f
    return not _closed(G, e) & (bit(c) | bit(d))


def is_3_disjoint(G: Graph, e: tuple[int, int], f: tuple[int, int]) -> bool:
    """Vertex disjoint with no edge between an endpoint of e and one of f."""
    for x in (e, f):
        if not G.has_edge(*x):
            raise GraphError(f"{x} is not an edge")
    return _three_disjoint(G, e, f)


def max_induced_matching(G: Graph) -> list[tuple[int, int]]:
    """A largest set of pairwise 3-disjoint edges, by branch and bound."""
    edges = G.edges
    if not edges:
        raise GraphError("induced matching number needs at least one edge")
    if len(edges) > EDGE_GUARD:
        raise GuardExceeded(f"{len(edges)} edges exceed the search guard {EDGE_GUARD}")
    closed = [_closed(G, e) for e in edges]
    ends = [bit(a) | bit(b) for a, b in edges]
    best: list[int] = []

    def search(k: int, avail: int, chosen: list[int]):
        nonlocal best
        if len(chosen) > len(best):
            best = list(chosen)
        if len(chosen) + avail.bit_count() // 2 <= len(best):
            return
        for j in range(k, len(edges)):
            if ends[j] & avail == ends[j]:
                chosen.append(j)
                search(j + 1, avail & ~closed[j], chosen)
                chosen.pop()

    search(0, G.full_mask, [])
    return [edges[j] for j in best]


def induced_matching_number(G: Graph) -> int:
    return len(max_induced_matching(G))


def block_bipartitions(G: Graph, block) -> list[tuple[frozenset[int], frozenset[int]]]:
    """All (X, Y) with X | Y = block and every X-Y pair an edge, up to swapping sides.

    X holds the smallest vertex.  Sides are unions of complement components,
    so the list is empty exactly when the complement of G[block] is connected.
    """
    mask = as_mask(G, block)
    if mask.bit_count() < 2:
        raise GraphError("a block needs at least two vertices")
    comps = complement_components(G, mask)
    others = comps[1:]
    out = []
    for choice in range(1, 1 << len(others)):
        Y = 0
        for k, c in enumerate(others):
            if choice >> k & 1:
                Y |= c
        out.append((frozenset(iter_bits(mask & ~Y)), frozenset(iter_bits(Y))))
    return sorted(out, key=lambda xy: (sorted(xy[0]), sorted(xy[1])))


def block_bipartitions_bruteforce(G: Graph, block) -> list[tuple[frozenset[int], frozenset[int]]]:
    vs = sorted(iter_bits(as_mask(G, block)))
    first, rest = vs[0], vs[1:]
    out = []
    for k in range(len(rest)):
        for extra in combinations(rest, k):
            X = {first, *extra}
            Y = set(vs) - X
            if all(G.has_edge(x, y) for x in X for y in Y):
                out.append((frozenset(X), frozenset(Y)))
    return sorted(out, key=lambda xy: (sorted(xy[0]), sorted(xy[1])))


class _BlockCache:
    """Per-graph memo: block mask -> (complement components, admissible representative edges)."""

    def __init__(self, G: Graph):
        self.G = G
        self.memo: dict[int, tuple[list[int], list[tuple[int, int]]]] = {}

    def get(self, mask: int):
        hit = self.memo.get(mask)
        if hit is None:
            G = self.G
            comps = complement_components(G, mask)
            where = {}
            for k, c in enumerate(comps):
                for x in iter_bits(c):
                    where[x] = k
            reps = [(a, b) for a in iter_bits(mask) for b in iter_bits(G.adj[a - 1] & mask)
                    if a < b and where[a] != where[b]]
            hit = self.memo[mask] = (comps, reps)
        return hit


def _lex_subsets(items: list[int]):
    """Subsets of ``items`` (ascending) as masks, in lexicographic order of their sorted tuples."""
    def walk(start: int, acc: int):
        yield acc
        for k in range(start, len(items)):
            yield from walk(k + 1, acc | bit(items[k]))
    yield from walk(0, 0)


def _block_from_rep(comps: list[int], mask: int, e: tuple[int, int]) -> CompleteBipartiteSubgraph:
    a = e[0]
    ca = next(c for c in comps if c & bit(a))
    return CompleteBipartiteSubgraph.of(iter_bits(ca), iter_bits(mask & ~ca))


def family_exists(G: Graph, sigma, r: int, max_size: int = SEARCH_GUARD,
                  cache: _BlockCache | None = None) -> StronglyDisjointFamily | None:
    """Lexicographically first strongly disjoint family with r blocks covering exactly sigma.

    Blocks are listed by their smallest vertex; each block is chosen in
    lexicographic order of its vertex list, then its representative edge in
    lexicographic order.
    """
    mask = as_mask(G, sigma)
    if r < 1:
        raise GraphError("r must be at least 1")
    if not mask:
        raise GraphError("sigma must be nonempty")
    if mask.bit_count() > max_size:
        raise GuardExceeded(f"|sigma| = {mask.bit_count()} exceeds the search guard {max_size}")
    if mask.bit_count() < 2 * r:
        return None
    if any(not G.adj[x - 1] & mask for x in iter_bits(mask)):
        return None
    cache = cache or _BlockCache(G)
    found = _search(G, mask, r, cache, [], [], 0)
    if found is None:
        return None
    blocks, reps = found
    return StronglyDisjointFamily(tuple(blocks), tuple(reps))


def _search(G, rest, r, cache, blocks, reps, forbidden):
    # forbidden: closed neighbourhoods of the representatives chosen so far
    if r == 0:
        return (list(blocks), list(reps)) if not rest else None
    m = rest & -rest
    others = list(iter_bits(rest & ~m))
    for extra in _lex_subsets(others):
        if not extra:
            continue
        block = m | extra
        left = rest & ~block
        if left.bit_count() < 2 * (r - 1) or (r == 1 and left):
            continue
        comps, candidates = cache.get(block)
        if len(comps) < 2:
            continue
        for e in candidates:
            if (bit(e[0]) | bit(e[1])) & forbidden:
                continue
            blocks.append(_block_from_rep(comps, block, e))
            reps.append(e)
            found = _search(G, left, r - 1, cache, blocks, reps, forbidden | _closed(G, e))
            blocks.pop()
            reps.pop()
            if found:
                return found
    return None


def verify_family(G: Graph, fam: StronglyDisjointFamily) -> Verdict:
    if len(fam.blocks) != len(fam.reps):
        return Verdict(False, "block and representative counts differ")
    seen = 0
    for B, e in zip(fam.blocks, fam.reps):
        if not B.X or not B.Y:
            return Verdict(False, "empty side")
        if B.X & B.Y:
            return Verdict(False, "sides overlap")
        if any(not 1 <= x <= G.n for x in B.vertices):
            return Verdict(False, "vertex outside graph")
        if any(not G.has_edge(x, y) for x in B.X for y in B.Y):
            return Verdict(False, "missing cross edge")
        if not B.crosses(e):
            return Verdict(False, "rep not crossing its block")
        vm = mask_of(B.vertices)
        if vm & seen:
            return Verdict(False, "blocks intersect")
        seen |= vm
    for e, f in combinations(fam.reps, 2):
        if not _three_disjoint(G, e, f):
            return Verdict(False, "reps not 3-disjoint")
    return Verdict(True)


def d_invariant(G: Graph, max_n: int = SEARCH_GUARD) -> tuple[int, StronglyDisjointFamily]:
    """max of sum |V(B_i)| - r over strongly disjoint families, with one witness."""
    if not G.edge_count:
        raise GraphError("d(G) needs at least one edge")
    if G.n > max_n:
        raise GuardExceeded(f"n = {G.n} exceeds the search guard {max_n}")
    cache = _BlockCache(G)
    by_size: dict[int, list[int]] = {}
    for mask in range(1, 1 << G.n):
        by_size.setdefault(mask.bit_count(), []).append(mask)
    for value in range(G.n - 1, 0, -1):
        for r in range(1, G.n // 2 + 1):
            for mask in by_size.get(value + r, []):
                fam = family_exists(G, mask, r, max_size=max_n, cache=cache)
                if fam is not None:
                    return value, fam
    raise AssertionError("every edge is a one-block family")


# certificate extraction ---------------------------------------------------

def extract_certificate(G: Graph, sigma, r: int, field: FieldSpec = QQ,
                        prefer: str = "h1") -> StronglyDisjointFamily:
    """Build a strongly disjoint family covering sigma with r blocks from a nonzero Betti number.

    Requires G weakly chordal and beta_{|sigma|-r,sigma}(R/I(G)) != 0 over
    ``field``.  With ``prefer="h2"`` the neighbourhood-deletion branch is
    taken whenever its homology is nonzero, even if the edge-deletion branch
    also is.
    """
    if prefer not in ("h1", "h2"):
        raise ValueError("prefer must be 'h1' or 'h2'")
    mask = as_mask(G, sigma)
    if not mask:
        raise GraphError("sigma must be nonempty")
    if r < 1:
        raise GraphError("r must be at least 1")
    if not is_weakly_chordal(G):
        raise CertificateError("graph is not weakly chordal")
    size = mask.bit_count()
    if size - r < 0 or betti_entry(G, mask, size - r, field) == 0:
        raise CertificateError(f"beta_{{{size - r},sigma}} vanishes over {field}; no certificate to extract")
    H, relabel = induced(G, mask)
    back = {new: old for old, new in relabel.items()}
    fam = _extract(H, r, field, prefer).relabel(back)
    verdict = verify_family(G, fam)
    if not verdict or fam.sigma != frozenset(iter_bits(mask)) or fam.r != r:
        raise ProofObligationError(f"extracted family failed verification: {verdict.reason or 'wrong cover'}")
    return fam


def _extract(H: Graph, r: int, field: FieldSpec, prefer: str) -> StronglyDisjointFamily:
    # Invariant: dim H~_{r-1}(Delta H) != 0 and the family must cover all of V(H).
    if H.n == 0:
        if r != 0:
            raise ProofObligationError("empty graph reached with blocks still owed")
        return StronglyDisjointFamily((), ())
    if H.is_complete():
        if r != 1:
            raise ProofObligationError(f"complete graph with nonzero H~_{r - 1}")
        return StronglyDisjointFamily((CompleteBipartiteSubgraph.of({1}, range(2, H.n + 1)),), ((1, 2),))
    if not is_weakly_chordal(H):
        raise ProofObligationError("recursion left the weakly chordal class")
    cands = copair_edges(H)
    if not cands:
        raise ProofObligationError("non-complete weakly chordal graph without a co-pair edge")
    u, v = cands[0]
    G1 = delete_edge(H, u, v)
    keep = H.full_mask & ~(H.adj[u - 1] | H.adj[v - 1])
    h1 = restriction_homology(G1, G1.full_mask, field)[r - 1]
    if keep:
        G2, relabel2 = induced_mask(H, keep)
    else:
        G2, relabel2 = Graph(0, ()), {}
    h2 = restriction_homology(G2, G2.full_mask, field)[r - 2]
    order = ("h1", "h2") if prefer == "h1" else ("h2", "h1")
    for branch in order:
        if branch == "h1" and h1:
            fam = _extract(G1, r, field, prefer)
            verdict = verify_family(H, fam)
            if not verdict:
                log.error("edge-deletion family is not strongly disjoint after restoring %s: %s",
                          (u, v), verdict.reason)
                raise ProofObligationError(f"edge-deletion branch broke strong disjointness ({verdict.reason})")
            return fam
        if branch == "h2" and h2:
            back = {new: old for old, new in relabel2.items()}
            fam = _extract(G2, r - 1, field, prefer).relabel(back)
            part = nv_bipartition(H, (u, v), check=False)
            block = CompleteBipartiteSubgraph.of(part.X, part.Y)
            return StronglyDisjointFamily(fam.blocks + (block,), fam.reps + ((u, v),))
    raise ProofObligationError(f"both branch homologies vanish at co-pair edge {(u, v)}; exactness violated")


# equivalence sweep --------------------------------------------------------

@dataclass
class EquivalenceReport:
    weakly_chordal: bool
    field: FieldSpec
    cells: int = 0
    sufficiency_violations: list[tuple[tuple[int, ...], int]] = dc_field(default_factory=list)
    necessity_violations: list[tuple[tuple[int, ...], int]] = dc_field(default_factory=list)
    nonzero: set[tuple[int, int]] = dc_field(default_factory=set)  # (sigma mask, r) with beta != 0
    feasible: set[tuple[int, int]] = dc_field(default_factory=set)  # (sigma mask, r) with a family

    @property
    def ok(self) -> bool:
        """No violation of a direction that applies to this graph."""
        if self.sufficiency_violations:
            return False
        return not (self.weakly_chordal and self.necessity_violations)


def verify_equivalence(G: Graph, field: FieldSpec = QQ, max_n: int = TABLE_GUARD) -> EquivalenceReport:
    """Compare beta_{|sigma|-r,sigma} != 0 with the existence of a family, for every sigma and r."""
    if G.n > max_n:
        raise GuardExceeded(f"n = {G.n} exceeds the sweep guard {max_n}")
    report = EquivalenceReport(is_weakly_chordal(G), field)
    cache = _BlockCache(G)
    for mask in range(1, 1 << G.n):
        size = mask.bit_count()
        h = restriction_homology(G, mask, field)
        for r in range(1, size + 1):
            report.cells += 1
            beta = h[r - 1]
            fam = family_exists(G, mask, r, max_size=max_n, cache=cache)
            if beta:
                report.nonzero.add((mask, r))
            if fam is not None:
                report.feasible.add((mask, r))
            if fam is not None and not beta:
                report.sufficiency_violations.append((tuple(iter_bits(mask)), r))
            elif fam is None and beta:
                report.necessity_violations.append((tuple(iter_bits(mask)), r))
    return report
