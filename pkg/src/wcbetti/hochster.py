"""Multigraded Betti numbers of R/I(G) from Hochster's formula.

beta_{i,sigma}(R/I(G)) = dim H~_{|sigma|-i-1}(Delta(G)_sigma) over the chosen
field.  Only squarefree multidegrees carry nonzero Betti numbers for edge
ideals, so sigma ranges over vertex subsets.  The trivial entry
beta_{0,empty} = 1 is implicit and never stored.  Numbers are those of the
quotient R/I(G); the ideal itself has beta_i(I) = beta_{i+1}(R/I).
"""

from __future__ import annotations

from dataclasses import dataclass

from .graph import Graph, GraphError, GuardExceeded, as_mask, delete_edge, delete_vertices, iter_bits
from .homology import QQ, FieldSpec, restriction_homology

TABLE_GUARD = 16


@dataclass(frozen=True)
class BettiTable:
    n: int
    field: FieldSpec
    entries: dict[tuple[int, int], int]  # (i, sigma mask) -> dim, all > 0, sigma ascending then i

    @property
    def graded(self) -> dict[tuple[int, int], int]:
        """beta_{i,j} = sum of beta_{i,sigma} over |sigma| = j, keyed by (i, j)."""
        out: dict[tuple[int, int], int] = {}
        for (i, s), d in self.entries.items():
            key = (i, s.bit_count())
            out[key] = out.get(key, 0) + d
        return dict(sorted(out.items()))

    @property
    def pdim(self) -> int:
        return max((i for i, _ in self.entries), default=0)

    @property
    def reg(self) -> int:
        return max((s.bit_count() - i for i, s in self.entries), default=0)

    def get(self, i: int, sigma) -> int:
        mask = sigma if isinstance(sigma, int) else _mask(sigma)
        return self.entries.get((i, mask), 0)

    def records(self) -> list[tuple[int, list[int], int]]:
        return [(i, list(iter_bits(s)), d) for (i, s), d in self.entries.items()]


def _mask(vertices) -> int:
    m = 0
    for v in vertices:
        m |= 1 << (v - 1)
    return m


def betti_entry(G: Graph, sigma, i: int, field: FieldSpec = QQ) -> int:
    mask = as_mask(G, sigma)
    if not mask:
        raise GraphError("sigma must be nonempty")
    size = mask.bit_count()
    if not 0 <= i <= size:
        raise GraphError(f"homological index {i} outside 0..{size}")
    return restriction_homology(G, mask, field)[size - i - 1]


def betti_table(G: Graph, field: FieldSpec = QQ, max_n: int = TABLE_GUARD) -> BettiTable:
    if G.n > max_n:
        raise GuardExceeded(f"n = {G.n} exceeds the Betti table guard {max_n}")
    entries = {}
    for mask in range(1, 1 << G.n):
        size = mask.bit_count()
        h = restriction_homology(G, mask, field)
        for k, d in sorted(h.nonzero().items(), reverse=True):
            entries[(size - k - 1, mask)] = d
    return BettiTable(G.n, field, entries)


def pdim_reg(G: Graph, field: FieldSpec = QQ, max_n: int = TABLE_GUARD) -> tuple[int, int]:
    t = betti_table(G, field, max_n)
    return t.pdim, t.reg


@dataclass(frozen=True)
class CharReport:
    tables: dict[FieldSpec, BettiTable]

    @property
    def invariants(self) -> dict[FieldSpec, tuple[int, int]]:
        return {f: (t.pdim, t.reg) for f, t in self.tables.items()}

    @property
    def characteristic_dependent(self) -> bool:
        """True iff pdim or reg differs between the fields compared."""
        return len(set(self.invariants.values())) > 1

    @property
    def tables_identical(self) -> bool:
        return len({tuple(t.entries.items()) for t in self.tables.values()}) <= 1


def char_compare(G: Graph, fields, max_n: int = TABLE_GUARD) -> CharReport:
    return CharReport({f: betti_table(G, f, max_n) for f in fields})


def les_dims(G: Graph, e: tuple[int, int], r: int, field: FieldSpec = QQ) -> tuple[int, int, int]:
    """(dim H~_{r-1}(Delta G), dim H~_{r-1}(Delta G1), dim H~_{r-2}(Delta G2)).

    G1 drops the edge e = {u, v}; G2 drops every vertex adjacent to u or v.
    """
    u, v = e
    G1 = delete_edge(G, u, v)
    G2 = delete_vertices(G, G.nbr_mask(u) | G.nbr_mask(v))
    return (
        restriction_homology(G, G.full_mask, field)[r - 1],
        restriction_homology(G1, G1.full_mask, field)[r - 1],
        restriction_homology(G2, G2.full_mask, field)[r - 2],
    )


def les_dim_check(G: Graph, e: tuple[int, int], r: int, field: FieldSpec = QQ) -> bool:
    h, h1, h2 = les_dims(G, e, r, field)
    return h <= h1 + h2
