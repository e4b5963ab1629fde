"""Independence complexes and reduced simplicial homology over Q and F_p.

Faces are stored as vertex bitmasks grouped by dimension.  Homology
dimensions come from exact boundary-matrix ranks:

    dim H~_i = f_i - rank d_i - rank d_{i+1}

on the augmented chain complex, where d_0 sends every vertex to the
empty face.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from functools import lru_cache
from math import gcd, isqrt
from typing import Iterable

from .graph import Graph, GuardExceeded, as_mask, bit, iter_bits, mask_of

MAX_COMPLEX_VERTICES = 20
MAX_FACES = 1 << 20
MAX_PRIME = 1 << 31


class HomologyError(ValueError):
    pass


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    for d in range(3, isqrt(p) + 1, 2):
        if p % d == 0:
            return False
    return True


@dataclass(frozen=True)
class FieldSpec:
    """Coefficient field: ``p = 0`` means Q, otherwise the prime field F_p."""

    p: int = 0

    def __post_init__(self):
        if self.p != 0 and (self.p > MAX_PRIME or not is_prime(self.p)):
            raise HomologyError(f"{self.p} is not a prime <= 2^31")

    @classmethod
    def parse(cls, text: str) -> "FieldSpec":
        t = text.strip().lower()
        if t in ("q", "qq", "rationals", "0"):
            return cls(0)
        if t.startswith("fp:") or t.startswith("gf:"):
            t = t[3:]
        try:
            return cls(int(t))
        except ValueError:
            raise HomologyError(f"cannot parse field {text!r}; use 'q' or 'fp:P'") from None

    @property
    def characteristic(self) -> int:
        return self.p

    def __str__(self) -> str:
        return "Q" if self.p == 0 else f"F{self.p}"


QQ = FieldSpec(0)
GF2 = FieldSpec(2)
GF3 = FieldSpec(3)


@dataclass(frozen=True)
class SimplicialComplex:
    """Downward-closed face family; ``levels[k]`` holds the (k-1)-faces as masks.

    ``levels[0]`` is ``(0,)``, the empty face.
    """

    ground: tuple[int, ...]
    levels: tuple[tuple[int, ...], ...]

    @classmethod
    def from_faces(cls, faces: Iterable[Iterable[int]], ground: Iterable[int] | None = None) -> "SimplicialComplex":
        """Build from explicit faces, closing nothing: the input must already be a complex."""
        masks = {mask_of(f) for f in faces}
        if not masks:
            raise HomologyError("the empty complex (no faces at all) is not supported")
        ground_mask = 0
        for m in masks:
            ground_mask |= m
        if ground is not None:
            g = mask_of(ground)
            if ground_mask & ~g:
                raise HomologyError("a face uses a vertex outside the ground set")
            ground_mask = g
        for m in masks:
            for v in iter_bits(m):
                if m ^ bit(v) not in masks:
                    raise HomologyError(f"not downward closed: missing a facet of {sorted(iter_bits(m))}")
        for v in iter_bits(ground_mask):
            if bit(v) not in masks:
                raise HomologyError(f"vertex {v} of the ground set is not a face")
        return cls._build(tuple(iter_bits(ground_mask)), masks)

    @classmethod
    def _build(cls, ground: tuple[int, ...], masks) -> "SimplicialComplex":
        top = max(m.bit_count() for m in masks)
        buckets: list[list[int]] = [[] for _ in range(top + 1)]
        for m in masks:
            buckets[m.bit_count()].append(m)
        levels = tuple(tuple(sorted(b, key=lambda m: tuple(iter_bits(m)))) for b in buckets)
        return cls(ground, levels)

    @property
    def dim(self) -> int:
        return len(self.levels) - 2

    def f_vector(self) -> list[int]:
        """Face counts for dimensions -1, 0, ..., dim."""
        return [len(level) for level in self.levels]

    @property
    def face_count(self) -> int:
        return sum(self.f_vector())

    def faces(self, k: int | None = None) -> list[tuple[int, ...]]:
        if k is None:
            return [tuple(iter_bits(m)) for level in self.levels for m in level]
        if not -1 <= k <= self.dim:
            return []
        return [tuple(iter_bits(m)) for m in self.levels[k + 1]]

    def cone(self, apex: int) -> "SimplicialComplex":
        if apex in self.ground:
            raise HomologyError("cone apex must be a new vertex")
        b = bit(apex)
        masks = [m for level in self.levels for m in level]
        return self._build(tuple(sorted(self.ground + (apex,))), set(masks) | {m | b for m in masks})


@dataclass(frozen=True)
class HomologyDims:
    """Reduced Betti numbers dim H~_i for i = -1 .. dim."""

    dims: dict[int, int] = dc_field(default_factory=dict)

    def __getitem__(self, i: int) -> int:
        return self.dims.get(i, 0)

    def nonzero(self) -> dict[int, int]:
        return {i: d for i, d in self.dims.items() if d}

    def euler(self) -> int:
        return sum((-1) ** i * d for i, d in self.dims.items())


def independence_complex(G: Graph, sigma=None, max_vertices: int = MAX_COMPLEX_VERTICES) -> SimplicialComplex:
    """Independence complex of G restricted to sigma (default: all of V(G))."""
    mask = G.full_mask if sigma is None else as_mask(G, sigma)
    if mask.bit_count() > max_vertices:
        raise GuardExceeded(f"|sigma| = {mask.bit_count()} exceeds the complex guard {max_vertices}")
    return SimplicialComplex._build(tuple(iter_bits(mask)), _independent_sets(G.adj, mask))


def _independent_sets(adj: tuple[int, ...], mask: int) -> list[int]:
    sets = [0]
    for v in iter_bits(mask):
        b, nb = bit(v), adj[v - 1]
        sets += [s | b for s in sets if not s & nb]
        if len(sets) > MAX_FACES:
            raise GuardExceeded(f"independence complex exceeds {MAX_FACES} faces")
    return sets


# exact rank ---------------------------------------------------------------

def _rank_q(rows: list[dict[int, int]]) -> int:
    # Integer elimination; each new row is made primitive (content 1) so
    # entries stay bounded by the minors and no fractions appear.
    pivots: dict[int, dict[int, int]] = {}
    for r in rows:
        r = {k: v for k, v in r.items() if v}
        while r:
            c = min(r)
            pr = pivots.get(c)
            if pr is None:
                pivots[c] = r
                break
            a, b = pr[c], r[c]
            new = {k: a * v for k, v in r.items()}
            for k, v in pr.items():
                w = new.get(k, 0) - b * v
                if w:
                    new[k] = w
                else:
                    new.pop(k, None)
            g = 0
            for v in new.values():
                g = gcd(g, v)
                if g == 1:
                    break
            r = {k: v // g for k, v in new.items()} if g > 1 else new
    return len(pivots)


def _rank_f2(rows: list[int]) -> int:
    pivots: dict[int, int] = {}
    for r in rows:
        while r:
            low = r & -r
            pr = pivots.get(low)
            if pr is None:
                pivots[low] = r
                break
            r ^= pr
    return len(pivots)


def _rank_fp(rows: list[dict[int, int]], p: int) -> int:
    pivots: dict[int, dict[int, int]] = {}
    for r in rows:
        r = {k: v % p for k, v in r.items() if v % p}
        while r:
            c = min(r)
            pr = pivots.get(c)
            if pr is None:
                inv = pow(r[c], -1, p)
                pivots[c] = {k: v * inv % p for k, v in r.items()}
                break
            f = r[c]
            for k, v in pr.items():
                w = (r.get(k, 0) - f * v) % p
                if w:
                    r[k] = w
                else:
                    r.pop(k, None)
    return len(pivots)


def _rows_from_triples(entries) -> list[dict[int, int]]:
    rows: dict[int, dict[int, int]] = {}
    for i, j, v in entries:
        if i < 0 or j < 0:
            raise HomologyError("negative matrix index")
        row = rows.setdefault(i, {})
        row[j] = row.get(j, 0) + v
    return [rows[i] for i in sorted(rows)]


def exact_rank(entries: Iterable[tuple[int, int, int]], field: FieldSpec = QQ) -> int:
    """Rank of the integer matrix given as (row, col, value) triples over ``field``."""
    if not isinstance(field, FieldSpec):
        field = FieldSpec(field)
    rows = _rows_from_triples(entries)
    return _rank_rows(rows, field)


def _rank_rows(rows: list[dict[int, int]], field: FieldSpec) -> int:
    if field.p == 0:
        return _rank_q(rows)
    if field.p == 2:
        packed = []
        for r in rows:
            m = 0
            for k, v in r.items():
                if v & 1:
                    m |= 1 << k
            packed.append(m)
        return _rank_f2(packed)
    return _rank_fp(rows, field.p)


def bareiss_rank(matrix: list[list[int]]) -> int:
    """Rank over Q of a dense integer matrix by fraction-free Bareiss elimination."""
    M = [list(row) for row in matrix]
    if not M or not M[0]:
        return 0
    m, n = len(M), len(M[0])
    prev = 1
    rank = 0
    for col in range(n):
        piv = next((i for i in range(rank, m) if M[i][col]), None)
        if piv is None:
            continue
        M[rank], M[piv] = M[piv], M[rank]
        p = M[rank][col]
        for i in range(rank + 1, m):
            for j in range(col + 1, n):
                M[i][j] = (p * M[i][j] - M[i][col] * M[rank][j]) // prev
            M[i][col] = 0
        prev = p
        rank += 1
        if rank == m:
            break
    return rank


# homology -----------------------------------------------------------------

def boundary_rows(delta: SimplicialComplex, k: int) -> list[dict[int, int]]:
    """Rows of d_k: one per k-face, columns indexed by (k-1)-faces."""
    if not 0 <= k <= delta.dim:
        return []
    index = {m: i for i, m in enumerate(delta.levels[k])}
    rows = []
    for face in delta.levels[k + 1]:
        row = {}
        sign = 1
        for v in iter_bits(face):
            row[index[face ^ bit(v)]] = sign
            sign = -sign
        rows.append(row)
    return rows


def boundary_triples(delta: SimplicialComplex, k: int) -> list[tuple[int, int, int]]:
    """d_k as (row = (k-1)-face index, col = k-face index, sign) triples."""
    return [(i, j, s) for j, row in enumerate(boundary_rows(delta, k)) for i, s in row.items()]


def boundary_rank(delta: SimplicialComplex, k: int, field: FieldSpec) -> int:
    return _rank_rows(boundary_rows(delta, k), field)


def reduced_homology_dims(delta: SimplicialComplex, field: FieldSpec = QQ,
                          max_faces: int = MAX_FACES) -> HomologyDims:
    if not delta.levels or not delta.levels[0]:
        raise HomologyError("the empty complex (no faces at all) is not supported")
    if delta.face_count > max_faces:
        raise GuardExceeded(f"{delta.face_count} faces exceed the guard {max_faces}")
    f = delta.f_vector()
    ranks = [boundary_rank(delta, k, field) for k in range(delta.dim + 1)] + [0]
    dims = {-1: f[0] - ranks[0]}
    for k in range(delta.dim + 1):
        dims[k] = f[k + 1] - ranks[k] - ranks[k + 1]
    euler_faces = sum((-1) ** (k - 1) * c for k, c in enumerate(f))
    if sum((-1) ** i * d for i, d in dims.items()) != euler_faces:
        raise HomologyError("Euler characteristic mismatch")  # unreachable unless a rank is wrong
    return HomologyDims(dims)


@lru_cache(maxsize=1 << 16)
def restriction_homology(G: Graph, mask: int, field: FieldSpec = QQ) -> HomologyDims:
    """Reduced homology of the independence complex of G restricted to ``mask``.

    ``mask = 0`` gives the complex {empty face}, whose only homology is H~_{-1} = 1.
    """
    return reduced_homology_dims(independence_complex(G, mask), field)


def independence_homology(G: Graph, field: FieldSpec = QQ) -> HomologyDims:
    return restriction_homology(G, G.full_mask, field)
