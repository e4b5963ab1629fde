"""Edge-list text and graph6 readers/writers."""

from __future__ import annotations

from pathlib import Path

from .graph import MAX_VERTICES, Graph, GraphError, from_edge_list


class ParseError(GraphError):
    pass


def parse_edge_list(text: str, max_n: int = MAX_VERTICES) -> Graph:
    """Parse ``n <count>`` followed by one ``u v`` pair per line; ``#`` starts a comment."""
    n = None
    pairs = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        if n is None:
            if len(tokens) != 2 or tokens[0] != "n":
                raise ParseError(f"line {lineno}: expected header 'n <count>', got {raw!r}")
            n = _int(tokens[1], lineno)
            continue
        if len(tokens) != 2:
            raise ParseError(f"line {lineno}: expected 'u v', got {raw!r}")
        pairs.append((_int(tokens[0], lineno), _int(tokens[1], lineno)))
    if n is None:
        raise ParseError("missing 'n <count>' header")
    try:
        return from_edge_list(n, pairs, max_n=max_n)
    except GraphError as exc:
        if type(exc) is GraphError:
            raise ParseError(str(exc)) from exc
        raise


def _int(tok: str, lineno: int) -> int:
    try:
        return int(tok)
    except ValueError:
        raise ParseError(f"line {lineno}: {tok!r} is not an integer") from None


def read_edge_list(path, max_n: int = MAX_VERTICES) -> Graph:
    return parse_edge_list(Path(path).read_text(), max_n=max_n)


def format_edge_list(G: Graph) -> str:
    """Canonical edge-list text: header then edges in lexicographic order."""
    lines = [f"n {G.n}"]
    lines.extend(f"{u} {v}" for u, v in G.edges)
    return "\n".join(lines) + "\n"


def parse_graph6(s: str | bytes, max_n: int = MAX_VERTICES) -> Graph:
    """Decode a graph6 string for 1 <= n <= 62 (single-byte size header)."""
    if isinstance(s, bytes):
        s = s.decode("ascii")
    s = s.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<"):]
    if not s:
        raise ParseError("empty graph6 string")
    data = [ord(c) - 63 for c in s]
    if any(not 0 <= d <= 63 for d in data):
        raise ParseError("graph6 byte outside the printable range 63..126")
    n = data[0]
    if n == 63:
        raise ParseError("graph6 headers for n > 62 are not supported")
    if n < 1:
        raise ParseError("graph6 header encodes n = 0")
    nbits = n * (n - 1) // 2
    body = data[1:]
    if len(body) != (nbits + 5) // 6:
        raise ParseError(f"graph6 body has {len(body)} bytes, expected {(nbits + 5) // 6} for n = {n}")
    bits = []
    for d in body:
        bits.extend((d >> (5 - k)) & 1 for k in range(6))
    if any(bits[nbits:]):
        raise ParseError("graph6 padding bits are not zero")
    pairs = []
    k = 0
    for v in range(1, n):
        for u in range(v):
            if bits[k]:
                pairs.append((u + 1, v + 1))
            k += 1
    try:
        return from_edge_list(n, pairs, max_n=max_n)
    except GraphError as exc:
        if type(exc) is GraphError:
            raise ParseError(str(exc)) from exc
        raise


def to_graph6(G: Graph) -> str:
    if not 1 <= G.n <= 62:
        raise GraphError("graph6 output supports 1 <= n <= 62")
    bits = [int(G.has_edge(u + 1, v + 1)) for v in range(1, G.n) for u in range(v)]
    bits.extend([0] * (-len(bits) % 6))
    out = [chr(G.n + 63)]
    for i in range(0, len(bits), 6):
        val = 0
        for b in bits[i:i + 6]:
            val = val << 1 | b
        out.append(chr(val + 63))
    return "".join(out)
