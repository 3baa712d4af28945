"""Text formats: edge lists, graph6, and vertex-color listings."""

from __future__ import annotations

from .errors import ParseError
from .graph import Graph

G6_HEADER = ">>graph6<<"


def _data_lines(text: str):
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield lineno, line


def _ints(line: str, lineno: int, count: int) -> list[int]:
    parts = line.split()
    if len(parts) != count:
        raise ParseError(f"expected {count} integers, got {line!r}", lineno)
    try:
        return [int(p) for p in parts]
    except ValueError:
        raise ParseError(f"non-integer field in {line!r}", lineno) from None


def parse_edgelist(text: str) -> Graph:
    """Parse ``n m`` followed by ``m`` lines ``u v``.

    Blank lines and ``#`` comments are ignored. Pairs given as ``v u`` are
    accepted and normalized; loops, duplicates and out-of-range endpoints are
    rejected with the offending line number.
    """
    lines = _data_lines(text)
    try:
        lineno, header = next(lines)
    except StopIteration:
        raise ParseError("empty input, expected header 'n m'", 1) from None
    n, m = _ints(header, lineno, 2)
    if n < 1 or m < 0:
        raise ParseError(f"bad header {header!r}: need n >= 1, m >= 0", lineno)
    edges: set[tuple[int, int]] = set()
    for lineno, line in lines:
        u, v = _ints(line, lineno, 2)
        if u == v:
            raise ParseError(f"self-loop at vertex {u}", lineno)
        for w in (u, v):
            if not 0 <= w < n:
                raise ParseError(f"vertex {w} out of range 0..{n - 1}", lineno)
        e = (min(u, v), max(u, v))
        if e in edges:
            raise ParseError(f"duplicate edge {e[0]} {e[1]}", lineno)
        edges.add(e)
    if len(edges) != m:
        raise ParseError(f"header announces {m} edges, found {len(edges)}")
    return Graph(n, frozenset(edges))


def emit_edgelist(G: Graph) -> str:
    lines = [f"{G.n} {G.m}"]
    lines += [f"{u} {v}" for u, v in G.sorted_edges()]
    return "\n".join(lines) + "\n"


def canonical_edgelist(text: str) -> str:
    return emit_edgelist(parse_edgelist(text))


def _g6_size(data: bytes) -> tuple[int, int]:
    if not data:
        raise ParseError("empty graph6 string")
    if data[0] != 126:
        return data[0] - 63, 1
    if len(data) >= 2 and data[1] == 126:
        width, start = 6, 2
    else:
        width, start = 3, 1
    chunk = data[start:start + width]
    if len(chunk) != width:
        raise ParseError("truncated graph6 size field")
    n = 0
    for c in chunk:
        n = (n << 6) | (c - 63)
    return n, start + width


def _parse_graph6_line(line: str, lineno: int | None = None) -> Graph:
    s = line.strip()
    if s.startswith(G6_HEADER):
        s = s[len(G6_HEADER):]
    data = s.encode("ascii")
    if any(c < 63 or c > 126 for c in data):
        raise ParseError(f"character outside graph6 range in {s!r}", lineno)
    try:
        n, pos = _g6_size(data)
    except ParseError as exc:
        raise ParseError(str(exc), lineno) from None
    nbits = n * (n - 1) // 2
    body = data[pos:]
    if len(body) != (nbits + 5) // 6:
        raise ParseError(
            f"graph6 body has {len(body)} bytes, expected {(nbits + 5) // 6} for n={n}",
            lineno,
        )
    bits = []
    for c in body:
        x = c - 63
        bits.extend((x >> (5 - i)) & 1 for i in range(6))
    edges = []
    idx = 0
    for j in range(1, n):
        for i in range(j):
            if bits[idx]:
                edges.append((i, j))
            idx += 1
    if any(bits[nbits:]):
        raise ParseError("non-zero padding bits in graph6 string", lineno)
    return Graph(n, frozenset(edges))


def parse_graph6(text: str) -> Graph:
    """Decode a single graph6 string (optional ``>>graph6<<`` header)."""
    graphs = parse_graph6_lines(text)
    if len(graphs) != 1:
        raise ParseError(f"expected exactly one graph6 line, found {len(graphs)}")
    return graphs[0]


def parse_graph6_lines(text: str) -> list[Graph]:
    return [_parse_graph6_line(line, lineno) for lineno, line in _data_lines(text)]


def emit_graph6(G: Graph) -> str:
    n = G.n
    if n < 63:
        head = bytes([n + 63])
    elif n < 258048:
        head = bytes([126] + [((n >> s) & 63) + 63 for s in (12, 6, 0)])
    else:
        head = bytes([126, 126] + [((n >> s) & 63) + 63 for s in (30, 24, 18, 12, 6, 0)])
    bits = [1 if G.has_edge(i, j) else 0 for j in range(1, n) for i in range(j)]
    bits += [0] * (-len(bits) % 6)
    body = bytes(
        63 + sum(b << (5 - k) for k, b in enumerate(bits[i:i + 6]))
        for i in range(0, len(bits), 6)
    )
    return (head + body).decode("ascii")


def parse_coloring(text: str) -> dict[int, int]:
    """Parse ``v c`` lines into a vertex -> color map."""
    out: dict[int, int] = {}
    for lineno, line in _data_lines(text):
        v, c = _ints(line, lineno, 2)
        if v in out:
            raise ParseError(f"vertex {v} colored twice", lineno)
        out[v] = c
    return out


def emit_coloring(assignment: dict[int, int]) -> str:
    return "".join(f"{v} {c}\n" for v, c in sorted(assignment.items()))
