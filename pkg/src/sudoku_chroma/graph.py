"""Immutable simple graphs and the graph families used throughout the package.

Vertices are always the dense range ``0..n-1``. Every generator documents its
labeling so that hand-drawn fixtures map onto vertex indices deterministically.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Sequence

from .errors import InvalidClique, InvalidEdge, InvalidParameter

Edge = tuple[int, int]


def _norm_edge(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertices ``0..n-1``.

    ``edges`` holds unordered pairs normalized to ``(u, v)`` with ``u < v``.
    Adjacency tuples and neighbor bitmasks are derived once at construction.
    """

    n: int
    edges: frozenset[Edge]
    adj: tuple[tuple[int, ...], ...] = field(init=False, repr=False, compare=False)
    masks: tuple[int, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        if self.n < 0:
            raise InvalidParameter(f"vertex count must be non-negative, got {self.n}")
        nbrs: list[list[int]] = [[] for _ in range(self.n)]
        for u, v in self.edges:
            if u == v:
                raise InvalidParameter(f"self-loop at vertex {u}")
            if not (0 <= u < v < self.n):
                raise InvalidParameter(f"edge ({u}, {v}) is not normalized or out of range")
            nbrs[u].append(v)
            nbrs[v].append(u)
        object.__setattr__(self, "adj", tuple(tuple(sorted(a)) for a in nbrs))
        object.__setattr__(
            self, "masks", tuple(sum(1 << w for w in a) for a in nbrs)
        )

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Sequence[int]]) -> Graph:
        """Build a graph, normalizing pair orientation and rejecting duplicates."""
        seen: set[Edge] = set()
        for e in edges:
            u, v = int(e[0]), int(e[1])
            if u == v:
                raise InvalidParameter(f"self-loop at vertex {u}")
            for w in (u, v):
                if not 0 <= w < n:
                    raise InvalidParameter(f"vertex {w} out of range 0..{n - 1}")
            key = _norm_edge(u, v)
            if key in seen:
                raise InvalidParameter(f"duplicate edge {key}")
            seen.add(key)
        return cls(n, frozenset(seen))

    @property
    def m(self) -> int:
        return len(self.edges)

    def vertices(self) -> range:
        return range(self.n)

    def has_edge(self, u: int, v: int) -> bool:
        return _norm_edge(u, v) in self.edges

    def sorted_edges(self) -> list[Edge]:
        return sorted(self.edges)

    def neighbors(self, v: int) -> tuple[int, ...]:
        _check_vertex(self, v)
        return self.adj[v]

    def __str__(self) -> str:
        return f"Graph(n={self.n}, edges={self.sorted_edges()})"


def _check_vertex(G: Graph, v: int) -> None:
    if not 0 <= v < G.n:
        raise InvalidParameter(f"vertex {v} out of range 0..{G.n - 1}")


# ---------------------------------------------------------------------------
# Families
# ---------------------------------------------------------------------------

def build_path(n: int) -> Graph:
    """P_n on ``0..n-1`` with edges ``{i, i+1}``."""
    if n < 1:
        raise InvalidParameter(f"path needs n >= 1, got {n}")
    return Graph(n, frozenset((i, i + 1) for i in range(n - 1)))


def build_cycle(n: int) -> Graph:
    """C_n: the path edges plus ``{n-1, 0}``."""
    if n < 3:
        raise InvalidParameter(f"cycle needs n >= 3, got {n}")
    return Graph(n, frozenset([(i, i + 1) for i in range(n - 1)] + [(0, n - 1)]))


def build_complete(n: int) -> Graph:
    if n < 1:
        raise InvalidParameter(f"complete graph needs n >= 1, got {n}")
    return Graph(n, frozenset(combinations(range(n), 2)))


def build_complete_bipartite(m: int, n: int) -> Graph:
    """K_{m,n} with parts ``X = 0..m-1`` and ``Y = m..m+n-1``."""
    if m < 1 or n < 1:
        raise InvalidParameter(f"K_(m,n) needs m, n >= 1, got ({m}, {n})")
    return Graph(m + n, frozenset((x, y) for x in range(m) for y in range(m, m + n)))


def build_star(n: int) -> Graph:
    """K_{1,n}: center 0, leaves ``1..n``."""
    return build_complete_bipartite(1, n)


def build_bistar(m: int, n: int) -> Graph:
    """B(m,n): centers 0 and 1, pendants ``2..m+1`` on 0 and ``m+2..m+n+1`` on 1."""
    if m < 1 or n < 1:
        raise InvalidParameter(f"bistar needs m, n >= 1, got ({m}, {n})")
    edges = [(0, 1)]
    edges += [(0, 2 + i) for i in range(m)]
    edges += [(1, 2 + m + j) for j in range(n)]
    return Graph(m + n + 2, frozenset(edges))


def corona(base: Graph, l: int) -> Graph:
    """G o lK_1: base vertex ``i`` gains pendants ``n + i*l .. n + i*l + l - 1``."""
    if l < 1:
        raise InvalidParameter(f"corona needs l >= 1, got {l}")
    n = base.n
    edges = set(base.edges)
    for i in range(n):
        for j in range(l):
            edges.add((i, n + i * l + j))
    return Graph(n * (1 + l), frozenset(edges))


def attach_clique(base: Graph, u: int, v: int, m: int) -> Graph:
    """Glue K_m onto the edge ``{u, v}``; new vertices are ``n..n+m-3``."""
    _check_vertex(base, u)
    _check_vertex(base, v)
    if not base.has_edge(u, v):
        raise InvalidEdge(f"({u}, {v}) is not an edge")
    if m < 3:
        raise InvalidParameter(f"attached clique needs m >= 3, got {m}")
    n = base.n
    members = [u, v] + list(range(n, n + m - 2))
    edges = set(base.edges)
    edges.update(_norm_edge(a, b) for a, b in combinations(members, 2))
    return Graph(n + m - 2, frozenset(edges))


def add_vertex(base: Graph, neighbors: Iterable[int]) -> Graph:
    """Append vertex ``n`` adjacent to exactly ``neighbors``."""
    nbrs = sorted(set(neighbors))
    for v in nbrs:
        _check_vertex(base, v)
    w = base.n
    return Graph(w + 1, base.edges | frozenset((v, w) for v in nbrs))


def add_apex(base: Graph, clique: Iterable[int]) -> Graph:
    """Append vertex ``w = n`` joined to every vertex of ``clique``."""
    members = sorted(set(clique))
    for v in members:
        _check_vertex(base, v)
    for a, b in combinations(members, 2):
        if not base.has_edge(a, b):
            raise InvalidClique(f"{members} is not a clique: ({a}, {b}) missing")
    return add_vertex(base, members)


def embed_kplus1(base: Graph, k: int) -> tuple[Graph, Graph]:
    """Return ``(G2, G3)``: ``G2 = base o kK_1`` and ``G3`` adds a vertex joined to all base vertices."""
    from .coloring import chromatic_number

    if k < 3:
        raise InvalidParameter(f"embedding needs k >= 3, got {k}")
    chi = chromatic_number(base)
    if chi != k:
        raise InvalidParameter(f"k={k} differs from chromatic number {chi}")
    g2 = corona(base, k)
    g3 = add_vertex(g2, range(base.n))
    return g2, g3


def disjoint_union(*graphs: Graph) -> Graph:
    offset = 0
    edges: list[Edge] = []
    for g in graphs:
        edges.extend((u + offset, v + offset) for u, v in g.edges)
        offset += g.n
    return Graph(offset, frozenset(edges))


# ---------------------------------------------------------------------------
# Structural queries
# ---------------------------------------------------------------------------

def degree(G: Graph, v: int) -> int:
    _check_vertex(G, v)
    return len(G.adj[v])


def degrees(G: Graph) -> list[int]:
    return [len(a) for a in G.adj]


def max_degree(G: Graph) -> int:
    return max((len(a) for a in G.adj), default=0)


def pendant_vertices(G: Graph) -> list[int]:
    return [v for v in range(G.n) if len(G.adj[v]) == 1]


def components(G: Graph) -> list[list[int]]:
    seen = [False] * G.n
    out = []
    for s in range(G.n):
        if seen[s]:
            continue
        seen[s] = True
        comp = [s]
        queue = deque([s])
        while queue:
            x = queue.popleft()
            for y in G.adj[x]:
                if not seen[y]:
                    seen[y] = True
                    comp.append(y)
                    queue.append(y)
        out.append(sorted(comp))
    return out


def is_connected(G: Graph) -> bool:
    return G.n <= 1 or len(components(G)) == 1


def bipartition(G: Graph) -> list[int] | None:
    """Side (0/1) of every vertex, BFS from the lowest index of each component, or None."""
    side = [-1] * G.n
    for s in range(G.n):
        if side[s] >= 0:
            continue
        side[s] = 0
        queue = deque([s])
        while queue:
            x = queue.popleft()
            for y in G.adj[x]:
                if side[y] < 0:
                    side[y] = 1 - side[x]
                    queue.append(y)
                elif side[y] == side[x]:
                    return None
    return side


def is_bipartite(G: Graph) -> bool:
    return bipartition(G) is not None


def induced_subgraph(G: Graph, S: Iterable[int]) -> tuple[Graph, list[int]]:
    """Return ``(G[S], order)`` where new vertex ``i`` is original vertex ``order[i]``."""
    order = sorted(set(S))
    for v in order:
        _check_vertex(G, v)
    index = {v: i for i, v in enumerate(order)}
    edges = [
        (index[u], index[v]) for u, v in G.edges if u in index and v in index
    ]
    return Graph(len(order), frozenset(_norm_edge(a, b) for a, b in edges)), order
