"""Isomorphism testing and isomorph-free enumeration of small connected graphs."""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations
from typing import Iterator

from .errors import InvalidParameter, LimitExceeded
from .graph import Graph, add_vertex, bipartition

ENUMERATION_LIMIT = 8


def vertex_invariants(G: Graph) -> list[tuple]:
    deg = [len(a) for a in G.adj]
    return [(deg[v], tuple(sorted(deg[w] for w in G.adj[v]))) for v in range(G.n)]


def invariant_key(G: Graph) -> tuple:
    return (G.n, G.m, tuple(sorted(vertex_invariants(G))))


def find_isomorphism(G: Graph, H: Graph) -> list[int] | None:
    """Return ``phi`` with ``uv in E(G) <=> phi[u]phi[v] in E(H)``, or None.

    Plain backtracking over vertex images, restricted to vertices with equal
    (degree, neighbor-degree multiset) invariants.
    """
    if G.n != H.n or G.m != H.m:
        return None
    inv_g, inv_h = vertex_invariants(G), vertex_invariants(H)
    if sorted(inv_g) != sorted(inv_h):
        return None
    n = G.n
    if n == 0:
        return []

    # Order G's vertices so each one (after the first of a component) touches
    # an earlier one; adjacency checks then prune early.
    order: list[int] = []
    placed = [False] * n
    while len(order) < n:
        best = None
        for v in range(n):
            if placed[v]:
                continue
            links = sum(1 for w in G.adj[v] if placed[w])
            key = (links, len(G.adj[v]), -v)
            if best is None or key > best[0]:
                best = (key, v)
        v = best[1]
        placed[v] = True
        order.append(v)

    candidates = {v: [h for h in range(n) if inv_h[h] == inv_g[v]] for v in range(n)}
    phi = [-1] * n
    used = [False] * n

    def extend(i: int) -> bool:
        if i == n:
            return True
        g = order[i]
        gmask = G.masks[g]
        for h in candidates[g]:
            if used[h]:
                continue
            hmask = H.masks[h]
            ok = True
            for j in range(i):
                g2 = order[j]
                if ((gmask >> g2) & 1) != ((hmask >> phi[g2]) & 1):
                    ok = False
                    break
            if not ok:
                continue
            phi[g] = h
            used[h] = True
            if extend(i + 1):
                return True
            used[h] = False
        phi[g] = -1
        return False

    return phi if extend(0) else None


def are_isomorphic(G: Graph, H: Graph) -> bool:
    return find_isomorphism(G, H) is not None


@lru_cache(maxsize=None)
def _level(n: int, bipartite: bool) -> tuple[Graph, ...]:
    if n == 1:
        return (Graph(1, frozenset()),)
    reps: list[Graph] = []
    buckets: dict[tuple, list[Graph]] = {}
    for G in _level(n - 1, bipartite):
        # Every connected graph has a non-cut vertex, so each class on n
        # vertices arises from some class on n-1 plus one new vertex.
        if bipartite:
            side = bipartition(G)
            pools = [[v for v in range(G.n) if side[v] == s] for s in (0, 1)]
        else:
            pools = [list(range(G.n))]
        for pool in pools:
            for r in range(1, len(pool) + 1):
                for nbrs in combinations(pool, r):
                    H = add_vertex(G, nbrs)
                    bucket = buckets.setdefault(invariant_key(H), [])
                    if any(are_isomorphic(H, K) for K in bucket):
                        continue
                    bucket.append(H)
                    reps.append(H)
    return tuple(reps)


def enumerate_connected(
    n: int, bipartite: bool = False, limit: int = ENUMERATION_LIMIT
) -> Iterator[Graph]:
    """Yield one representative per isomorphism class of connected graphs of order n."""
    if n < 1:
        raise InvalidParameter(f"order must be >= 1, got {n}")
    if n > limit:
        raise LimitExceeded(f"order {n} exceeds enumeration limit {limit}")
    yield from _level(n, bipartite)


def enumerate_connected_bipartite(n: int, limit: int = ENUMERATION_LIMIT) -> Iterator[Graph]:
    return enumerate_connected(n, bipartite=True, limit=limit)
