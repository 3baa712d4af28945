"""Exact k-Sudoku numbers with witness certificates.

The search walks witness sizes upward from a degree-based lower bound. For each
size it visits vertex sets in lexicographic order and, per set, every
color-canonical proper coloring in lexicographic order, so the first success
is the tie-break minimum (smallest |S|, then S, then C0).
"""

from __future__ import annotations

import logging
import math
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterator, Sequence

from .coloring import (
    ExtensionEngine,
    PartialColoring,
    chromatic_number,
    count_extensions,
    is_proper_partial,
)
from .errors import ChromaticViolation, InvalidParameter, LimitExceeded
from .graph import Edge, Graph, is_connected

log = logging.getLogger(__name__)

SEARCH_LIMIT = 14


@dataclass(frozen=True)
class SudokuCertificate:
    """``(k, S, C0, F)``: C0 on S extends uniquely to the full coloring F."""

    k: int
    S: tuple[int, ...]
    C0: PartialColoring
    F: tuple[int, ...]

    def to_json(self, n: int, sn: int | None = None) -> dict:
        return {
            "k": self.k,
            "n": n,
            "S": list(self.S),
            "C0": self.C0.pairs(),
            "F": [[v, c] for v, c in enumerate(self.F)],
            "sn": len(self.S) if sn is None else sn,
        }

    @classmethod
    def from_json(cls, data: dict) -> tuple[SudokuCertificate, int, int]:
        """Return ``(certificate, n, sn)``; raises InvalidParameter on malformed input."""
        try:
            k = int(data["k"])
            n = int(data["n"])
            sn = int(data["sn"])
            S = tuple(int(v) for v in data["S"])
            c0 = {int(v): int(c) for v, c in data["C0"]}
            f = {int(v): int(c) for v, c in data["F"]}
        except (KeyError, TypeError, ValueError) as exc:
            raise InvalidParameter(f"malformed certificate: {exc!r}") from None
        if len(c0) != len(data["C0"]) or len(f) != len(data["F"]):
            raise InvalidParameter("malformed certificate: repeated vertex")
        if sorted(f) != list(range(n)):
            raise InvalidParameter("malformed certificate: F must color every vertex 0..n-1")
        F = tuple(f[v] for v in range(n))
        return cls(k, S, PartialColoring(k, c0), F), n, sn


@dataclass
class SearchStats:
    subsets: int = 0
    colorings: int = 0
    elapsed: float = 0.0


@dataclass(frozen=True)
class SnResult:
    sn: int
    certificate: SudokuCertificate
    stats: SearchStats = field(compare=False)
    warnings: tuple[str, ...] = ()


def _check_budget(G: Graph, k: int) -> int:
    chi = chromatic_number(G)
    if k < chi:
        raise ChromaticViolation(f"k={k} is below the chromatic number {chi}")
    return chi


def is_sudoku_coloring(G: Graph, C0: PartialColoring) -> bool:
    """True iff C0 has exactly one proper k-extension to all of G."""
    _check_budget(G, C0.k)
    return count_extensions(G, C0, 2).is_unique


def required_vertices(G: Graph, k: int) -> list[int]:
    """Vertices of degree <= k-2; any uncolored one keeps two free colors."""
    if k < 2:
        raise InvalidParameter(f"pruning rules need k >= 2, got {k}")
    return [v for v in range(G.n) if len(G.adj[v]) <= k - 2]


def constraint_edges(G: Graph, k: int) -> list[Edge]:
    """Edges whose endpoints both have degree <= k-1; a witness meets each one."""
    if k < 2:
        raise InvalidParameter(f"pruning rules need k >= 2, got {k}")
    return [
        (u, v) for u, v in G.sorted_edges()
        if len(G.adj[u]) <= k - 1 and len(G.adj[v]) <= k - 1
    ]


def min_vertex_cover(edges: Sequence[Edge]) -> list[int]:
    """Exact minimum vertex cover by branching on an uncovered edge."""
    best: list[int] | None = None

    def branch(remaining: list[Edge], chosen: list[int]) -> None:
        nonlocal best
        if best is not None and len(chosen) >= len(best):
            return
        if not remaining:
            best = sorted(chosen)
            return
        # Every remaining edge needs one more vertex; a matching gives a bound.
        matched: set[int] = set()
        matching = 0
        for a, b in remaining:
            if a not in matched and b not in matched:
                matched.update((a, b))
                matching += 1
        if best is not None and len(chosen) + matching >= len(best):
            return
        u, v = remaining[0]
        for pick in (u, v):
            rest = [e for e in remaining if pick not in e]
            branch(rest, chosen + [pick])

    branch(list(edges), [])
    return best or []


def _pruning_sets(G: Graph, k: int) -> tuple[list[int], list[Edge]]:
    """Required vertices and the constraint edges not already met by them."""
    if k < 2:
        return [], []
    req = required_vertices(G, k)
    rset = set(req)
    edges = [e for e in constraint_edges(G, k) if e[0] not in rset and e[1] not in rset]
    return req, edges


def lower_bound(G: Graph, k: int) -> int:
    req, edges = _pruning_sets(G, k)
    return len(req) + len(min_vertex_cover(edges))


def canonical_colorings(G: Graph, S: Sequence[int], k: int) -> Iterator[tuple[int, ...]]:
    """Proper colorings of G[S] (in S order) up to color permutation, lexicographically.

    The first vertex gets color 1 and each new color is the smallest unused one.
    """
    S = list(S)
    earlier = [
        [j for j in range(i) if S[j] in G.adj[S[i]]] for i in range(len(S))
    ]
    colors = [0] * len(S)

    def rec(i: int, used: int) -> Iterator[tuple[int, ...]]:
        if i == len(S):
            yield tuple(colors)
            return
        banned = {colors[j] for j in earlier[i]}
        for c in range(1, min(used + 1, k) + 1):
            if c in banned:
                continue
            colors[i] = c
            yield from rec(i + 1, max(used, c))
        colors[i] = 0

    yield from rec(0, 0)


def _scan(G: Graph, k: int, subsets: Sequence[tuple[int, ...]]):
    """Scan subsets in order; return (first witness or None, subsets seen, colorings seen)."""
    engine = ExtensionEngine(G, k)
    n_sub = n_col = 0
    for S in subsets:
        n_sub += 1
        for cols in canonical_colorings(G, S, k):
            n_col += 1
            assignment = dict(zip(S, cols))
            value, first = engine.count(assignment, 2)
            if value == 1:
                return (S, cols, tuple(first)), n_sub, n_col
    return None, n_sub, n_col


def _scan_chunk(args):
    G, k, subsets = args
    return _scan(G, k, subsets)


def _subsets_of_size(
    n_free: Sequence[int], req: Sequence[int], edges: Sequence[Edge], size: int
) -> Iterator[tuple[int, ...]]:
    need = size - len(req)
    if need < 0 or need > len(n_free):
        return
    for T in combinations(n_free, need):
        if edges:
            ts = set(T)
            if not all(a in ts or b in ts for a, b in edges):
                continue
        yield tuple(sorted(req + list(T)))


def sudoku_number(
    G: Graph,
    k: int,
    limit: int = SEARCH_LIMIT,
    workers: int = 1,
    prune: bool = True,
) -> SnResult:
    """Exact sn(G, k) with the tie-break-minimal certificate.

    ``limit`` bounds the number of vertices left free after forced-vertex
    reduction. ``workers > 1`` evaluates each size class in a process pool;
    the certificate is identical to the sequential one.
    """
    if G.n < 1:
        raise InvalidParameter("graph must have at least one vertex")
    if workers < 1:
        raise InvalidParameter(f"workers must be >= 1, got {workers}")
    _check_budget(G, k)
    start = time.perf_counter()
    warnings: list[str] = []
    if not is_connected(G):
        warnings.append("graph is disconnected; theorems in this package assume connectivity")
        log.debug("solving disconnected graph with n=%d", G.n)

    if prune:
        req, edges = _pruning_sets(G, k)
        first_size = len(req) + len(min_vertex_cover(edges))
    else:
        req, edges, first_size = [], [], 0
    rset = set(req)
    free = [v for v in range(G.n) if v not in rset]
    if len(free) > limit:
        raise LimitExceeded(
            f"{len(free)} free vertices after forced-vertex reduction exceed limit {limit}"
        )

    stats = SearchStats()
    pool = ProcessPoolExecutor(max_workers=workers) if workers > 1 else None
    try:
        for size in range(first_size, G.n + 1):
            subsets = _subsets_of_size(free, req, edges, size)
            if pool is None:
                hit, ns, nc = _scan(G, k, subsets)
                stats.subsets += ns
                stats.colorings += nc
            else:
                hit = _parallel_scan(pool, G, k, list(subsets), workers, stats)
            if hit is not None:
                S, cols, F = hit
                cert = SudokuCertificate(k, S, PartialColoring(k, dict(zip(S, cols))), F)
                stats.elapsed = time.perf_counter() - start
                return SnResult(size, cert, stats, tuple(warnings))
    finally:
        if pool is not None:
            pool.shutdown(cancel_futures=True)
    raise AssertionError("unreachable: coloring every vertex is always a Sudoku coloring")


def _parallel_scan(pool, G, k, subsets, workers, stats):
    if not subsets:
        return None
    chunk = max(1, math.ceil(len(subsets) / (workers * 4)))
    jobs = [(G, k, subsets[i:i + chunk]) for i in range(0, len(subsets), chunk)]
    # map() yields in submission order, so the first hit is the lexicographic minimum.
    for hit, ns, nc in pool.map(_scan_chunk, jobs):
        stats.subsets += ns
        stats.colorings += nc
        if hit is not None:
            return hit
    return None


def sudoku_number_chromatic(G: Graph, limit: int = SEARCH_LIMIT, workers: int = 1) -> SnResult:
    """sn(G) = sn(G, chi(G))."""
    return sudoku_number(G, chromatic_number(G), limit=limit, workers=workers)


def verify_certificate(G: Graph, cert: SudokuCertificate, sn: int | None = None) -> list[str]:
    """Independent re-check of a certificate; returns a list of problems (empty if valid)."""
    problems = []
    chi = chromatic_number(G)
    if cert.k < chi:
        problems.append(f"k={cert.k} below chromatic number {chi}")
    if sorted(cert.C0.domain) != sorted(cert.S):
        problems.append("C0 domain differs from S")
    if sn is not None and sn != len(cert.S):
        problems.append(f"sn={sn} differs from |S|={len(cert.S)}")
    if any(not 0 <= v < G.n for v in cert.S):
        problems.append("S contains out-of-range vertices")
        return problems
    if not is_proper_partial(G, cert.C0):
        problems.append("C0 is not proper on G[S]")
        return problems
    if len(cert.F) != G.n:
        problems.append(f"F colors {len(cert.F)} vertices, graph has {G.n}")
        return problems
    if any(not 1 <= c <= cert.k for c in cert.F):
        problems.append("F uses colors outside 1..k")
    if any(cert.F[u] == cert.F[v] for u, v in G.edges):
        problems.append("F is not a proper coloring")
    if any(cert.F[v] != c for v, c in cert.C0.items()):
        problems.append("F disagrees with C0 (extension mismatch)")
    value, first = ExtensionEngine(G, cert.C0.k).count(cert.C0.assignment, 2)
    if value == 0:
        problems.append("C0 is not extendable (NotExtendable)")
    elif value > 1:
        problems.append("C0 has at least two extensions (NotUnique)")
    elif tuple(first) != tuple(cert.F):
        problems.append("unique extension differs from F (extension mismatch)")
    return problems
