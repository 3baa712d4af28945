"""Partial proper colorings, color lists, forced propagation and capped
counting of proper k-extensions.

Colors are the integers ``1..k``. Internally a vertex's list of still-feasible
colors is an int bitmask with bit ``c`` set for color ``c``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping

from .errors import (
    ImproperInput,
    InvalidColor,
    InvalidParameter,
    LimitExceeded,
    NotExtendable,
    NotUnique,
)
from .graph import Graph

CLIQUE_LIMIT = 16


@dataclass(frozen=True, eq=False)
class PartialColoring:
    """Colors from ``1..k`` on a vertex subset; the subset is the domain ``S``."""

    k: int
    assignment: Mapping[int, int]

    def __post_init__(self) -> None:
        if self.k < 1:
            raise InvalidParameter(f"k must be >= 1, got {self.k}")
        clean = {}
        for v, c in sorted(dict(self.assignment).items()):
            if not 1 <= c <= self.k:
                raise InvalidColor(f"color {c} at vertex {v} outside 1..{self.k}")
            clean[int(v)] = int(c)
        object.__setattr__(self, "assignment", clean)

    @classmethod
    def empty(cls, k: int) -> PartialColoring:
        return cls(k, {})

    @property
    def domain(self) -> frozenset[int]:
        return frozenset(self.assignment)

    def __len__(self) -> int:
        return len(self.assignment)

    def __getitem__(self, v: int) -> int:
        return self.assignment[v]

    def get(self, v: int) -> int | None:
        return self.assignment.get(v)

    def items(self):
        return self.assignment.items()

    def restrict(self, S: Iterable[int]) -> PartialColoring:
        keep = set(S)
        return PartialColoring(self.k, {v: c for v, c in self.assignment.items() if v in keep})

    def pairs(self) -> list[list[int]]:
        return [[v, c] for v, c in self.assignment.items()]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, PartialColoring):
            return NotImplemented
        return self.k == other.k and self.assignment == other.assignment

    def __hash__(self) -> int:
        return hash((self.k, tuple(self.assignment.items())))

    def __repr__(self) -> str:
        return f"PartialColoring(k={self.k}, {self.assignment})"


@dataclass(frozen=True)
class ExtensionCount:
    """Number of proper full extensions, counted up to ``cap``.

    ``value`` is exact when below ``cap``; ``value == cap`` means "at least cap".
    """

    value: int
    cap: int

    @property
    def is_zero(self) -> bool:
        return self.value == 0

    @property
    def is_unique(self) -> bool:
        return self.value == 1 and self.cap > 1

    @property
    def saturated(self) -> bool:
        return self.value >= self.cap

    def __str__(self) -> str:
        if self.value == 0:
            return "Zero"
        if self.saturated:
            return f"AtLeast({self.cap})"
        if self.value == 1:
            return "ExactlyOne"
        return f"Exactly({self.value})"


@dataclass(frozen=True)
class Contradiction:
    """Propagation emptied the list of ``vertex``."""

    vertex: int


def _check_domain(G: Graph, C: PartialColoring) -> None:
    for v in C.assignment:
        if not 0 <= v < G.n:
            raise InvalidParameter(f"colored vertex {v} out of range 0..{G.n - 1}")


def is_proper_partial(G: Graph, C: PartialColoring) -> bool:
    _check_domain(G, C)
    a = C.assignment
    return all(
        not (u in a and v in a and a[u] == a[v]) for u, v in G.edges
    )


def _require_proper(G: Graph, C: PartialColoring) -> None:
    if not is_proper_partial(G, C):
        bad = next(
            (u, v) for u, v in G.edges
            if u in C.assignment and v in C.assignment and C[u] == C[v]
        )
        raise ImproperInput(f"improper coloring: adjacent vertices {bad[0]} and {bad[1]} share color {C[bad[0]]}")


def color_lists(G: Graph, C: PartialColoring) -> dict[int, frozenset[int]]:
    """L(v) for every uncolored vertex: colors not used by a colored neighbor."""
    _require_proper(G, C)
    a = C.assignment
    full = set(range(1, C.k + 1))
    return {
        v: frozenset(full - {a[w] for w in G.adj[v] if w in a})
        for v in range(G.n)
        if v not in a
    }


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class ExtensionEngine:
    """Counts proper k-extensions of partial colorings of one fixed graph.

    Reused across many calls by the Sudoku-number search, so adjacency and
    the full color mask are prepared once.
    """

    def __init__(self, G: Graph, k: int, propagate: bool = True):
        if k < 1:
            raise InvalidParameter(f"k must be >= 1, got {k}")
        self.G = G
        self.k = k
        self.adj = G.adj
        self.full = ((1 << (k + 1)) - 1) & ~1
        self.propagate = propagate
        self.nodes = 0

    def initial_state(self, assignment: Mapping[int, int]) -> tuple[list[int], list[bool]] | None:
        """Domains after applying the given colors, or None if some list empties."""
        dom = [self.full] * self.G.n
        assigned = [False] * self.G.n
        for v, c in assignment.items():
            dom[v] = 1 << c
            assigned[v] = True
        for v, c in assignment.items():
            bit = ~(1 << c)
            for u in self.adj[v]:
                if not assigned[u]:
                    dom[u] &= bit
                    if dom[u] == 0:
                        return None
        return dom, assigned

    def _propagate(self, dom: list[int], assigned: list[bool], free: int) -> int:
        """Assign singleton lists to fixpoint. Returns new free count, or -1 on contradiction."""
        adj = self.adj
        stack = [v for v in range(len(dom)) if not assigned[v] and dom[v] & (dom[v] - 1) == 0]
        while stack:
            v = stack.pop()
            if assigned[v]:
                continue
            d = dom[v]
            if d == 0:
                return -1
            assigned[v] = True
            free -= 1
            for u in adj[v]:
                if not assigned[u]:
                    nd = dom[u] & ~d
                    if nd == 0:
                        return -1
                    if nd != dom[u]:
                        dom[u] = nd
                        if nd & (nd - 1) == 0:
                            stack.append(u)
        return free

    def count(
        self, assignment: Mapping[int, int], cap: int
    ) -> tuple[int, list[int] | None]:
        """Return ``(min(count, cap), first extension found)`` for a proper assignment."""
        state = self.initial_state(assignment)
        if state is None:
            return 0, None
        dom, assigned = state
        free = self.G.n - len(assignment)
        found: list[list[int]] = []
        total = self._count(dom, assigned, free, cap, found)
        first = [d.bit_length() - 1 for d in found[0]] if found else None
        return total, first

    def _count(self, dom, assigned, free, budget, found) -> int:
        self.nodes += 1
        if self.propagate:
            free = self._propagate(dom, assigned, free)
            if free < 0:
                return 0
        if free == 0:
            if not found:
                found.append(list(dom))
            return 1
        # Fail-first: smallest list, ties by smallest index.
        best_v, best_size = -1, 1 << 30
        for v in range(len(dom)):
            if not assigned[v]:
                size = dom[v].bit_count()
                if size < best_size:
                    best_v, best_size = v, size
                    if size <= 1:
                        break
        if best_size == 0:
            return 0
        v = best_v
        adj = self.adj
        total = 0
        for c in _bits(dom[v]):
            bit = 1 << c
            nd = list(dom)
            na = list(assigned)
            nd[v] = bit
            na[v] = True
            dead = False
            for u in adj[v]:
                if not na[u]:
                    nd[u] &= ~bit
                    if nd[u] == 0:
                        dead = True
                        break
            if dead:
                continue
            total += self._count(nd, na, free - 1, budget - total, found)
            if total >= budget:
                return total
        return total


def count_extensions(G: Graph, C: PartialColoring, cap: int = 2) -> ExtensionCount:
    """Count proper k-colorings of all of G that agree with C, stopping at ``cap``."""
    if cap < 2:
        raise InvalidParameter(f"cap must be >= 2, got {cap}")
    _require_proper(G, C)
    value, _ = ExtensionEngine(G, C.k).count(C.assignment, cap)
    return ExtensionCount(value, cap)


def propagate(G: Graph, C: PartialColoring) -> PartialColoring | Contradiction:
    """Assign every singleton-list vertex until nothing changes."""
    _require_proper(G, C)
    a = dict(C.assignment)
    while True:
        changed = False
        for v in range(G.n):
            if v in a:
                continue
            lst = set(range(1, C.k + 1)) - {a[w] for w in G.adj[v] if w in a}
            if not lst:
                return Contradiction(v)
            if len(lst) == 1:
                a[v] = lst.pop()
                changed = True
        if not changed:
            return PartialColoring(C.k, a)


def unique_extension(G: Graph, C: PartialColoring) -> dict[int, int]:
    """The unique proper k-coloring extending C.

    Raises NotExtendable when there is none and NotUnique when there are several.
    """
    _require_proper(G, C)
    value, first = ExtensionEngine(G, C.k).count(C.assignment, 2)
    if value == 0:
        raise NotExtendable("no proper extension exists")
    if value > 1:
        raise NotUnique("at least two proper extensions exist")
    return dict(enumerate(first))


def _max_clique(G: Graph) -> list[int]:
    """Lexicographically first maximum clique (include-first branch and bound)."""
    masks = G.masks
    best: list[int] = []
    current: list[int] = []

    def expand(cand: int) -> None:
        nonlocal best
        if cand == 0:
            if len(current) > len(best):
                best = list(current)
            return
        if len(current) + cand.bit_count() <= len(best):
            return
        low = cand & -cand
        v = low.bit_length() - 1
        current.append(v)
        expand(cand & masks[v])
        current.pop()
        expand(cand & ~low)

    expand((1 << G.n) - 1)
    return best


def maximum_clique(G: Graph, limit: int = CLIQUE_LIMIT) -> list[int]:
    if G.n > limit:
        raise LimitExceeded(f"clique search limited to n <= {limit}, got {G.n}")
    return _max_clique(G)


def clique_number(G: Graph, limit: int = CLIQUE_LIMIT) -> int:
    return len(maximum_clique(G, limit))


def chromatic_number(G: Graph) -> int:
    """Smallest k (from the clique bound up) admitting a proper k-coloring."""
    if G.n < 1:
        raise InvalidParameter("chromatic number needs n >= 1")
    k = max(1, len(_max_clique(G)))
    while True:
        value, _ = ExtensionEngine(G, k).count({}, 1)
        if value:
            return k
        k += 1
