"""Named graph families and the ``name:params`` spec-string grammar.

Grammar (``BASE`` is any spec string)::

    path:N  cycle:N  star:N  complete:N  kmn:M,N  bistar:M,N
    g6:STRING                  any graph6 string
    corona:BASE:lL             BASE o lK_1
    attach:BASE@U-V:KM         K_M glued onto edge U-V of BASE
    apex:BASE@V1-V2-...        new vertex joined to the clique V1, V2, ...
    embed:BASE[:g2]            G3 (default) or G2 of the k+1 embedding, k = chi(BASE)
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from . import graph as g
from .errors import InvalidParameter, ParseError


class FamilySpec:
    """Base class of the tagged union; subclasses know how to build their graph."""

    def build(self) -> g.Graph:
        raise NotImplementedError

    @property
    def family(self) -> str:
        return type(self).__name__.lower()

    @property
    def params(self) -> str:
        return str(self).split(":", 1)[1] if ":" in str(self) else ""


@dataclass(frozen=True)
class Path(FamilySpec):
    n: int

    def build(self) -> g.Graph:
        return g.build_path(self.n)

    def __str__(self) -> str:
        return f"path:{self.n}"


@dataclass(frozen=True)
class Cycle(FamilySpec):
    n: int

    def build(self) -> g.Graph:
        return g.build_cycle(self.n)

    def __str__(self) -> str:
        return f"cycle:{self.n}"


@dataclass(frozen=True)
class Star(FamilySpec):
    """K_{1,n}."""

    n: int

    def build(self) -> g.Graph:
        return g.build_star(self.n)

    def __str__(self) -> str:
        return f"star:{self.n}"


@dataclass(frozen=True)
class Complete(FamilySpec):
    n: int

    def build(self) -> g.Graph:
        return g.build_complete(self.n)

    def __str__(self) -> str:
        return f"complete:{self.n}"


@dataclass(frozen=True)
class CompleteBipartite(FamilySpec):
    m: int
    n: int

    def build(self) -> g.Graph:
        return g.build_complete_bipartite(self.m, self.n)

    def __str__(self) -> str:
        return f"kmn:{self.m},{self.n}"


@dataclass(frozen=True)
class Bistar(FamilySpec):
    m: int
    n: int

    def build(self) -> g.Graph:
        return g.build_bistar(self.m, self.n)

    def __str__(self) -> str:
        return f"bistar:{self.m},{self.n}"


@dataclass(frozen=True)
class Given(FamilySpec):
    """An arbitrary graph, labelled by its graph6 string."""

    graph: g.Graph

    def build(self) -> g.Graph:
        return self.graph

    def __str__(self) -> str:
        from .io import emit_graph6

        return f"g6:{emit_graph6(self.graph)}"


@dataclass(frozen=True)
class Corona(FamilySpec):
    base: FamilySpec
    l: int

    def build(self) -> g.Graph:
        return g.corona(self.base.build(), self.l)

    def __str__(self) -> str:
        return f"corona:{self.base}:l{self.l}"


@dataclass(frozen=True)
class AttachClique(FamilySpec):
    base: FamilySpec
    edge: tuple[int, int]
    m: int

    def build(self) -> g.Graph:
        return g.attach_clique(self.base.build(), self.edge[0], self.edge[1], self.m)

    @property
    def family(self) -> str:
        return "attach"

    def __str__(self) -> str:
        return f"attach:{self.base}@{self.edge[0]}-{self.edge[1]}:K{self.m}"


@dataclass(frozen=True)
class Apex(FamilySpec):
    base: FamilySpec
    clique: tuple[int, ...]

    def build(self) -> g.Graph:
        return g.add_apex(self.base.build(), self.clique)

    def __str__(self) -> str:
        return f"apex:{self.base}@{'-'.join(map(str, self.clique))}"


@dataclass(frozen=True)
class Embed(FamilySpec):
    base: FamilySpec
    which: int = 3

    def build(self) -> g.Graph:
        from .coloring import chromatic_number

        base = self.base.build()
        g2, g3 = g.embed_kplus1(base, chromatic_number(base))
        return g3 if self.which == 3 else g2

    def __str__(self) -> str:
        return f"embed:{self.base}" + (":g2" if self.which == 2 else "")


_SIMPLE = {"path": Path, "cycle": Cycle, "star": Star, "complete": Complete}
_PAIR = {"kmn": CompleteBipartite, "bistar": Bistar}

GRAMMAR_HINT = (
    "expected one of path:N, cycle:N, star:N, complete:N, kmn:M,N, bistar:M,N, "
    "g6:STRING, corona:BASE:lL, attach:BASE@U-V:KM, apex:BASE@V1-V2-..., embed:BASE[:g2]"
)


def parse_family(text: str) -> FamilySpec:
    s = text.strip()
    name, sep, rest = s.partition(":")
    if not sep:
        raise ParseError(f"bad family spec {text!r}; {GRAMMAR_HINT}")
    if name in _SIMPLE:
        if not re.fullmatch(r"\d+", rest):
            raise ParseError(f"bad parameter in {text!r}; {GRAMMAR_HINT}")
        return _SIMPLE[name](int(rest))
    if name in _PAIR:
        mt = re.fullmatch(r"(\d+),(\d+)", rest)
        if not mt:
            raise ParseError(f"bad parameters in {text!r}; {GRAMMAR_HINT}")
        return _PAIR[name](int(mt[1]), int(mt[2]))
    if name == "g6":
        from .io import parse_graph6

        return Given(parse_graph6(rest))
    if name == "corona":
        mt = re.fullmatch(r"(.+):l(\d+)", rest)
        if not mt:
            raise ParseError(f"bad corona spec {text!r}; {GRAMMAR_HINT}")
        return Corona(parse_family(mt[1]), int(mt[2]))
    if name == "attach":
        mt = re.fullmatch(r"(.+)@(\d+)-(\d+):K(\d+)", rest)
        if not mt:
            raise ParseError(f"bad attach spec {text!r}; {GRAMMAR_HINT}")
        return AttachClique(parse_family(mt[1]), (int(mt[2]), int(mt[3])), int(mt[4]))
    if name == "apex":
        mt = re.fullmatch(r"(.+)@(\d+(?:-\d+)*)", rest)
        if not mt:
            raise ParseError(f"bad apex spec {text!r}; {GRAMMAR_HINT}")
        return Apex(parse_family(mt[1]), tuple(int(x) for x in mt[2].split("-")))
    if name == "embed":
        if rest.endswith(":g2"):
            return Embed(parse_family(rest[:-3]), 2)
        return Embed(parse_family(rest))
    raise ParseError(f"unknown family {name!r}; {GRAMMAR_HINT}")


def build_family(text: str) -> g.Graph:
    try:
        return parse_family(text).build()
    except InvalidParameter as exc:
        raise ParseError(f"{text!r}: {exc}") from None
