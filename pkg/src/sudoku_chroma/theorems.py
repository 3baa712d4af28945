"""Closed-form predictions for the known Sudoku-number results, and checkers
that compare each prediction with the exact solver.

Predictors never call the solver and the solver never sees a prediction:
every report carries both numbers so a wrong closed form shows up as a
mismatch instead of being silently reproduced.
"""

from __future__ import annotations

import json
import math
import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass
from importlib import resources
from typing import Callable, Iterable, Iterator

from . import families as fam
from .coloring import chromatic_number, maximum_clique
from .enumeration import are_isomorphic, enumerate_connected, enumerate_connected_bipartite
from .errors import NotApplicable, SudokuChromaError
from .graph import (
    Graph,
    add_apex,
    add_vertex,
    attach_clique,
    build_bistar,
    build_cycle,
    build_path,
    build_star,
    is_bipartite,
    is_connected,
    max_degree,
)
from .io import emit_graph6
from .search import SEARCH_LIMIT, sudoku_number, sudoku_number_chromatic


@dataclass(frozen=True)
class Prediction:
    source: str
    value: int
    applicability: str


@dataclass
class CheckReport:
    instance_id: str
    family: str
    params: str
    n: int
    k: int | str
    predicted: int | str
    computed: int | str
    verdict: str
    millis: int
    note: str = ""

    @property
    def ok(self) -> bool:
        return self.verdict == "match"


CSV_COLUMNS = ["instance_id", "family", "params", "n", "k", "predicted", "computed", "verdict", "millis"]


def _ceil_half(n: int) -> int:
    return (n + 2) // 2


# ---------------------------------------------------------------------------
# Predictors
# ---------------------------------------------------------------------------

def predicted_sn3(spec: fam.FamilySpec) -> Prediction:
    """3-Sudoku number predicted by the closed forms for bipartite families."""
    if isinstance(spec, fam.Path) and spec.n >= 1:
        return Prediction("path", _ceil_half(spec.n), f"P_{spec.n}: ceil((n+1)/2)")
    if isinstance(spec, fam.Cycle) and spec.n >= 4 and spec.n % 2 == 0:
        return Prediction("even-cycle", spec.n // 2, f"C_{spec.n} is an even cycle")
    if isinstance(spec, fam.Star) and spec.n >= 2:
        return Prediction("star", spec.n, f"K_1,{spec.n} with n >= 2")
    if isinstance(spec, fam.CompleteBipartite) and 2 <= spec.m <= spec.n:
        return Prediction("complete-bipartite", spec.m, f"K_{spec.m},{spec.n} with 2 <= m <= n")
    if isinstance(spec, fam.Bistar):
        if spec.m == spec.n == 1:
            return Prediction("bistar", 3, "B_1,1 is P_4")
        return Prediction("bistar", spec.m + spec.n, f"B_{spec.m},{spec.n}")
    if isinstance(spec, fam.Corona) and spec.l >= 1:
        base = spec.base.build()
        if not is_bipartite(base) or not is_connected(base):
            raise NotApplicable(f"corona base {spec.base} must be connected and bipartite")
        value = base.n + 1 if spec.l == 1 else spec.l * base.n
        return Prediction("corona", value, f"connected bipartite base of order {base.n}, l={spec.l}; k=3 assumed")
    raise NotApplicable(f"no 3-Sudoku closed form covers {spec}")


def predicted_sn_attach_clique(n: int, m: int) -> Prediction:
    """Sudoku number of P_n with K_m glued onto one of its edges."""
    if n < 2 or m < 3:
        raise NotApplicable(f"needs n >= 2 and m >= 3, got n={n}, m={m}")
    if m == 3:
        return Prediction("clique-attachment", _ceil_half(n), "m = 3: same as sn(P_n, 3)")
    return Prediction("clique-attachment", n + m - 4, "m >= 4: n + m - 4")


def predicted_sn(spec: fam.FamilySpec) -> tuple[Prediction, int | None]:
    """Prediction plus the color budget it refers to (None = chromatic number)."""
    if isinstance(spec, fam.AttachClique) and isinstance(spec.base, fam.Path):
        return predicted_sn_attach_clique(spec.base.n, spec.m), None
    return predicted_sn3(spec), 3


# ---------------------------------------------------------------------------
# Classification of connected bipartite graphs by n - sn(G, 3)
# ---------------------------------------------------------------------------

def _c4_with_pendant() -> Graph:
    return add_vertex(build_cycle(4), [0])


def broom(l: int) -> Graph:
    """P_4 = 0-1-2-3 with ``l`` pendants on the end vertex 3."""
    G = build_path(4)
    for _ in range(l):
        G = add_vertex(G, [3])
    return G


def _p5_center_pendant() -> Graph:
    return add_vertex(build_path(5), [2])


def _templates(n: int) -> Iterator[tuple[str, str, Graph]]:
    """(class, family label, graph) for every listed family of order n."""
    if n == 1:
        yield "n", "K_1", build_path(1)
    if n == 2:
        yield "n", "K_2", build_path(2)
    if n >= 3:
        yield "n-1", f"K_1,{n - 1}", build_star(n - 1)
    if n == 4:
        yield "n-1", "P_4", build_path(4)
    for a in range(1, n - 2):
        b = n - 2 - a
        if a <= b and (a, b) != (1, 1):
            yield "n-2", f"B_{a},{b}", build_bistar(a, b)
    if n in (5, 6):
        yield "n-2", f"P_{n}", build_path(n)
    if n == 4:
        yield "n-2", "C_4", build_cycle(4)
    if n == 5:
        yield "n-2", "C_4+pendant", _c4_with_pendant()
    if n >= 6:
        yield "n-2", f"broom(P_4,{n - 4})", broom(n - 4)
    if n == 6:
        yield "n-2", "P_5+center-pendant", _p5_center_pendant()


def match_family(G: Graph) -> tuple[str, str]:
    """Return (class, family label); ("other", "") when no listed family matches."""
    if not is_connected(G) or not is_bipartite(G):
        raise NotApplicable("classification needs a connected bipartite graph")
    for cls, label, T in _templates(G.n):
        if are_isomorphic(G, T):
            return cls, label
    return "other", ""


def classify_sn3(G: Graph) -> str:
    return match_family(G)[0]


def class_from_sn(n: int, sn: int) -> str:
    return {0: "n", 1: "n-1", 2: "n-2"}.get(n - sn, "other")


# ---------------------------------------------------------------------------
# Checks
# ---------------------------------------------------------------------------

def _report(instance_id, family, params, n, k, predicted, computed, ok, t0, note=""):
    return CheckReport(
        instance_id, family, params, n, k, predicted, computed,
        "match" if ok else "mismatch", int((time.perf_counter() - t0) * 1000), note,
    )


def _error_report(instance_id, family, params, exc, t0) -> CheckReport:
    return CheckReport(instance_id, family, params, 0, "", "", "", "error",
                       int((time.perf_counter() - t0) * 1000), f"{type(exc).__name__}: {exc}")


def check_instance(spec: fam.FamilySpec, expect: int | None = None, limit: int = SEARCH_LIMIT,
                   k: int = 3) -> CheckReport:
    """Predicted vs computed Sudoku number for one family instance.

    ``expect`` replaces the closed-form prediction (used to self-test the harness).
    Clique attachments are solved at their chromatic number; everything else at ``k``.
    """
    t0 = time.perf_counter()
    sid = str(spec)
    try:
        pred, pk = predicted_sn(spec)
        if pk is not None and pk != k:
            raise NotApplicable(f"closed form for {spec} holds for k={pk}, not k={k}")
        G = spec.build()
        result = sudoku_number(G, k, limit=limit) if pk is not None else sudoku_number_chromatic(G, limit=limit)
        k_used = result.certificate.k
        predicted = pred.value if expect is None else expect
        note = pred.applicability if expect is None else f"expected value overridden to {expect}"
        return _report(sid, spec.family, spec.params, G.n, k_used, predicted, result.sn,
                       predicted == result.sn, t0, note)
    except SudokuChromaError as exc:
        return _error_report(sid, spec.family, spec.params, exc, t0)


def check_family(specs: Iterable[fam.FamilySpec | str], k: int = 3, limit: int = SEARCH_LIMIT) -> list[CheckReport]:
    return [
        check_instance(fam.parse_family(s) if isinstance(s, str) else s, limit=limit, k=k)
        for s in specs
    ]


def check_delta_theorem(G: Graph, k_max: int | None = None, limit: int = SEARCH_LIMIT) -> CheckReport:
    """sn(G, k) = n exactly when k >= max degree + 2, for k = chi(G)..k_max."""
    t0 = time.perf_counter()
    sid = f"delta:g6:{emit_graph6(G)}"
    delta = max_degree(G)
    chi = chromatic_number(G)
    k_max = delta + 3 if k_max is None else k_max
    ks = range(chi, k_max + 1)
    predicted = [k for k in ks if k >= delta + 2]
    try:
        computed = [k for k in ks if sudoku_number(G, k, limit=limit).sn == G.n]
    except SudokuChromaError as exc:
        return _error_report(sid, "max-degree", emit_graph6(G), exc, t0)
    fmt = lambda ks_: ",".join(map(str, ks_)) or "-"  # noqa: E731
    return _report(sid, "max-degree", emit_graph6(G), G.n, f"{chi}..{k_max}",
                   fmt(predicted), fmt(computed), predicted == computed, t0,
                   f"max degree {delta}; columns list the k with sn(G,k)=n")


def census_check(n_max: int, limit: int = SEARCH_LIMIT) -> list[CheckReport]:
    """Classifier vs solver over every connected bipartite graph of order <= n_max."""
    out = []
    for n in range(1, n_max + 1):
        for G in enumerate_connected_bipartite(n):
            out.append(_census_one(G, limit))
    return out


def _census_one(G: Graph, limit: int = SEARCH_LIMIT) -> CheckReport:
    t0 = time.perf_counter()
    code = emit_graph6(G)
    predicted, label = match_family(G)
    sn = sudoku_number(G, 3, limit=limit).sn
    computed = class_from_sn(G.n, sn)
    return _report(f"census:g6:{code}", "census", code, G.n, 3, predicted, computed,
                   predicted == computed, t0, f"sn={sn}" + (f"; {label}" if label else ""))


def check_supergraph_inequality(G: Graph, edge: tuple[int, int], m: int,
                                limit: int = SEARCH_LIMIT, label: str | None = None) -> CheckReport:
    """sn(H) <= sn(G, m) + m - 3 for H = G with K_m glued onto ``edge``."""
    t0 = time.perf_counter()
    base = label or f"g6:{emit_graph6(G)}"
    sid = f"attach:{base}@{edge[0]}-{edge[1]}:K{m}"
    if not is_bipartite(G):
        raise NotApplicable("inequality needs a bipartite base graph")
    H = attach_clique(G, edge[0], edge[1], m)
    try:
        bound = sudoku_number(G, m, limit=limit).sn + m - 3
        sn_h = sudoku_number_chromatic(H, limit=limit).sn
    except SudokuChromaError as exc:
        return _error_report(sid, "inequality", f"{base};{edge[0]}-{edge[1]};K{m}", exc, t0)
    kind = "strict" if sn_h < bound else "tight" if sn_h == bound else "violated"
    return _report(sid, "inequality", f"{base};{edge[0]}-{edge[1]};K{m}", H.n, m,
                   f"<={bound}", sn_h, sn_h <= bound, t0, kind)


def check_apex_equality(G: Graph, clique: Iterable[int] | None = None,
                        limit: int = SEARCH_LIMIT, label: str | None = None) -> CheckReport:
    """sn(H) = sn(G, chi(G)+1) where H joins a new vertex to a maximum clique of G."""
    t0 = time.perf_counter()
    chi = chromatic_number(G)
    best = maximum_clique(G)
    if chi != len(best):
        raise NotApplicable(f"chi={chi} differs from clique number {len(best)}")
    members = sorted(best if clique is None else clique)
    if len(members) != len(best):
        raise NotApplicable(f"clique {members} is not maximum (size {len(best)})")
    base = label or f"g6:{emit_graph6(G)}"
    sid = f"apex:{base}@{'-'.join(map(str, members))}"
    H = add_apex(G, members)
    try:
        predicted = sudoku_number(G, chi + 1, limit=limit).sn
        computed = sudoku_number_chromatic(H, limit=limit).sn
    except SudokuChromaError as exc:
        return _error_report(sid, "apex", base, exc, t0)
    return _report(sid, "apex", f"{base};{'-'.join(map(str, members))}", H.n, chi + 1,
                   predicted, computed, predicted == computed, t0,
                   "predicted column is sn(G, chi+1) from the solver")


def check_embedding(G1: Graph, limit: int = SEARCH_LIMIT, label: str | None = None) -> CheckReport:
    """chi(G2)=k, chi(G3)=k+1 and sn(G3) = sn(G2, k+1) = n*k for the corona embedding."""
    from .graph import embed_kplus1

    t0 = time.perf_counter()
    base = label or f"g6:{emit_graph6(G1)}"
    sid = f"embed:{base}"
    k = chromatic_number(G1)
    try:
        G2, G3 = embed_kplus1(G1, k)
        nk = G1.n * k
        chi2, chi3 = chromatic_number(G2), chromatic_number(G3)
        sn3 = sudoku_number_chromatic(G3, limit=limit).sn
        sn2 = sudoku_number(G2, k + 1, limit=limit).sn
    except SudokuChromaError as exc:
        return _error_report(sid, "embedding", base, exc, t0)
    fmt = "chi2={} chi3={} sn(G3)={} sn(G2,k+1)={}".format
    predicted = fmt(k, k + 1, nk, nk)
    computed = fmt(chi2, chi3, sn3, sn2)
    return _report(sid, "embedding", base, G3.n, k + 1, predicted, computed,
                   predicted == computed, t0, f"G2 order {G2.n}, G3 order {G3.n}")


# ---------------------------------------------------------------------------
# Manifest-driven runs
# ---------------------------------------------------------------------------

def load_manifest(path: str | None = None) -> dict:
    if path is None:
        text = resources.files("sudoku_chroma").joinpath("data/manifest.json").read_text()
    else:
        with open(path) as fh:
            text = fh.read()
    return json.loads(text)


def _expand_graphs(token: str) -> list[tuple[str, Graph]]:
    if token.startswith("connected:"):
        n = int(token.split(":", 1)[1])
        return [(f"g6:{emit_graph6(G)}", G) for G in enumerate_connected(n)]
    return [(token, fam.build_family(token))]


def random_graph(rng: random.Random, max_n: int) -> Graph:
    """Random graph with 1..max_n vertices, edge density drawn per graph."""
    n = rng.randint(1, max_n)
    p = rng.random()
    return Graph.from_edges(n, [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p])


def check_pruning(G: Graph, k: int, limit: int = SEARCH_LIMIT) -> CheckReport:
    """Pruned search against the pruning-free search from size 0."""
    t0 = time.perf_counter()
    code = emit_graph6(G)
    pruned = sudoku_number(G, k, limit=limit).sn
    plain = sudoku_number(G, k, limit=max(limit, G.n), prune=False).sn
    return _report(f"oracle:g6:{code}:k{k}", "oracle", code, G.n, k, plain, pruned,
                   plain == pruned, t0, "predicted column is the pruning-free search")


def manifest_tasks(manifest: dict, sections: Iterable[str] | None = None, seed: int = 0) -> list[tuple]:
    """Flatten the manifest into picklable task tuples, in manifest order."""
    wanted = set(sections) if sections else None
    tasks: list[tuple] = []
    for section in manifest["sections"]:
        if wanted is not None and section["name"] not in wanted:
            continue
        kind = section["kind"]
        if kind == "census":
            for n in range(1, section["n_max"] + 1):
                tasks += [("census", G) for G in enumerate_connected_bipartite(n)]
            continue
        if kind == "oracle":
            rng = random.Random(seed)
            for _ in range(section["count"]):
                G = random_graph(rng, section["max_n"])
                tasks.append(("oracle", G, chromatic_number(G) + rng.randint(0, 1)))
            continue
        for item in section["instances"]:
            if kind == "family":
                if isinstance(item, str):
                    tasks.append(("family", item, None))
                else:
                    tasks.append(("family", item["spec"], item.get("expect")))
            elif kind == "delta":
                tasks += [("delta", G, section.get("k_max")) for _, G in _expand_graphs(item)]
            elif kind == "inequality":
                tasks.append(("inequality", item["base"], tuple(item["edge"]), item["m"]))
            elif kind == "apex":
                tasks.append(("apex", item["base"], item.get("clique")))
            elif kind == "embedding":
                tasks.append(("embedding", item))
            else:
                raise ValueError(f"unknown manifest section kind {kind!r}")
    return tasks


def run_task(task: tuple, limit: int = SEARCH_LIMIT) -> CheckReport:
    kind = task[0]
    if kind == "family":
        return check_instance(fam.parse_family(task[1]), expect=task[2], limit=limit)
    if kind == "delta":
        return check_delta_theorem(task[1], task[2], limit=limit)
    if kind == "census":
        return _census_one(task[1], limit=limit)
    if kind == "inequality":
        return check_supergraph_inequality(fam.build_family(task[1]), task[2], task[3], limit, label=task[1])
    if kind == "apex":
        return check_apex_equality(fam.build_family(task[1]), task[2], limit, label=task[1])
    if kind == "embedding":
        return check_embedding(fam.build_family(task[1]), limit, label=task[1])
    if kind == "oracle":
        return check_pruning(task[1], task[2], limit)
    raise ValueError(f"unknown task kind {kind!r}")


def _run_task_star(args):
    return run_task(*args)


def run_manifest(manifest: dict, sections: Iterable[str] | None = None, threads: int = 1,
                 limit: int = SEARCH_LIMIT, seed: int = 0,
                 progress: Callable[[CheckReport], None] | None = None) -> list[CheckReport]:
    """Run every manifest task; reports come back in manifest order for any thread count."""
    tasks = manifest_tasks(manifest, sections, seed)
    if threads <= 1:
        results = (run_task(t, limit) for t in tasks)
        out = []
        for r in results:
            out.append(r)
            if progress:
                progress(r)
        return out
    chunk = max(1, math.ceil(len(tasks) / (threads * 8)))
    with ProcessPoolExecutor(max_workers=threads) as pool:
        out = []
        for r in pool.map(_run_task_star, [(t, limit) for t in tasks], chunksize=chunk):
            out.append(r)
            if progress:
                progress(r)
        return out


def report_dicts(reports: Iterable[CheckReport]) -> list[dict]:
    return [asdict(r) for r in reports]
