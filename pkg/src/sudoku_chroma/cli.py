"""Command-line interface.

Exit codes:
    count   0 = Zero, 1 = ExactlyOne, 2 = AtLeast(cap)
    check   0 = PASS, 1 = FAIL
    suite   0 = every instance matched, 1 = some mismatch or error
    sn, gen 0 = success
    any     3 = usage, parse or improper-input error
            4 = solver refused (chromatic violation, limit exceeded)
"""

from __future__ import annotations

import argparse
import csv
import io as _io
import json
import logging
import os
import sys
from dataclasses import dataclass, field

from .coloring import PartialColoring, chromatic_number, count_extensions
from .errors import (
    ChromaticViolation,
    ImproperInput,
    InvalidColor,
    InvalidParameter,
    LimitExceeded,
    NotApplicable,
    ParseError,
)
from .families import GRAMMAR_HINT, build_family
from .graph import Graph
from .io import emit_edgelist, parse_coloring, parse_edgelist, parse_graph6
from .search import SEARCH_LIMIT, SudokuCertificate, sudoku_number, verify_certificate
from .theorems import CSV_COLUMNS, load_manifest, report_dicts, run_manifest

EXIT_INPUT = 3
EXIT_SOLVER = 4
LIMIT_ENV = "SUDOKU_CHROMA_LIMIT"

log = logging.getLogger("sudoku_chroma")


@dataclass
class RunConfig:
    subcommand: str
    graph: str | None = None
    coloring: str | None = None
    certificate: str | None = None
    manifest: str | None = None
    family: str | None = None
    k: int | None = None
    cap: int = 2
    limit: int = SEARCH_LIMIT
    threads: int = 1
    format: str = "text"
    out: str | None = None
    seed: int = 0
    sections: list[str] = field(default_factory=list)

    def validate(self) -> None:
        if self.k is not None and self.k < 1:
            raise InvalidParameter("--k must be >= 1")
        if self.cap < 2:
            raise InvalidParameter("--cap must be >= 2")
        if self.limit < 1 or self.threads < 1:
            raise InvalidParameter("--limit and --threads must be positive")
        if self.format not in ("text", "json", "csv"):
            raise InvalidParameter(f"unknown format {self.format!r}")


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):
        self.print_usage(sys.stderr)
        self.exit(EXIT_INPUT, f"{self.prog}: error: {message}\n")


def _default_limit() -> int:
    raw = os.environ.get(LIMIT_ENV)
    if raw is None:
        return SEARCH_LIMIT
    try:
        return int(raw)
    except ValueError:
        log.warning("ignoring non-integer %s=%r", LIMIT_ENV, raw)
        return SEARCH_LIMIT


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--limit", type=int, default=_default_limit(),
                        help=f"max free vertices in the subset search (env {LIMIT_ENV})")
    common.add_argument("--threads", type=int, default=1, help="worker processes (default 1)")
    common.add_argument("--format", choices=["text", "json", "csv"], default="text")
    common.add_argument("--out", help="write output here instead of stdout")
    common.add_argument("--seed", type=int, default=0, help="seed for randomized manifest sections")
    common.add_argument("-v", "--verbose", action="store_true")

    parser = _Parser(prog="sudoku-chroma", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="subcommand", required=True, parser_class=_Parser)

    p = sub.add_parser("gen", parents=[common], help="emit the edge list of a named family")
    p.add_argument("--family", required=True, help=GRAMMAR_HINT)

    p = sub.add_parser("count", parents=[common], help="count proper extensions of a partial coloring")
    p.add_argument("--graph", required=True)
    p.add_argument("--coloring", required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--cap", type=int, default=2)

    p = sub.add_parser("sn", parents=[common], help="compute sn(G, k) with a certificate")
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--graph")
    src.add_argument("--family")
    p.add_argument("--k", type=int, help="color budget (default: chromatic number)")

    p = sub.add_parser("check", parents=[common], help="re-verify a JSON certificate")
    p.add_argument("--graph", required=True)
    p.add_argument("--certificate", required=True)

    p = sub.add_parser("suite", parents=[common], help="run the theorem manifest")
    p.add_argument("--manifest", help="manifest JSON (default: packaged manifest)")
    p.add_argument("--section", action="append", dest="sections", default=[],
                   help="run only this manifest section (repeatable)")
    return parser


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path) as fh:
        return fh.read()


def load_graph(path: str) -> Graph:
    text = _read(path)
    if path.endswith(".g6"):
        return parse_graph6(text)
    return parse_edgelist(text)


def _emit(cfg: RunConfig, text: str) -> None:
    if cfg.out:
        with open(cfg.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def cmd_gen(cfg: RunConfig) -> int:
    _emit(cfg, emit_edgelist(build_family(cfg.family)))
    return 0


def cmd_count(cfg: RunConfig) -> int:
    G = load_graph(cfg.graph)
    C = PartialColoring(cfg.k, parse_coloring(_read(cfg.coloring)))
    result = count_extensions(G, C, cfg.cap)
    _emit(cfg, f"{result}\n")
    if result.is_zero:
        return 0
    return 1 if result.is_unique else 2


def cmd_sn(cfg: RunConfig) -> int:
    G = load_graph(cfg.graph) if cfg.graph else build_family(cfg.family)
    k = cfg.k if cfg.k is not None else chromatic_number(G)
    result = sudoku_number(G, k, limit=cfg.limit, workers=cfg.threads)
    cert = result.certificate
    problems = verify_certificate(G, cert, result.sn)
    if problems:
        raise AssertionError(f"solver produced an invalid certificate: {problems}")
    payload = cert.to_json(G.n, result.sn)
    if cfg.format == "json":
        text = json.dumps(payload) + "\n"
    elif cfg.format == "csv":
        buf = _io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["n", "k", "sn", "S", "C0", "F"])
        w.writerow([G.n, k, result.sn, " ".join(map(str, cert.S)),
                    " ".join(f"{v}:{c}" for v, c in cert.C0.items()),
                    " ".join(map(str, cert.F))])
        text = buf.getvalue()
    else:
        st = result.stats
        lines = [
            f"sn = {result.sn}  (n = {G.n}, k = {k})",
            f"S  = {list(cert.S)}",
            f"C0 = {dict(cert.C0.items())}",
            f"F  = {list(cert.F)}",
            f"searched {st.subsets} subsets, {st.colorings} colorings in {st.elapsed:.3f}s",
        ]
        lines += [f"warning: {w}" for w in result.warnings]
        text = "\n".join(lines) + "\n"
    _emit(cfg, text)
    return 0


def cmd_check(cfg: RunConfig) -> int:
    G = load_graph(cfg.graph)
    try:
        data = json.loads(_read(cfg.certificate))
    except json.JSONDecodeError as exc:
        raise ParseError(f"certificate is not valid JSON: {exc}") from None
    cert, n, sn = SudokuCertificate.from_json(data)
    problems = [] if n == G.n else [f"certificate n={n} differs from graph order {G.n}"]
    if not problems:
        problems = verify_certificate(G, cert, sn)
    if problems:
        _emit(cfg, "FAIL\n" + "".join(f"  {p}\n" for p in problems))
        return 1
    _emit(cfg, "PASS\n")
    return 0


def format_reports(reports, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(report_dicts(reports), indent=1) + "\n"
    if fmt == "csv":
        buf = _io.StringIO()
        w = csv.DictWriter(buf, fieldnames=CSV_COLUMNS, extrasaction="ignore", lineterminator="\n")
        w.writeheader()
        w.writerows(report_dicts(reports))
        return buf.getvalue()
    width = max((len(r.instance_id) for r in reports), default=10)
    lines = [f"{'instance':<{width}}  {'k':>5}  {'predicted':>12}  {'computed':>12}  verdict"]
    for r in reports:
        lines.append(f"{r.instance_id:<{width}}  {str(r.k):>5}  {str(r.predicted):>12}  "
                     f"{str(r.computed):>12}  {r.verdict}")
    bad = sum(not r.ok for r in reports)
    lines.append(f"{len(reports)} instances, {len(reports) - bad} match, {bad} mismatch/error")
    return "\n".join(lines) + "\n"


def cmd_suite(cfg: RunConfig) -> int:
    manifest = load_manifest(cfg.manifest)
    reports = run_manifest(manifest, cfg.sections or None, threads=cfg.threads,
                           limit=cfg.limit, seed=cfg.seed)
    _emit(cfg, format_reports(reports, cfg.format))
    return 0 if all(r.ok for r in reports) else 1


COMMANDS = {"gen": cmd_gen, "count": cmd_count, "sn": cmd_sn, "check": cmd_check, "suite": cmd_suite}


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    fields = {f for f in RunConfig.__dataclass_fields__}
    cfg = RunConfig(**{k: v for k, v in vars(args).items() if k in fields})
    try:
        cfg.validate()
        return COMMANDS[cfg.subcommand](cfg)
    except (ChromaticViolation, LimitExceeded, NotApplicable) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_SOLVER
    except (ParseError, InvalidParameter, InvalidColor, ImproperInput, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
