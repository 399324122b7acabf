"""Command-line interface: ``tworooted <subcommand> ...``.

Exit codes: 0 success, 1 a verification failed, 2 usage or input error.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from pathlib import Path
from typing import Optional, Sequence, TextIO

from .codec import Graph6Error, encode, read_graph6, to_dot
from .families import FamilyError, parse_host, parse_pattern
from .pe import PEInherentUpToBudget, classify, verify_pe_sequence, write_trace
from .rooted import CopyEmbedding, TwoRootedGraph, confines, copy_images, enumerate_extensions, is_avoidable, is_closable, to_rg6
from .search import find_avoidable_copy_bruteforce, find_avoidable_path_copy


class UsageError(Exception):
    pass


class Output:
    """Writes records either as TSV lines or as JSON objects, one per line."""

    def __init__(self, fmt: str, stream: TextIO):
        self.fmt, self.stream = fmt, stream

    def record(self, fields: dict, tsv: Optional[str] = None) -> None:
        if self.fmt == "jsonl":
            self.stream.write(json.dumps(fields, sort_keys=True) + "\n")
        else:
            self.stream.write((tsv if tsv is not None else "\t".join(_tsv(v) for v in fields.values())) + "\n")


def _tsv(v) -> str:
    if isinstance(v, bool):
        return str(v).lower()
    if isinstance(v, (list, tuple)):
        return ",".join(map(str, v))
    return str(v)


def _host(text: str):
    try:
        return parse_host(text)
    except FamilyError as exc:
        raise UsageError(f"bad host: {exc}") from None


def _pattern(text: str) -> TwoRootedGraph:
    try:
        return parse_pattern(text)
    except FamilyError as exc:
        raise UsageError(f"bad pattern: {exc}") from None


def _open_input(path: Optional[str]) -> TextIO:
    if path in (None, "-"):
        return sys.stdin
    try:
        return open(path)
    except OSError as exc:
        raise UsageError(str(exc)) from None


def _graphs(path: Optional[str]):
    try:
        return list(read_graph6(_open_input(path)))
    except Graph6Error as exc:
        raise UsageError(str(exc)) from None


def _write_dot(path: Optional[str], graph, roots=None, name="G") -> None:
    if path:
        Path(path).write_text(to_dot(graph, roots, name))


# -- subcommands ---------------------------------------------------------------------


def cmd_generate(args, out: Output) -> int:
    try:
        p = parse_pattern(args.family)
    except FamilyError:
        G = _host(args.family)
        out.record({"graph6": encode(G), "n": G.n, "m": G.m}, tsv=encode(G))
        _write_dot(args.dot, G)
        return 0
    out.record({"rg6": to_rg6(p), "n": p.graph.n, "m": p.graph.m}, tsv=to_rg6(p))
    _write_dot(args.dot, p.graph, p.roots)
    return 0


def cmd_copies(args, out: Output) -> int:
    host, pat = _host(args.host), _pattern(args.pattern)
    for i, img in enumerate(copy_images(host, pat)):
        out.record({"index": i, "image": list(img), "s": img[pat.s], "t": img[pat.t]})
    return 0


def cmd_avoidable(args, out: Output) -> int:
    host, pat = _host(args.host), _pattern(args.pattern)
    for i, img in enumerate(copy_images(host, pat)):
        copy = CopyEmbedding(pat, host, img)
        ok, bad = is_avoidable(host, copy)
        rec = {"index": i, "image": list(img), "avoidable": ok}
        if bad is not None:
            rec["witness"] = [bad.s_prime, bad.t_prime]
        elif args.paths:
            rec["closing_paths"] = [is_closable(host, e)[1] for e in enumerate_extensions(host, copy)]
        tsv = "\t".join([str(i), _tsv(img), _tsv(ok), _tsv(rec.get("witness", "-"))])
        out.record(rec, tsv=tsv)
    return 0


def cmd_confine(args, out: Output) -> int:
    host, pat = _host(args.host), _pattern(args.pattern)
    rep = confines(host, pat, workers=args.threads)
    verdict = "true" if rep.overall else "false"
    out.record({"confines": rep.overall, "copies": rep.copy_count}, tsv=f"confines={verdict}\tcopies={rep.copy_count}")
    if args.dot:
        roots = None
        if rep.verdicts:
            img = rep.verdicts[0].image
            roots = (img[pat.s], img[pat.t])
        _write_dot(args.dot, host, roots)
    if args.expect is not None and rep.overall != (args.expect == "true"):
        return 1
    return 0


def cmd_classify(args, out: Output) -> int:
    pat = _pattern(args.pattern)
    res = classify(pat, args.budget, args.max_vertices)
    sizes = [g.n for g in res.trace.stages]
    rec = {"verdict": str(res), "stages": sizes}
    if not isinstance(res, PEInherentUpToBudget):
        rec["limit"] = encode(res.limit)
    out.record(rec, tsv=str(res))
    if args.trace_out:
        with open(args.trace_out + ".g6", "w") as g6, open(args.trace_out + ".jsonl", "w") as side:
            write_trace(res.trace, g6, side)
    if args.dot:
        _write_dot(args.dot, res.trace.final)
    return 0


def cmd_verify_seq(args, out: Output) -> int:
    pat = _pattern(args.pattern)
    graphs = [g for _, g in _graphs(args.input)]
    if not graphs:
        raise UsageError("empty sequence")
    ok, bad = verify_pe_sequence(graphs, pat)
    out.record({"valid": ok, "first_failure": bad}, tsv=f"valid={str(ok).lower()}" + ("" if ok else f"\tfirst_failure={bad}"))
    return 0 if ok else 1


def cmd_find_avoidable(args, out: Output) -> int:
    if (args.pattern is None) == (args.path is None):
        raise UsageError("give exactly one of --pattern and --path")
    pat = _pattern(args.pattern) if args.pattern else None
    missing = 0
    for lineno, G in _graphs(args.input):
        copy = find_avoidable_path_copy(G, args.path) if pat is None else find_avoidable_copy_bruteforce(G, pat)
        missing += copy is None
        img = list(copy.image) if copy else None
        out.record({"line": lineno, "graph6": encode(G), "image": img},
                   tsv=f"{lineno}\t{encode(G)}\t{_tsv(img) if img else 'absent'}")
    return 1 if args.require and missing else 0


def cmd_reproduce(args, out: Output) -> int:
    from . import reproduce as rp

    ok = True
    if args.target in ("table1", "extras", "circulants"):
        for r in rp.confinement_results(args.target, args.threads):
            rep = r.report
            ms = f"{r.millis:.0f}" if args.timing else "-"
            out.record({"host": r.row.host_name, "pattern": str(rep.pattern), "copies": rep.copy_count,
                        "confines": rep.overall, "expected": r.row.expected, "wall_ms": ms},
                       tsv="\t".join([r.row.host_name, str(rep.pattern), str(rep.copy_count), _tsv(rep.overall), ms]))
            ok &= r.ok
    else:
        t0 = time.perf_counter()
        if args.target == "pe-gallery":
            checks = list(rp.gallery())
        else:
            checks = list(rp.petersen_checks()) + list(rp.theorem_checks(args.threads, args.max_n))
        for c in checks:
            out.record({"check": c.name, "ok": c.ok, "detail": c.detail},
                       tsv=f"{c.name}\t{'pass' if c.ok else 'FAIL'}\t{c.detail}")
            ok &= c.ok
        if args.timing:
            sys.stderr.write(f"wall_ms={(time.perf_counter() - t0) * 1000:.0f}\n")
    return 0 if ok else 1


# -- argument parsing ------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    from .reproduce import TARGETS

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("tsv", "jsonl"), default="tsv")
    common.add_argument("--threads", type=int, default=1, help="worker processes (output does not depend on this)")
    common.add_argument("--dot", metavar="FILE", help="also write a DOT rendering")

    ap = argparse.ArgumentParser(prog="tworooted", description="Two-rooted graph toolkit: copies, avoidability, confinement, pendant extensions.")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("generate", parents=[common], help="print a named graph (graph6) or pattern (rg6)")
    p.add_argument("family")
    p.set_defaults(fn=cmd_generate)

    for name, fn, hlp in [("copies", cmd_copies, "list copies of a pattern"),
                          ("avoidable", cmd_avoidable, "avoidability verdict per copy"),
                          ("confine", cmd_confine, "does HOST confine PATTERN?")]:
        p = sub.add_parser(name, parents=[common], help=hlp)
        p.add_argument("--host", required=True)
        p.add_argument("--pattern", required=True)
        if name == "avoidable":
            p.add_argument("--paths", action="store_true", help="print closing paths of avoidable copies")
        if name == "confine":
            p.add_argument("--expect", choices=("true", "false"), help="exit 1 unless the verdict matches")
        p.set_defaults(fn=fn)

    p = sub.add_parser("classify", parents=[common], help="budgeted PE classification")
    p.add_argument("--pattern", required=True)
    p.add_argument("--budget", type=int, default=10, help="maximum number of stages")
    p.add_argument("--max-vertices", type=int, default=5000)
    p.add_argument("--trace-out", metavar="PREFIX", help="write PREFIX.g6 and PREFIX.jsonl")
    p.set_defaults(fn=cmd_classify)

    p = sub.add_parser("verify-seq", parents=[common], help="check a PE-sequence given as graph6 lines")
    p.add_argument("--pattern", required=True)
    p.add_argument("input", nargs="?", help="graph6 file (default: stdin)")
    p.set_defaults(fn=cmd_verify_seq)

    p = sub.add_parser("find-avoidable", parents=[common], help="avoidable copy in each graph6 input graph")
    p.add_argument("--pattern")
    p.add_argument("--path", type=int, metavar="K", help="endpoints-rooted path on K vertices (constructive search)")
    p.add_argument("--require", action="store_true", help="exit 1 if some graph has no avoidable copy")
    p.add_argument("input", nargs="?", help="graph6 file (default: stdin)")
    p.set_defaults(fn=cmd_find_avoidable)

    p = sub.add_parser("reproduce", parents=[common], help="run a reproduction target")
    p.add_argument("target", choices=TARGETS)
    p.add_argument("--timing", action="store_true", help="report wall times (makes output run-dependent)")
    p.add_argument("--max-n", type=int, default=8, help="largest corpus order for the sweeps")
    p.set_defaults(fn=cmd_reproduce)
    return ap


def main(argv: Optional[Sequence[str]] = None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    if args.threads < 1:
        ap.error("--threads must be positive")
    if getattr(args, "budget", 1) < 0:
        ap.error("--budget must be non-negative")
    out = Output(args.format, sys.stdout)
    try:
        return args.fn(args, out)
    except UsageError as exc:
        sys.stderr.write(f"tworooted: error: {exc}\n")
        return 2


if __name__ == "__main__":
    sys.exit(main())
