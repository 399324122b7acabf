"""Confining-graph constructions and the batch reproductions built on them."""

from __future__ import annotations

import time
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Literal, Optional

from .codec import read_graph6
from .generators import circulant, cycle, lex_double, named, path, rooted_family
from .graph import Graph, cartesian, girth
from .rooted import ConfinementReport, TwoRootedGraph, confines, is_subcubic_two_rooted_tree, parse_rooted

__all__ = [
    "CAGES",
    "ConfinementReport",
    "Row",
    "case_i_confiner",
    "circulant_confiner",
    "circulant_rows",
    "extras_rows",
    "figure_rows",
    "run_rows",
    "table1_rows",
    "reproduce_table1",
    "reproduce_extras",
    "reproduce_circulants",
]

# Cubic cages bundled for base-graph selection, in increasing girth.
CAGES = ("petersen", "heawood", "mcgee", "tutte_coxeter")


def _false_twins(G: Graph, v: int) -> list[int]:
    return [u for u in range(G.n) if u != v and not G.has_edge(u, v) and G.masks[u] == G.masks[v]]


def case_i_confiner(pattern: TwoRootedGraph, base: Optional[Graph] = None) -> Graph:
    """``base o 2K1`` for a subcubic tree whose ``t`` has a leaf neighbour and whose ``s`` has no false twin.

    Without ``base`` the smallest bundled cubic cage of girth at least
    ``2|V|`` is used.  The returned host is checked to confine the pattern.
    """
    H, s, t = pattern.graph, pattern.s, pattern.t
    if not H.is_tree():
        raise ValueError("pattern graph is not a tree")
    if H.max_degree() > 3 or not is_subcubic_two_rooted_tree(pattern):
        raise ValueError("pattern is not a subcubic two-rooted tree")
    if s == t:
        raise ValueError("roots must be distinct")
    if not any(H.degree(w) == 1 and w != s for w in H.neighbors(t)):
        raise ValueError("t has no leaf neighbour other than s")
    if _false_twins(H, s):
        raise ValueError("s has a false twin")
    if base is None:
        need = 2 * H.n
        for name in CAGES:
            cand = named(name)
            if girth(cand) >= need:
                base = cand
                break
        else:
            raise ValueError(f"no bundled cubic cage has girth >= {need}; supply a base graph")
    elif min(base.degrees(), default=0) < 3:
        raise ValueError("base graph needs minimum degree at least 3")
    host = lex_double(base)
    report = confines(host, pattern)
    if not report.overall:
        raise AssertionError("constructed host does not confine the pattern")
    return host


def _path_pattern(ell: int, t: int, name: str) -> TwoRootedGraph:
    return TwoRootedGraph(path(ell + 1), 0, t, name)


def circulant_confiner(ell: int, case: Literal["penultimate", "equal_roots"]) -> tuple[Graph, TwoRootedGraph]:
    """``Circ(2l+6; {1, l+2})`` with the rooted path ``v_0..v_l`` it confines.

    ``penultimate`` roots the path at ``(v_0, v_{l-1})`` and needs ``l >= 3``;
    ``equal_roots`` uses ``s = t = v_0`` and excludes ``l = 2``.
    """
    if case == "penultimate":
        if ell < 3:
            raise ValueError("penultimate case needs l >= 3")
        pattern = _path_pattern(ell, ell - 1, f"P({ell};v0,v{ell - 1})")
    elif case == "equal_roots":
        if ell < 1:
            raise ValueError("equal-roots case needs l >= 1")
        if ell == 2:
            raise ValueError("l = 2 is not confined by this circulant")
        pattern = _path_pattern(ell, 0, f"P({ell};v0,v0)")
    else:
        raise ValueError(f"unknown case {case!r}")
    return circulant(2 * ell + 6, [1, ell + 2]), pattern


@dataclass(frozen=True)
class Row:
    """One (host, pattern, expected verdict) check."""

    host_name: str
    host: Graph
    pattern: TwoRootedGraph
    expected: bool = True


def table1_rows() -> list[Row]:
    table = [
        ("petersen", [(2, 0, 2), (1, 0, 2), (1, 1, 1)]),
        ("heawood", [(1, 0, 3), (1, 1, 2), (1, 1, 1), (1, 2, 1), (2, 0, 3), (2, 1, 1), (2, 1, 2), (3, 0, 3)]),
        ("mcgee", [(2, 2, 1)]),
        ("tutte_coxeter", [(2, 3, 1), (1, 3, 1), (1, 4, 1), (2, 4, 1)]),
    ]
    return [Row(name, named(name), rooted_family("T1", *params)) for name, plist in table for params in plist]


def extras_rows(q_max: int = 2) -> list[Row]:
    rows = [
        Row("circ(20;2,5,6)", circulant(20, [2, 5, 6]), rooted_family("T1", 2, 0, 2)),
        Row("dodecahedron", named("dodecahedron"), rooted_family("T1", 3, 1, 1)),
        Row("lex(prism:6,empty:2)", lex_double(named("prism", 6)), rooted_family("T2", 2, 1)),
        Row("lex(moebius:6,empty:2)", lex_double(named("moebius_ladder", 6)), rooted_family("T2", 2, 1)),
    ]
    torus = lex_double(cartesian(cycle(q_max + 4), cycle(3)))
    tname = f"lex(cart(cycle:{q_max + 4},cycle:3),empty:2)"
    rows += [Row(tname, torus, rooted_family("T2", 2, q)) for q in range(1, q_max + 1)]
    return rows


def circulant_rows() -> list[Row]:
    rows = []
    for ell in (3, 4, 5):
        g, p = circulant_confiner(ell, "penultimate")
        rows.append(Row(f"circ({2 * ell + 6};1,{ell + 2})", g, p))
    for ell in (1, 3, 4, 5):
        g, p = circulant_confiner(ell, "equal_roots")
        rows.append(Row(f"circ({2 * ell + 6};1,{ell + 2})", g, p))
    # l = 2: both rootings have a simplicial copy in Circ(10; {1, 4})
    host = circulant(10, [1, 4])
    rows.append(Row("circ(10;1,4)", host, _path_pattern(2, 1, "P(2;v0,v1)"), expected=False))
    rows.append(Row("circ(10;1,4)", host, _path_pattern(2, 0, "P(2;v0,v0)"), expected=False))
    # longer cycles in the lex product keep confining the penultimate rooting
    for ell, k in ((3, 3), (3, 4), (4, 4), (4, 5)):
        rows.append(Row(f"circ({2 * k + 6};1,{k + 2})", circulant(2 * k + 6, [1, k + 2]),
                        _path_pattern(ell, ell - 1, f"P({ell};v0,v{ell - 1})")))
    return rows


def figure_rows(directory: Path) -> list[Row]:
    """Optional user-supplied confiners: ``*.g6`` host files, each next to a ``.rg6`` pattern file."""
    rows = []
    for g6 in sorted(Path(directory).glob("*.g6")):
        rg6 = g6.with_suffix(".rg6")
        if not rg6.exists():
            continue
        hosts = [g for _, g in read_graph6(g6.read_text().splitlines())]
        patterns = [parse_rooted(line) for line in rg6.read_text().splitlines() if line.strip()]
        for host in hosts:
            for p in patterns:
                rows.append(Row(g6.stem, host, TwoRootedGraph(p.graph, p.s, p.t, rg6.stem)))
    return rows


@dataclass(frozen=True)
class RowResult:
    row: Row
    report: ConfinementReport
    millis: float

    @property
    def ok(self) -> bool:
        return self.report.overall == self.row.expected


def run_rows(rows: Iterable[Row], workers: int = 1) -> list[RowResult]:
    out = []
    for row in rows:
        t0 = time.perf_counter()
        rep = confines(row.host, row.pattern, workers=workers, host_name=row.host_name)
        out.append(RowResult(row, rep, (time.perf_counter() - t0) * 1000))
    return out


def reproduce_table1(workers: int = 1) -> list[ConfinementReport]:
    return [r.report for r in run_rows(table1_rows(), workers)]


def reproduce_extras(workers: int = 1, q_max: int = 2) -> list[ConfinementReport]:
    return [r.report for r in run_rows(extras_rows(q_max), workers)]


def reproduce_circulants(workers: int = 1) -> list[ConfinementReport]:
    return [r.report for r in run_rows(circulant_rows(), workers)]
