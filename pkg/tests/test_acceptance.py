"""End-to-end acceptance criteria, one test per criterion.

Each test records a single PASS/FAIL line, repeated in the terminal summary.
"""

import subprocess
import sys
import time

import pytest

from conftest import record_criterion
from tworooted import corpus
from tworooted.confinement import circulant_rows, extras_rows, run_rows, table1_rows
from tworooted.generators import named, rooted_family
from tworooted.reproduce import (
    TARGETS,
    _path_case,
    _pmap,
    _subcubic_case,
    _sum,
    _t201_case,
    _vertex_case,
    family_checks,
    gallery,
    property_checks,
    petersen_checks,
)
from tworooted.rooted import confines

THREADS = 4


class Timer:
    def __enter__(self):
        self.t0 = time.perf_counter()
        return self

    def __exit__(self, *exc):
        self.seconds = time.perf_counter() - self.t0


def _rows_detail(results):
    bad = [f"{r.row.host_name}/{r.row.pattern}" for r in results if not r.ok]
    return f"rows={len(results)} mismatches={bad or 0}"


def _checks(number, checks, limit, timer):
    failed = [c.name for c in checks if not c.ok]
    ok = not failed and timer.seconds < limit
    record_criterion(number, ok, f"checks={len(checks)} failed={failed or 0}", timer.seconds)
    assert not failed
    assert timer.seconds < limit


def test_criterion_01_table1():
    with Timer() as tm:
        results = run_rows(table1_rows())
    per_cage = {name: sum(r.row.host_name == name for r in results)
                for name in ("petersen", "heawood", "mcgee", "tutte_coxeter")}
    ok = all(r.report.overall for r in results) and per_cage == {"petersen": 3, "heawood": 8, "mcgee": 1,
                                                                 "tutte_coxeter": 4}
    record_criterion(1, ok and tm.seconds < 120, _rows_detail(results), tm.seconds)
    assert ok and tm.seconds < 120


def test_criterion_02_petersen():
    with Timer() as tm:
        G = named("petersen")
        verdicts = [confines(G, rooted_family("T1", *p)).overall for p in [(1, 0, 2), (2, 0, 2), (1, 1, 1)]]
        checks = list(petersen_checks())
    ok = all(verdicts) and all(c.ok for c in checks)
    record_criterion(2, ok, f"confines={verdicts} unique_nonclosable={[c.ok for c in checks]}", tm.seconds)
    assert ok


def test_criterion_03_circulants():
    with Timer() as tm:
        results = run_rows(circulant_rows())
    ok = all(r.ok for r in results)
    controls = [r.report.overall for r in results if not r.row.expected]
    record_criterion(3, ok and tm.seconds < 30, _rows_detail(results) + f" controls={controls}", tm.seconds)
    assert ok and controls == [False, False] and tm.seconds < 30


def test_criterion_04_extras():
    with Timer() as tm:
        results = run_rows(extras_rows(), workers=THREADS)
    ok = len(results) == 6 and all(r.report.overall for r in results)
    record_criterion(4, ok and tm.seconds < 600, _rows_detail(results), tm.seconds)
    assert ok and tm.seconds < 600


def test_criterion_05_gallery():
    with Timer() as tm:
        checks = list(gallery())
    _checks(5, checks, 5, tm)


def test_criterion_06_families():
    with Timer() as tm:
        checks = list(family_checks(budget=6))
    kinds = {k: sum(c.name.startswith(f"classify.{k}") for c in checks) for k in ("T1", "T2", "T3")}
    assert min(kinds.values()) >= 3
    assert sum(c.name.startswith("finite_comb") for c in checks) == 4
    _checks(6, checks, 60, tm)


def test_criterion_07_subcubic_sweep():
    with Timer() as tm:
        n, inherent, bad = _sum(_pmap(_subcubic_case, list(corpus.graphs_upto(6, connected=True)), THREADS))
    ok = bad == 0 and n > 0
    record_criterion(7, ok and tm.seconds < 600, f"patterns={n} pe_inherent={inherent} violations={bad}", tm.seconds)
    assert ok and tm.seconds < 600


def test_criterion_08_endpoint_paths():
    with Timer() as tm:
        n, fail = _sum(_pmap(_path_case, list(corpus.graphs_upto(8, connected=True)), THREADS))
    record_criterion(8, fail == 0 and tm.seconds < 900, f"cases={n} failures={fail}", tm.seconds)
    assert fail == 0 and n > 0 and tm.seconds < 900


def test_criterion_09_t201():
    with Timer() as tm:
        n, fail = _sum(_pmap(_t201_case, list(corpus.graphs_upto(8, connected=True)), THREADS))
    record_criterion(9, fail == 0 and tm.seconds < 900, f"cases={n} failures={fail}", tm.seconds)
    assert fail == 0 and n > 0 and tm.seconds < 900


def test_criterion_10_avoidable_vertex():
    with Timer() as tm:
        n, fail = _sum(_pmap(_vertex_case, list(corpus.graphs_upto(7)), THREADS))
    record_criterion(10, fail == 0 and tm.seconds < 120, f"graphs={n} failures={fail}", tm.seconds)
    assert fail == 0 and n == 1252 and tm.seconds < 120


def test_criterion_11_properties():
    with Timer() as tm:
        checks = list(property_checks(THREADS, trees=200, swaps=50))
    _checks(11, checks, 300, tm)


def _reproduce(target, threads):
    proc = subprocess.run([sys.executable, "-m", "tworooted", "reproduce", target, "--threads", str(threads)],
                          capture_output=True)
    return proc.returncode, proc.stdout


def test_criterion_12_determinism():
    with Timer() as tm:
        differing, failing = [], []
        for target in TARGETS:
            code1, out1 = _reproduce(target, 1)
            code8, out8 = _reproduce(target, 8)
            if out1 != out8 or not out1:
                differing.append(target)
            if code1 or code8:
                failing.append(target)
    ok = not differing and not failing
    record_criterion(12, ok, f"targets={len(TARGETS)} differing={differing or 0} nonzero_exit={failing or 0}",
                     tm.seconds)
    assert ok
