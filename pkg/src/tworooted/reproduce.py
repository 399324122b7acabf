"""Reproduction targets.  Each target yields ``Check`` records in a fixed order."""

from __future__ import annotations

import random
import warnings
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Callable, Iterable, Iterator, Sequence

from . import corpus
from .confinement import RowResult, circulant_rows, extras_rows, run_rows, table1_rows
from .generators import CombSpec, comb, cycle, orbit_root_pairs, path, rooted_family
from .graph import Graph, add_pendants, disjoint_union
from .iso import automorphism_orbits, is_isomorphic
from .pe import (
    PEInherentUpToBudget,
    classify,
    greedy_stage,
    hst_extension,
    pe_sequence_branches,
    stage_sequence,
    verify_pe_sequence,
)
from .rooted import (
    CopyEmbedding,
    TwoRootedGraph,
    copy_images,
    enumerate_extensions,
    has_induced_copy,
    is_closable,
    is_simplicial,
    is_subcubic_two_rooted_tree,
)
from .search import find_avoidable_copy_bruteforce, find_avoidable_path_copy

TARGETS = ("table1", "extras", "circulants", "pe-gallery", "theorems")


@dataclass(frozen=True)
class Check:
    name: str
    ok: bool
    detail: str = ""


def _pmap(fn: Callable, items: Sequence, threads: int) -> list:
    """Order-preserving map, in worker processes when ``threads > 1``."""
    if threads <= 1 or len(items) < 2:
        return [fn(x) for x in items]
    chunk = max(1, len(items) // (threads * 8))
    with ProcessPoolExecutor(max_workers=threads) as pool:
        return list(pool.map(fn, items, chunksize=chunk))


# -- confinement tables ------------------------------------------------------------


def confinement_results(target: str, threads: int = 1) -> list[RowResult]:
    rows = {"table1": table1_rows, "extras": extras_rows, "circulants": circulant_rows}[target]()
    return run_rows(rows, workers=threads)


# -- PE gallery --------------------------------------------------------------------


def extended_claw() -> Graph:
    """Claw with every edge subdivided: centre 0, arms 0-i-(i+3)."""
    return Graph(7, [(0, 1), (0, 2), (0, 3), (1, 4), (2, 5), (3, 6)])


def net() -> Graph:
    return add_pendants(cycle(3), [0, 1, 2])


def orbit_stage_one(pattern: TwoRootedGraph) -> Graph:
    """Pattern graph plus one pendant per vertex in the orbits of both roots."""
    orbit = {v: frozenset(b) for b in automorphism_orbits(pattern.graph) for v in b}
    return add_pendants(pattern.graph, sorted(orbit[pattern.s] | orbit[pattern.t]))


def gallery() -> Iterator[Check]:
    # single vertex rooted twice: stages keep growing
    tr = stage_sequence(TwoRootedGraph(path(1), 0, 0), max_stages=6)
    sizes = [g.n for g in tr.stages]
    grows = all(a < b for a, b in zip(sizes, sizes[1:]))
    yield Check("P1.s=t.diverges", not tr.converged and len(tr.stages) == 7 and grows, f"sizes={sizes}")
    yield Check("P1.s=t.stage1_is_P3", is_isomorphic(tr.stages[1], path(3)))

    # triangle with adjacent roots: finite sequence ending in the net
    tri = TwoRootedGraph(cycle(3), 0, 1)
    tr = stage_sequence(tri)
    yield Check("C3.adjacent.converges_to_net", tr.converged and is_isomorphic(tr.final, net()), str(tr.status))
    expected = [cycle(3), add_pendants(cycle(3), [0, 1]), net()]
    ok, _ = verify_pe_sequence(expected, tri)
    branches = pe_sequence_branches(tri)
    yield Check("C3.adjacent.unique_sequence", ok and len(branches) == 1 and all(is_isomorphic(a, b) for a, b in zip(branches[0], expected)))

    # four-cycle with adjacent roots: two branches with a common final graph
    sq = TwoRootedGraph(cycle(4), 0, 1)
    branches = pe_sequence_branches(sq)
    lim = classify(sq).limit
    lengths = sorted(len(b) for b in branches)
    yield Check(
        "C4.adjacent.two_branches_same_limit",
        len(branches) == 2 and all(is_isomorphic(b[-1], lim) for b in branches),
        f"lengths={lengths}",
    )

    # stage 3 of the 3-vertex path with adjacent roots: direct stage construction agrees with the closed-form step
    p3 = TwoRootedGraph(path(3), 0, 1)
    tr = stage_sequence(p3, max_stages=3)
    G = p3.graph
    for _ in range(3):
        G, _ = greedy_stage(G, p3)
    yield Check("P3.adjacent.stage3", len(tr.stages) == 4 and is_isomorphic(G, tr.stages[3]), f"n={tr.stages[-1].n}")

    # comb F(1,3,1) rooted twice at its middle tooth: limit reached at stage 1
    sp = CombSpec(1, 3, 1)
    t131 = TwoRootedGraph(comb(sp), sp.tooth(3), sp.tooth(3))
    tr = stage_sequence(t131)
    yield Check("F(1,3,1).b3,b3.limit_at_stage1", tr.converged and len(tr.stages) == 2, str(tr.status))

    # extended claw: stage 1 adds a pendant at every vertex in orb(s) and orb(t)
    claw = extended_claw()
    ok = True
    for s in (4, 5, 6):
        for t in (1, 2, 3):
            pat = TwoRootedGraph(claw, s, t)
            G1, _ = hst_extension(claw, pat)
            ok &= is_isomorphic(G1, orbit_stage_one(pat)) and G1.n == 13
    yield Check("extended_claw.stage1_orbit_law", ok)


# -- family classification -----------------------------------------------------------


def _comb(p: int, q: int, r: int) -> Graph:
    return comb(CombSpec(p, q, r))


FINITE_COMBS = {
    "a1,a2": ((3, 1, 1), lambda c: c.spine(1), lambda c: c.spine(2)),
    "a1,a4": ((1, 1, 4), lambda c: c.spine(1), lambda c: c.spine(4)),
    "b3,b3": ((2, 1, 2), lambda c: c.tooth(3), lambda c: c.tooth(3)),
    "b3,a2": ((2, 1, 2), lambda c: c.tooth(3), lambda c: c.spine(2)),
}


def family_checks(budget: int = 6) -> Iterator[Check]:
    samples = [("T1", (4, 3, 3)), ("T1", (1, 0, 2)), ("T1", (2, 1, 1)), ("T1", (1, 2, 1)),
               ("T2", (2, 1)), ("T2", (2, 2)), ("T2", (3, 3)),
               ("T3", (1, 0)), ("T3", (1, 1)), ("T3", (2, 1))]
    for kind, params in samples:
        res = classify(rooted_family(kind, *params), budget)
        yield Check(f"classify.{kind}{params}".replace(" ", ""), isinstance(res, PEInherentUpToBudget), str(res))
    for p, q, r in [(4, 3, 3), (1, 0, 2), (2, 1, 1), (1, 1, 1)]:
        seq = [_comb(p, q + i, r) for i in range(5)]
        ok, bad = verify_pe_sequence(seq, rooted_family("T1", p, q, r))
        yield Check(f"sequence.T1({p},{q},{r})", ok, f"first_bad={bad}")
    for p, q in [(1, 0), (1, 1), (2, 1)]:
        seq = [_comb(p, q, p + 1)]
        for i in (1, 2):
            seq += [_comb(p + 1, q + i, p), _comb(p + 1, q + i, p + 1)]
        ok, bad = verify_pe_sequence(seq[:5], rooted_family("T3", p, q))
        yield Check(f"sequence.T3({p},{q})", ok, f"first_bad={bad}")
    # comb rootings outside the three inherent-looking types: limit reached by stage 2
    for case, (params, s, t) in FINITE_COMBS.items():
        sp = CombSpec(*params)
        res = classify(TwoRootedGraph(comb(sp), s(sp), t(sp)), budget)
        stages = res.trace.stages
        ok = not isinstance(res, PEInherentUpToBudget) and len(stages) <= 3 and is_isomorphic(res.limit, stages[-1])
        yield Check(f"finite_comb.F{params}.{case}".replace(" ", ""), ok, f"stages={[g.n for g in stages]}")


# -- sweeps ----------------------------------------------------------------------------


def _subcubic_case(G: Graph) -> tuple[int, int, int]:
    n = inherent = bad = 0
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        for s, t in orbit_root_pairs(G):
            p = TwoRootedGraph(G, s, t)
            n += 1
            if isinstance(classify(p, 6), PEInherentUpToBudget):
                inherent += 1
                bad += not is_subcubic_two_rooted_tree(p)
    return n, inherent, bad


def _path_case(G: Graph) -> tuple[int, int]:
    n = fail = 0
    for k in (2, 3, 4):
        if has_induced_copy(G, path(k)):
            n += 1
            fail += find_avoidable_path_copy(G, k) is None
    return n, fail


_T201 = rooted_family("T1", 2, 0, 1)
_C5K1 = disjoint_union(cycle(5), Graph(1))


def _t201_case(G: Graph) -> tuple[int, int]:
    if not has_induced_copy(G, path(3)):
        return 0, 0
    if G.max_degree() > 3 and has_induced_copy(G, _C5K1):
        return 0, 0
    return 1, int(find_avoidable_copy_bruteforce(G, _T201) is None)


_K1 = TwoRootedGraph(Graph(1), 0, 0)


def _vertex_case(G: Graph) -> tuple[int, int]:
    return 1, int(find_avoidable_copy_bruteforce(G, _K1) is None)


def _sum(rows: Iterable[tuple[int, ...]]) -> tuple[int, ...]:
    return tuple(map(sum, zip(*rows)))


def sweep_checks(threads: int = 1, max_n: int = 8) -> Iterator[Check]:
    conn6 = list(corpus.graphs_upto(min(6, max_n), connected=True))
    n, inh, bad = _sum(_pmap(_subcubic_case, conn6, threads))
    yield Check("sweep.subcubic_necessity.n<=6", bad == 0, f"patterns={n} pe_inherent={inh} violations={bad}")
    conn8 = list(corpus.graphs_upto(max_n, connected=True))
    n, fail = _sum(_pmap(_path_case, conn8, threads))
    yield Check(f"sweep.endpoint_paths.n<={max_n}", fail == 0, f"cases={n} failures={fail}")
    n, fail = _sum(_pmap(_t201_case, conn8, threads))
    yield Check(f"sweep.T1(2,0,1).n<={max_n}", fail == 0, f"cases={n} failures={fail}")
    all7 = list(corpus.graphs_upto(min(7, max_n)))
    n, fail = _sum(_pmap(_vertex_case, all7, threads))
    yield Check("sweep.avoidable_vertex.n<=7", fail == 0, f"graphs={n} failures={fail}")


# -- random-tree property suite ----------------------------------------------------------


def random_tree(rng: random.Random, n: int) -> Graph:
    """Uniform labelled tree via a Pruefer sequence."""
    if n == 1:
        return Graph(1)
    if n == 2:
        return Graph(2, [(0, 1)])
    seq = [rng.randrange(n) for _ in range(n - 2)]
    degree = [1] * n
    for v in seq:
        degree[v] += 1
    edges = []
    for v in seq:
        leaf = min(u for u in range(n) if degree[u] == 1)
        edges.append((leaf, v))
        degree[leaf] -= 1
        degree[v] -= 1
    u, w = [x for x in range(n) if degree[x] == 1]
    edges.append((u, w))
    return Graph(n, edges)


def _relabel(G: Graph, perm: Sequence[int]) -> Graph:
    return Graph(G.n, [(perm[u], perm[v]) for u, v in G.edges()])


def _stage_case(args: tuple[int, int]) -> int:
    """Mismatch count between greedy stage grouping and the closed-form step for one random tree."""
    seed, stages = args
    rng = random.Random(seed)
    G = random_tree(rng, rng.randint(1, 8))
    s, t = rng.randrange(G.n), rng.randrange(G.n)
    pat = TwoRootedGraph(G, s, t)
    tr = stage_sequence(pat, max_stages=stages, max_vertices=400)
    cur = G
    bad = 0
    for j in range(1, len(tr.stages)):
        cur, _ = greedy_stage(cur, pat, rng)
        bad += not is_isomorphic(cur, tr.stages[j])
    return bad


def _orbit_case(seed: int) -> int:
    rng = random.Random(seed)
    G = random_tree(rng, rng.randint(2, 8))
    orbit = {v: b for b in automorphism_orbits(G) for v in b}
    s, t = rng.randrange(G.n), rng.randrange(G.n)
    s2 = rng.choice(orbit[s])
    t2 = s2 if s == t else rng.choice([v for v in orbit[t] if v != s2] or [None])
    if t2 is None:
        return 0
    perm = list(range(G.n))
    rng.shuffle(perm)
    a = stage_sequence(TwoRootedGraph(G, s, t), max_stages=4, max_vertices=2000)
    b = stage_sequence(TwoRootedGraph(_relabel(G, perm), perm[s2], perm[t2]), max_stages=4, max_vertices=2000)
    if len(a.stages) != len(b.stages):
        return 1
    return sum(not is_isomorphic(x, y) for x, y in zip(a.stages, b.stages))


def property_checks(threads: int = 1, trees: int = 200, swaps: int = 50, seed: int = 20240601) -> Iterator[Check]:
    bad = sum(_pmap(_stage_case, [(seed + i, 4) for i in range(trees)], threads))
    yield Check("property.stage_grouping", bad == 0, f"trees={trees} mismatches={bad}")
    bad = sum(_pmap(_orbit_case, [seed + 10_000 + i for i in range(swaps)], threads))
    yield Check("property.orbit_equivalence", bad == 0, f"swaps={swaps} mismatches={bad}")


def theorem_checks(threads: int = 1, max_n: int = 8) -> Iterator[Check]:
    yield from family_checks()
    yield from sweep_checks(threads, max_n)
    yield from property_checks(threads)


def petersen_checks() -> Iterator[Check]:
    """One canonical copy per Petersen row has exactly one extension, and it is not closable."""
    from .generators import named

    G = named("petersen")
    for params in [(1, 0, 2), (2, 0, 2), (1, 1, 1)]:
        pat = rooted_family("T1", *params)
        copy = CopyEmbedding(pat, G, copy_images(G, pat)[0])
        exts = enumerate_extensions(G, copy)
        pairs = {frozenset((e.s_prime, e.t_prime)) for e in exts}
        ok = len(pairs) == 1 and not any(is_closable(G, e)[0] for e in exts) and not is_simplicial(G, copy)
        yield Check(f"petersen.{pat.name}.unique_extension", ok, f"extensions={len(exts)}")
