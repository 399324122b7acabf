import io
import json
import random
import warnings

import pytest
from hypothesis import given, settings, strategies as st

from conftest import graphs
from tworooted.codec import decode
from tworooted.generators import CombSpec, comb, cycle, path, rooted_family
from tworooted.graph import Graph, add_pendants
from tworooted.iso import automorphism_orbits, is_isomorphic
from tworooted.pe import (
    BudgetExhausted,
    Converged,
    FinitelyExtendable,
    PEInherentUpToBudget,
    classify,
    enumerate_minimal_pes,
    greedy_stage,
    has_simplicial_copy,
    hst_extension,
    is_pe_of,
    pe_sequence_branches,
    stage_sequence,
    verify_pe_sequence,
    write_trace,
)
from tworooted.reproduce import extended_claw, net, random_tree
from tworooted.rooted import CopyEmbedding, TwoRootedGraph, enumerate_copies, is_simplicial


def hst_oracle(G, pat):
    """Definitional stage step built from the full copy list."""
    H = pat.graph
    copies = enumerate_copies(G, pat)
    attach = []
    for v in range(G.n):
        if pat.s != pat.t:
            hit = any((c.s == v and G.degree(v) == H.degree(pat.s)) or (c.t == v and G.degree(v) == H.degree(pat.t))
                      for c in copies)
            attach += [v] * hit
        elif any(c.s == v for c in copies):
            attach += [v] * max(0, 2 - (G.degree(v) - H.degree(pat.s)))
    return attach


@st.composite
def connected_patterns(draw, max_n=6):
    G = draw(graphs(min_n=1, max_n=max_n))
    if not G.is_connected():
        G = path(G.n)
    return TwoRootedGraph(G, draw(st.integers(0, G.n - 1)), draw(st.integers(0, G.n - 1)))


# -- single steps --------------------------------------------------------------------


def test_hst_examples():
    G1, attach = hst_extension(path(1), TwoRootedGraph(path(1), 0, 0))
    assert G1 == Graph(3, [(0, 1), (0, 2)]) and attach == [0, 0]
    claw = extended_claw()
    G1, attach = hst_extension(claw, TwoRootedGraph(claw, 4, 1))
    assert attach == [1, 2, 3, 4, 5, 6] and G1.n == 13
    G, attach = hst_extension(path(2), TwoRootedGraph(cycle(3), 0, 1))
    assert G == path(2) and attach == []


@given(graphs(min_n=1, max_n=7), connected_patterns(max_n=4))
@settings(max_examples=120, deadline=None)
def test_hst_matches_definition(G, pat):
    G1, attach = hst_extension(G, pat)
    assert attach == hst_oracle(G, pat)
    assert G1 == add_pendants(G, attach)


def test_minimal_pe_examples():
    tri = TwoRootedGraph(cycle(3), 0, 1)
    (pe,) = enumerate_minimal_pes(cycle(3), enumerate_copies(cycle(3), tri)[0])
    assert is_isomorphic(pe, add_pendants(cycle(3), [0, 1]))
    sq = TwoRootedGraph(cycle(4), 0, 1)
    pes = enumerate_minimal_pes(cycle(4), enumerate_copies(cycle(4), sq)[0])
    assert len(pes) == 1 and pes[0].n == 6
    k1 = TwoRootedGraph(path(1), 0, 0)
    (pe,) = enumerate_minimal_pes(path(1), enumerate_copies(path(1), k1)[0])
    assert is_isomorphic(pe, path(3))
    ep = TwoRootedGraph(path(3), 0, 2)
    with pytest.raises(ValueError):
        enumerate_minimal_pes(path(5), CopyEmbedding(ep, path(5), (1, 2, 3)))


def test_single_pendant_suffices_when_other_root_has_room():
    # an edge copy at the end of P3: t already has the free neighbour 2
    pat = TwoRootedGraph(path(2), 0, 1)
    G = path(3)
    (pe,) = enumerate_minimal_pes(G, CopyEmbedding(pat, G, (0, 1)))
    assert pe == add_pendants(G, [0])


@given(connected_patterns(max_n=5), st.randoms(use_true_random=False))
@settings(max_examples=60, deadline=None)
def test_minimal_pes_are_minimal_and_fix_the_copy(pat, rnd):
    G = pat.graph
    for copy in enumerate_copies(G, pat):
        if not is_simplicial(G, copy):
            continue
        pes = enumerate_minimal_pes(G, copy)
        k = pes[0].n - G.n
        assert all(pe.n - G.n == k and pe.m - G.m == k for pe in pes)
        for pe in pes:
            assert not is_simplicial(pe, CopyEmbedding(pat, pe, copy.image))
        if k == 2:
            for r in {copy.s, copy.t}:
                assert is_simplicial(add_pendants(G, [r]), CopyEmbedding(pat, G, copy.image))


# -- stage sequences ------------------------------------------------------------------


def test_stage_sequence_examples():
    tr = stage_sequence(TwoRootedGraph(cycle(3), 0, 1))
    assert tr.converged and is_isomorphic(tr.final, net()) and [g.n for g in tr.stages] == [3, 6]
    sp = CombSpec(1, 3, 1)
    tr = stage_sequence(TwoRootedGraph(comb(sp), sp.tooth(3), sp.tooth(3)))
    assert tr.converged and tr.status.limit_stage == 1
    tr = stage_sequence(TwoRootedGraph(path(1), 0, 0), max_stages=6)
    assert not tr.converged and [g.n for g in tr.stages] == [1, 3, 5, 7, 9, 11, 13]
    assert isinstance(tr.status, BudgetExhausted) and str(tr.status) == "budget-exhausted(6,5000)"
    with pytest.raises(ValueError):
        stage_sequence(TwoRootedGraph(path(1), 0, 0), max_stages=-1)


def test_vertex_budget():
    tr = stage_sequence(TwoRootedGraph(path(1), 0, 0), max_stages=100, max_vertices=10)
    assert not tr.converged and tr.final.n <= 10


@given(connected_patterns(max_n=6))
@settings(max_examples=80, deadline=None)
def test_stage_invariants(pat):
    tr = stage_sequence(pat, max_stages=4, max_vertices=300)
    H = pat.graph
    for j, G in enumerate(tr.stages):
        assert G.m - H.m == G.n - H.n  # only pendant trees are ever added
        assert G == H if j == 0 else is_isomorphic(G, add_pendants(tr.stages[j - 1], tr.parent_maps[j - 1]))
    sizes = [g.n for g in tr.stages]
    assert all(a < b for a, b in zip(sizes, sizes[1:]))


@given(connected_patterns(max_n=6))
@settings(max_examples=60, deadline=None)
def test_converged_iff_no_simplicial_copy(pat):
    tr = stage_sequence(pat, max_stages=6, max_vertices=500)
    if tr.converged:
        assert not has_simplicial_copy(tr.final, pat)
    else:
        assert has_simplicial_copy(tr.final, pat)


@given(st.integers(0, 10**6))
@settings(max_examples=40, deadline=None)
def test_greedy_stages_match_closed_form(seed):
    rng = random.Random(seed)
    G = random_tree(rng, rng.randint(1, 7))
    pat = TwoRootedGraph(G, rng.randrange(G.n), rng.randrange(G.n))
    tr = stage_sequence(pat, max_stages=3, max_vertices=200)
    cur = G
    for j in range(1, len(tr.stages)):
        cur, _ = greedy_stage(cur, pat, rng)
        assert is_isomorphic(cur, tr.stages[j])


@given(st.integers(0, 10**6))
@settings(max_examples=30, deadline=None)
def test_stage_one_orbit_law(seed):
    rng = random.Random(seed)
    G = random_tree(rng, rng.randint(2, 8))
    s, t = rng.sample(range(G.n), 2)
    pat = TwoRootedGraph(G, s, t)
    if not has_simplicial_copy(G, pat):
        return
    orbit = {v: set(b) for b in automorphism_orbits(G) for v in b}
    G1, _ = hst_extension(G, pat)
    assert is_isomorphic(G1, add_pendants(G, sorted(orbit[s] | orbit[t])))


# -- classification -------------------------------------------------------------------


def test_classify_examples():
    res = classify(TwoRootedGraph(cycle(4), 0, 1))
    assert isinstance(res, FinitelyExtendable) and str(res) == "finitely-extendable"
    assert res.limit.n == 8
    res = classify(rooted_family("T1", 4, 3, 3), 8)
    assert isinstance(res, PEInherentUpToBudget) and str(res) == "PE-inherent-up-to-budget(8)"
    sp = CombSpec(2, 1, 2)
    res = classify(TwoRootedGraph(comb(sp), sp.tooth(3), sp.spine(2)), 6)
    assert isinstance(res, FinitelyExtendable) and len(res.trace.stages) <= 3


def test_disconnected_pattern_warns():
    pat = TwoRootedGraph(Graph(3, [(0, 1)]), 0, 1)
    with pytest.warns(UserWarning, match="disconnected"):
        classify(pat, 3)


def test_t2_with_p_one_converges():
    for q in (1, 2, 3):
        assert isinstance(classify(rooted_family("T2", 1, q), 6), FinitelyExtendable)


# -- sequences -------------------------------------------------------------------------


def _c(p, q, r):
    return comb(CombSpec(p, q, r))


@pytest.mark.parametrize("p, q, r", [(4, 3, 3), (1, 0, 2), (2, 1, 1)])
def test_type_one_sequence(p, q, r):
    assert verify_pe_sequence([_c(p, q + i, r) for i in range(5)], rooted_family("T1", p, q, r)) == (True, None)


@pytest.mark.parametrize("p, q", [(1, 0), (1, 1), (2, 1)])
def test_type_three_sequence(p, q):
    seq = [_c(p, q, p + 1), _c(p + 1, q + 1, p), _c(p + 1, q + 1, p + 1), _c(p + 1, q + 2, p), _c(p + 1, q + 2, p + 1)]
    assert verify_pe_sequence(seq, rooted_family("T3", p, q)) == (True, None)


def test_bad_sequences():
    pat = rooted_family("T1", 2, 1, 1)
    G = pat.graph
    inner = next(v for v in range(G.n) if G.degree(v) == 3)
    assert verify_pe_sequence([G, add_pendants(G, [inner])], pat) == (False, 1)
    assert verify_pe_sequence([path(3)], pat) == (False, 0)
    assert not is_pe_of(G, G, pat)
    with pytest.raises(ValueError):
        verify_pe_sequence([], pat)


def test_branches_of_four_cycle():
    sq = TwoRootedGraph(cycle(4), 0, 1)
    branches = pe_sequence_branches(sq)
    assert sorted(len(b) for b in branches) == [3, 4]
    assert is_isomorphic(branches[0][-1], branches[1][-1])
    for b in branches:
        assert verify_pe_sequence(b, sq) == (True, None)


def test_write_trace():
    tr = stage_sequence(TwoRootedGraph(cycle(3), 0, 1))
    g6, side = io.StringIO(), io.StringIO()
    write_trace(tr, g6, side)
    stages = [decode(line) for line in g6.getvalue().splitlines()]
    assert stages == list(tr.stages)
    records = [json.loads(line) for line in side.getvalue().splitlines()]
    assert records[0] == {"stage": 0, "n": 3, "attach": []}
    assert records[1] == {"stage": 1, "n": 6, "attach": [0, 1, 2]}
    assert records[-1]["status"] == str(Converged(1)) == "converged(1)"
