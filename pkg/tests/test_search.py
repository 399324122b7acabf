import pytest
from hypothesis import given, settings, strategies as st

from conftest import graphs
from tworooted.generators import complete, cycle, named, path, rooted_family
from tworooted.graph import Graph, closed_neighborhood, disjoint_union
from tworooted.rooted import TwoRootedGraph, confines, copy_images, has_induced_copy, is_avoidable
from tworooted.search import (
    AvoidingSet,
    disjoint_union_transfer,
    endpoints_rooted_path,
    find_avoidable_copy_bruteforce,
    find_avoidable_path_copy,
    grow_maximal_avoiding_set,
    is_h_avoiding,
)


def assert_maximal(host, U, H):
    for v in range(host.n):
        if v not in U and any(w in U for w in host.adj[v]):
            assert not is_h_avoiding(host, U | {v}, H)


def test_h_avoiding_examples():
    assert is_h_avoiding(cycle(6), {0}, path(3))
    assert not is_h_avoiding(complete(4), {0}, path(2))
    assert is_h_avoiding(path(7), {0}, path(4))
    assert not is_h_avoiding(path(7), {0, 2}, path(2))  # not connected
    with pytest.raises(ValueError):
        is_h_avoiding(path(3), set(), path(1))


def test_grow_examples():
    assert grow_maximal_avoiding_set(cycle(6), {0}, path(3)).members == {0}
    U = grow_maximal_avoiding_set(path(12), {0}, path(3)).members
    assert {0} < U
    assert_maximal(path(12), U, path(3))
    assert grow_maximal_avoiding_set(path(12), U, path(3)).members == U
    with pytest.raises(ValueError):
        grow_maximal_avoiding_set(complete(4), {0}, path(2))
    with pytest.raises(ValueError):
        AvoidingSet(complete(4), frozenset({0}), path(2))


@given(graphs(min_n=2, max_n=8), st.integers(1, 3), st.data())
@settings(max_examples=80, deadline=None)
def test_grown_sets_are_avoiding_and_maximal(G, k, data):
    H = path(k)
    seeds = [v for v in range(G.n) if is_h_avoiding(G, {v}, H)]
    if not seeds:
        return
    U = grow_maximal_avoiding_set(G, {data.draw(st.sampled_from(seeds))}, H).members
    assert is_h_avoiding(G, U, H)
    assert_maximal(G, set(U), H)


def test_path_search_examples():
    c = find_avoidable_path_copy(path(5), 3)
    assert c is not None and is_avoidable(path(5), c)[0]
    c = find_avoidable_path_copy(cycle(6), 2)
    assert c is not None and is_avoidable(cycle(6), c)[0]
    assert find_avoidable_path_copy(complete(5), 3) is None
    with pytest.raises(ValueError):
        find_avoidable_path_copy(path(3), 0)


@given(graphs(min_n=1, max_n=8), st.integers(1, 5))
@settings(max_examples=150, deadline=None)
def test_path_search_agrees_with_brute_force(G, k):
    c = find_avoidable_path_copy(G, k)
    if not has_induced_copy(G, path(k)):
        assert c is None
        return
    assert c is not None and is_avoidable(G, c)[0]
    assert find_avoidable_copy_bruteforce(G, endpoints_rooted_path(k)) is not None


def test_bruteforce_examples():
    P = named("petersen")
    assert find_avoidable_copy_bruteforce(P, rooted_family("T1", 1, 0, 2)) is None
    t201 = rooted_family("T1", 2, 0, 1)
    for host in [path(6), cycle(7), named("prism", 5), named("heawood")]:
        c = find_avoidable_copy_bruteforce(host, t201)
        assert c is not None and is_avoidable(host, c)[0]


@given(graphs(min_n=1, max_n=7))
@settings(max_examples=80, deadline=None)
def test_bruteforce_absent_iff_confined_or_missing(G):
    pat = rooted_family("T1", 2, 0, 1)
    c = find_avoidable_copy_bruteforce(G, pat)
    rep = confines(G, pat)
    assert (c is None) == (rep.overall or rep.copy_count == 0)
    if c is not None:
        assert c.image == next(v.image for v in rep.verdicts if v.avoidable)


def test_transfer_examples():
    inner = endpoints_rooted_path(2)
    host = disjoint_union(path(2), path(4))
    c = disjoint_union_transfer(host, inner, Graph(1))
    assert c is not None and is_avoidable(host, c)[0]
    assert c.pattern.graph == disjoint_union(path(2), Graph(1))
    assert disjoint_union_transfer(path(3), inner, cycle(3)) is None
    with pytest.raises(ValueError):
        disjoint_union_transfer(complete(3), inner, Graph(1))
    with pytest.raises(ValueError):
        disjoint_union_transfer(path(3), inner, Graph(0))


@given(graphs(min_n=2, max_n=8))
@settings(max_examples=80, deadline=None)
def test_transfer_output_is_avoidable(G):
    inner = endpoints_rooted_path(2)
    extra = Graph(1)
    combined = TwoRootedGraph(disjoint_union(inner.graph, extra), 0, 1)
    if not copy_images(G, combined):
        return
    c = disjoint_union_transfer(G, inner, extra)
    assert c is not None and is_avoidable(G, c)[0]
    used = set(c.image[:2])
    assert not used & closed_neighborhood(G, {c.image[2]})
