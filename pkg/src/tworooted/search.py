"""Constructive searches for avoidable copies.

The path search follows the maximal-avoiding-set argument: a connected set
``U`` is H-avoiding when ``G - N[U]`` still contains H.  Growing ``U`` until
no neighbour can be added and recursing into ``G - N[U]`` yields a copy that
is avoidable in the original graph.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Optional

from .generators import path
from .graph import Graph, VertexSet, closed_neighborhood, component_mask, delete_vertices, disjoint_union, to_mask
from .rooted import (
    CopyEmbedding,
    TwoRootedGraph,
    _CopyView,
    copy_images,
    find_induced_copy,
    has_induced_copy,
    is_avoidable,
)


@dataclass(frozen=True)
class AvoidingSet:
    host: Graph
    members: VertexSet
    target_pattern: Graph

    def __post_init__(self):
        if not is_h_avoiding(self.host, self.members, self.target_pattern):
            raise ValueError("members do not form an avoiding set")


def is_h_avoiding(host: Graph, U, H: Graph) -> bool:
    U = frozenset(U)
    if not U:
        raise ValueError("avoiding sets are non-empty")
    umask = to_mask(U)
    if component_mask(host.masks, 1 << min(U), umask) != umask:
        return False
    rest = host.all_mask & ~to_mask(closed_neighborhood(host, U))
    return has_induced_copy(host, H, within=rest)


def grow_maximal_avoiding_set(host: Graph, seed, H: Graph) -> AvoidingSet:
    """Add neighbours of ``U`` in ascending order while the set stays H-avoiding."""
    U = set(seed)
    if not is_h_avoiding(host, U, H):
        raise ValueError("seed is not H-avoiding")
    grew = True
    while grew:
        grew = False
        for v in range(host.n):
            if v in U or not any(w in U for w in host.adj[v]):
                continue
            if is_h_avoiding(host, U | {v}, H):
                U.add(v)
                grew = True
    return AvoidingSet(host, frozenset(U), H)


def endpoints_rooted_path(k: int) -> TwoRootedGraph:
    """Path on ``k`` vertices rooted at its two ends (``s = t`` when ``k = 1``)."""
    return TwoRootedGraph(path(k), 0, k - 1, f"P{k}")


def _path_copy(G: Graph, P: TwoRootedGraph) -> Optional[tuple[int, ...]]:
    images = copy_images(G, P)
    if not images:
        return None
    s, t = P.s, P.t
    for img in images:
        if next(_CopyView(G, img, img[s], img[t]).pairs(), None) is None:
            return img
    img = images[0]
    s_prime, _ = next(_CopyView(G, img, img[s], img[t]).pairs())
    U = grow_maximal_avoiding_set(G, {s_prime}, P.graph).members
    G2, keep = delete_vertices(G, closed_neighborhood(G, U))
    sub = _path_copy(G2, P)
    if sub is None:
        raise AssertionError("avoiding set left no copy behind")
    img = tuple(keep[v] for v in sub)
    ok, _ = is_avoidable(G, CopyEmbedding(P, G, img))
    if not ok:
        raise AssertionError("lifted copy is not avoidable")
    return img


def find_avoidable_path_copy(host: Graph, k: int) -> Optional[CopyEmbedding]:
    """An avoidable copy of the endpoints-rooted ``k``-vertex path, or None if there is no such path."""
    if k < 1:
        raise ValueError("k must be at least 1")
    P = endpoints_rooted_path(k)
    img = _path_copy(host, P)
    return None if img is None else CopyEmbedding(P, host, img)


def find_avoidable_copy_bruteforce(host: Graph, pattern: TwoRootedGraph) -> Optional[CopyEmbedding]:
    """First avoidable copy in canonical order."""
    s, t = pattern.s, pattern.t
    for img in copy_images(host, pattern):
        if _CopyView(host, img, img[s], img[t]).first_unclosable() is None:
            return CopyEmbedding(pattern, host, img)
    return None


def disjoint_union_transfer(
    host: Graph,
    inner: TwoRootedGraph,
    extra: Graph,
    finder: Callable[[Graph, TwoRootedGraph], Optional[CopyEmbedding]] = find_avoidable_copy_bruteforce,
) -> Optional[CopyEmbedding]:
    """Avoidable copy of ``(inner + extra, s, t)`` built from an avoidable copy of ``inner`` away from ``extra``.

    Copies of ``extra`` are tried in canonical order; for each, ``finder`` looks
    for an avoidable copy of ``inner`` in ``host - N[extra copy]``.  Returns
    None when ``host`` has no copy of ``extra`` or ``finder`` never succeeds.
    """
    if extra.n == 0:
        raise ValueError("extra graph must have at least one vertex")
    combined = TwoRootedGraph(disjoint_union(inner.graph, extra), inner.s, inner.t)
    if find_induced_copy(host, combined.graph) is None:
        if find_induced_copy(host, extra) is None:
            return None
        raise ValueError("host has no copy of the disjoint pattern")
    seen = set()
    for img in copy_images(host, TwoRootedGraph(extra, 0, 0)):
        vs = frozenset(img)
        if vs in seen:
            continue
        seen.add(vs)
        G2, keep = delete_vertices(host, closed_neighborhood(host, vs))
        found = finder(G2, inner)
        if found is None:
            continue
        image = tuple(keep[v] for v in found.image) + img
        copy = CopyEmbedding(combined, host, image)
        ok, _ = is_avoidable(host, copy)
        if not ok:
            raise AssertionError("combined copy is not avoidable")
        return copy
    return None
