"""Immutable finite simple graphs.

Vertices are ``0..n-1``.  Every graph keeps both sorted neighbour tuples and
per-vertex neighbour bitmasks (Python ints); the bitmasks are what the
subgraph search in :mod:`tworooted.rooted` runs on.
"""

from __future__ import annotations

import math
from collections import deque
from typing import Iterable, Iterator, Literal, Sequence

VertexSet = frozenset

INF = math.inf


def bits(mask: int) -> Iterator[int]:
    """Yield the indices of set bits of ``mask`` in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def to_mask(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


class Graph:
    """A finite simple undirected graph on vertices ``0..n-1``."""

    __slots__ = ("n", "adj", "masks", "_m")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if n < 0:
            raise ValueError("vertex count must be non-negative")
        nbrs: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"self-loop at {u}")
            nbrs[u].add(v)
            nbrs[v].add(u)
        self.n = n
        self.adj: tuple[tuple[int, ...], ...] = tuple(tuple(sorted(s)) for s in nbrs)
        self.masks: tuple[int, ...] = tuple(to_mask(s) for s in nbrs)
        self._m = sum(len(s) for s in nbrs) // 2

    @classmethod
    def from_adjacency(cls, adjacency: Sequence[Iterable[int]]) -> "Graph":
        edges = [(u, v) for u, row in enumerate(adjacency) for v in row]
        for u, v in edges:
            if 0 <= v < len(adjacency) and u not in set(adjacency[v]):
                raise ValueError(f"adjacency not symmetric at ({u}, {v})")
        return cls(len(adjacency), edges)

    # -- basic queries -------------------------------------------------------

    @property
    def m(self) -> int:
        return self._m

    @property
    def all_mask(self) -> int:
        return (1 << self.n) - 1

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in self.adj[u] if u < v]

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def degrees(self) -> list[int]:
        return [len(a) for a in self.adj]

    def max_degree(self) -> int:
        return max((len(a) for a in self.adj), default=0)

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.masks[u] >> v & 1)

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adj[v]

    def components(self) -> list[list[int]]:
        seen = 0
        out = []
        for v in range(self.n):
            if seen >> v & 1:
                continue
            comp = component_mask(self.masks, 1 << v, self.all_mask)
            seen |= comp
            out.append(list(bits(comp)))
        return out

    def is_connected(self) -> bool:
        return self.n == 0 or component_mask(self.masks, 1, self.all_mask) == self.all_mask

    def is_tree(self) -> bool:
        return self.n > 0 and self.m == self.n - 1 and self.is_connected()

    # -- dunder --------------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Graph) and self.n == other.n and self.adj == other.adj

    def __hash__(self) -> int:
        return hash((self.n, self.adj))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"

    def __getstate__(self):
        return (self.n, self.edges())

    def __setstate__(self, state):
        n, edges = state
        Graph.__init__(self, n, edges)


def component_mask(masks: Sequence[int], start: int, within: int) -> int:
    """Vertices reachable from ``start`` (a mask) inside ``within``."""
    comp = start & within
    frontier = comp
    while frontier:
        nxt = 0
        for v in bits(frontier):
            nxt |= masks[v]
        frontier = nxt & within & ~comp
        comp |= frontier
    return comp


def _check_vertices(G: Graph, S: Iterable[int]) -> list[int]:
    S = sorted(set(S))
    for v in S:
        if not 0 <= v < G.n:
            raise ValueError(f"vertex {v} out of range for n={G.n}")
    return S


def induced_subgraph(G: Graph, S: Iterable[int]) -> tuple[Graph, dict[int, int]]:
    """Return ``G[S]`` with vertices renumbered in ascending order, plus old->new map."""
    order = _check_vertices(G, S)
    index = {v: i for i, v in enumerate(order)}
    smask = to_mask(order)
    edges = [(index[u], index[w]) for u in order for w in bits(G.masks[u] & smask) if u < w]
    return Graph(len(order), edges), index


def closed_neighborhood(G: Graph, S: Iterable[int]) -> VertexSet:
    S = _check_vertices(G, S)
    m = to_mask(S)
    for v in S:
        m |= G.masks[v]
    return frozenset(bits(m))


def open_neighborhood(G: Graph, S: Iterable[int]) -> VertexSet:
    S = _check_vertices(G, S)
    return closed_neighborhood(G, S) - frozenset(S)


def girth(G: Graph) -> float | int:
    """Length of a shortest cycle, or ``math.inf`` for forests."""
    best = INF
    for r in range(G.n):
        dist = {r: 0}
        parent = {r: -1}
        queue = deque([r])
        while queue:
            u = queue.popleft()
            if 2 * dist[u] + 1 >= best:
                break
            for w in G.adj[u]:
                if w not in dist:
                    dist[w] = dist[u] + 1
                    parent[w] = u
                    queue.append(w)
                elif parent[u] != w:
                    best = min(best, dist[u] + dist[w] + 1)
    return best


def disjoint_union(G: Graph, H: Graph) -> Graph:
    off = G.n
    return Graph(G.n + H.n, G.edges() + [(u + off, v + off) for u, v in H.edges()])


def lexicographic(G: Graph, H: Graph) -> Graph:
    """``G o H``; vertex ``(u, v)`` gets index ``u * H.n + v``."""
    k = H.n
    edges = []
    for u in range(G.n):
        for x in G.adj[u]:
            if u < x:
                edges.extend((u * k + v, x * k + y) for v in range(k) for y in range(k))
        edges.extend((u * k + v, u * k + y) for v, y in H.edges())
    return Graph(G.n * k, edges)


def cartesian(G: Graph, H: Graph) -> Graph:
    """``G [] H``; vertex ``(u, v)`` gets index ``u * H.n + v``."""
    k = H.n
    edges = []
    for u in range(G.n):
        edges.extend((u * k + v, u * k + y) for v, y in H.edges())
    for u, x in G.edges():
        edges.extend((u * k + v, x * k + v) for v in range(k))
    return Graph(G.n * k, edges)


def compose(kind: Literal["disjoint_union", "lexicographic", "cartesian"], G: Graph, H: Graph) -> Graph:
    try:
        op = {"disjoint_union": disjoint_union, "lexicographic": lexicographic, "cartesian": cartesian}[kind]
    except KeyError:
        raise ValueError(f"unknown composition {kind!r}") from None
    return op(G, H)


def delete_vertices(G: Graph, S: Iterable[int]) -> tuple[Graph, list[int]]:
    """``G - S``; returns the graph and the list mapping new index -> old index."""
    drop = set(S)
    keep = [v for v in range(G.n) if v not in drop]
    H, _ = induced_subgraph(G, keep)
    return H, keep


def add_pendants(G: Graph, attach: Sequence[int]) -> Graph:
    """Append one new vertex per entry of ``attach``, joined to that vertex."""
    n = G.n
    return Graph(n + len(attach), G.edges() + [(v, n + i) for i, v in enumerate(attach)])
