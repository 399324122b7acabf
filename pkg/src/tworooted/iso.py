"""Graph isomorphism and automorphism orbits.

Individualisation-refinement: both graphs are colour-refined jointly (as one
disjoint union, so colour names agree), then the smallest ambiguous cell is
split by trying every target for one source vertex.
"""

from __future__ import annotations

from typing import Optional

from .graph import Graph


def _refine(adj: list[tuple[int, ...]], colors: list[int]) -> list[int]:
    ncolors = len(set(colors))
    while True:
        sigs = [(colors[v], tuple(sorted(colors[w] for w in adj[v]))) for v in range(len(adj))]
        palette = {s: i for i, s in enumerate(sorted(set(sigs)))}
        colors = [palette[s] for s in sigs]
        if len(palette) == ncolors:
            return colors
        ncolors = len(palette)


def _balanced(colors: list[int], n1: int) -> bool:
    count: dict[int, int] = {}
    for c in colors[:n1]:
        count[c] = count.get(c, 0) + 1
    for c in colors[n1:]:
        left = count.get(c, 0)
        if not left:
            return False
        count[c] = left - 1
    return not any(count.values())


class _Joint:
    def __init__(self, G1: Graph, G2: Graph):
        self.G1, self.G2 = G1, G2
        self.n1 = G1.n
        off = G1.n
        self.adj = list(G1.adj) + [tuple(w + off for w in row) for row in G2.adj]

    def search(self, colors: list[int]) -> Optional[dict[int, int]]:
        colors = _refine(self.adj, colors)
        if not _balanced(colors, self.n1):
            return None
        n1 = self.n1
        cells: dict[int, list[int]] = {}
        for v in range(n1):
            cells.setdefault(colors[v], []).append(v)
        target = None
        for c, members in cells.items():
            if len(members) > 1 and (target is None or len(members) < len(cells[target])):
                target = c
        if target is None:
            back = {colors[w]: w - n1 for w in range(n1, len(colors))}
            mapping = {v: back[colors[v]] for v in range(n1)}
            return mapping if self._is_iso(mapping) else None
        u = cells[target][0]
        fresh = len(colors)
        for w in range(n1, len(colors)):
            if colors[w] != target:
                continue
            trial = list(colors)
            trial[u] = trial[w] = fresh
            found = self.search(trial)
            if found is not None:
                return found
        return None

    def _is_iso(self, f: dict[int, int]) -> bool:
        G2 = self.G2
        return all(G2.has_edge(f[u], f[v]) for u, v in self.G1.edges())


def _quick_reject(G1: Graph, G2: Graph) -> bool:
    return G1.n != G2.n or G1.m != G2.m or sorted(G1.degrees()) != sorted(G2.degrees())


def find_isomorphism(
    G1: Graph,
    G2: Graph,
    roots1: Optional[tuple[int, int]] = None,
    roots2: Optional[tuple[int, int]] = None,
) -> Optional[dict[int, int]]:
    """Return an isomorphism ``G1 -> G2`` (mapping roots to roots if given), else None."""
    if (roots1 is None) != (roots2 is None):
        raise ValueError("roots must be given for both graphs or neither")
    if _quick_reject(G1, G2):
        return None
    colors = [0] * (G1.n + G2.n)
    if roots1 is not None:
        (s1, t1), (s2, t2) = roots1, roots2
        if (s1 == t1) != (s2 == t2):
            return None
        off = G1.n
        colors[s1] = colors[s2 + off] = 1
        colors[t1] = colors[t2 + off] = 2 if s1 != t1 else 1
    return _Joint(G1, G2).search(colors)


def is_isomorphic(G1: Graph, G2: Graph, roots1=None, roots2=None) -> bool:
    return find_isomorphism(G1, G2, roots1, roots2) is not None


def automorphism_orbits(G: Graph, fixed: tuple[int, ...] = ()) -> list[list[int]]:
    """Orbits of the automorphism group (optionally the pointwise stabiliser of ``fixed``).

    Blocks are sorted, and listed by their smallest vertex.
    """
    parent = list(range(G.n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    joint = _Joint(G, G)
    base = [0] * (2 * G.n)
    for i, v in enumerate(fixed):
        base[v] = base[v + G.n] = i + 1
    refined = _refine(joint.adj, base)
    for u in range(G.n):
        for v in range(u + 1, G.n):
            if refined[u] != refined[v] or find(u) == find(v):
                continue
            trial = list(refined)
            fresh = len(trial)
            trial[u] = trial[v + G.n] = fresh
            f = joint.search(trial)
            if f is None:
                continue
            for a, b in f.items():
                ra, rb = find(a), find(b)
                if ra != rb:
                    parent[max(ra, rb)] = min(ra, rb)
    blocks: dict[int, list[int]] = {}
    for v in range(G.n):
        blocks.setdefault(find(v), []).append(v)
    return sorted(blocks.values())


def orbit_of(G: Graph, v: int) -> frozenset[int]:
    for block in automorphism_orbits(G):
        if v in block:
            return frozenset(block)
    raise ValueError(f"vertex {v} out of range")
