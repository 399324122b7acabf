"""Exhaustive small-graph corpus.

Graphs on ``n`` vertices come from every graph on ``n - 1`` vertices plus a
new vertex with every possible neighbourhood, deduplicated by nauty
canonical form.  The result for ``n <= 8`` ships as graph6 files so the
sweeps do not need nauty at run time.
"""

from __future__ import annotations

import sys
from functools import lru_cache
from importlib import resources
from pathlib import Path
from typing import Iterable, Iterator, TextIO

from .codec import encode, read_graph6
from .graph import Graph

SHIPPED_MAX_N = 8


def _canonical(G: Graph) -> Graph:
    import pynauty

    g = pynauty.Graph(G.n, adjacency_dict={v: list(G.adj[v]) for v in range(G.n)})
    lab = pynauty.canon_label(g)  # lab[i] = old vertex placed at position i
    pos = {old: new for new, old in enumerate(lab)}
    return Graph(G.n, [(pos[u], pos[v]) for u, v in G.edges()])


def generate(n: int) -> list[Graph]:
    """All graphs on ``n`` vertices up to isomorphism, sorted by canonical graph6."""
    if n < 0:
        raise ValueError("n must be non-negative")
    level = [Graph(0)]
    for k in range(n):
        found: dict[str, Graph] = {}
        for G in level:
            for nb in range(1 << k):
                edges = G.edges() + [(v, k) for v in range(k) if nb >> v & 1]
                C = _canonical(Graph(k + 1, edges))
                found.setdefault(encode(C), C)
        level = [found[key] for key in sorted(found)]
    return level


def write_corpus(directory: Path, max_n: int = SHIPPED_MAX_N) -> None:
    directory = Path(directory)
    directory.mkdir(parents=True, exist_ok=True)
    for n in range(max_n + 1):
        lines = [encode(G) for G in generate(n)]
        (directory / f"graphs{n}.g6").write_text("\n".join(lines) + "\n")


@lru_cache(maxsize=None)
def _shipped(n: int) -> tuple[Graph, ...]:
    if not 0 <= n <= SHIPPED_MAX_N:
        raise ValueError(f"shipped corpus covers 0 <= n <= {SHIPPED_MAX_N}")
    text = resources.files("tworooted").joinpath("data", f"graphs{n}.g6").read_text()
    return tuple(G for _, G in read_graph6(text.splitlines()))


def graphs(n: int, connected: bool = False) -> list[Graph]:
    """Shipped corpus for ``n`` vertices."""
    out = list(_shipped(n))
    return [G for G in out if G.is_connected()] if connected else out


def graphs_upto(max_n: int, connected: bool = False, min_n: int = 1) -> Iterator[Graph]:
    for n in range(min_n, max_n + 1):
        yield from graphs(n, connected)


def read_corpus(source: TextIO | Iterable[str] | None = None) -> Iterator[Graph]:
    """Graphs from a graph6 stream (standard input by default)."""
    for _, G in read_graph6(sys.stdin if source is None else source):
        yield G
