"""Pendant extensions, stage sequences and the budgeted PE classifier."""

from __future__ import annotations

import json
import random
import warnings
from dataclasses import dataclass
from typing import Optional, Sequence, TextIO, Union

from .codec import encode
from .graph import Graph, add_pendants
from .iso import is_isomorphic
from .rooted import CopyEmbedding, TwoRootedGraph, _CopyView, _Matcher, copy_images, to_rg6

DEFAULT_MAX_STAGES = 10
DEFAULT_MAX_VERTICES = 5000


def _has_copy_rooted_at(matcher: _Matcher, v: int) -> bool:
    return next(matcher.embeddings(first=v), None) is not None


def hst_extension(G: Graph, pattern: TwoRootedGraph) -> tuple[Graph, list[int]]:
    """One deterministic stage step.

    Returns the extended graph and, for each new vertex (in index order), the
    old vertex it hangs off.
    """
    H, s, t = pattern.graph, pattern.s, pattern.t
    deg = G.degrees()
    attach: list[int] = []
    if s != t:
        by_s = _Matcher(G, H, s, t)
        by_t = _Matcher(G, H, t, s)
        ds, dt = H.degree(s), H.degree(t)
        for v in range(G.n):
            if (deg[v] == ds and _has_copy_rooted_at(by_s, v)) or (deg[v] == dt and _has_copy_rooted_at(by_t, v)):
                attach.append(v)
    else:
        by_s = _Matcher(G, H, s, s)
        ds = H.degree(s)
        for v in range(G.n):
            missing = 2 - (deg[v] - ds)
            if missing > 0 and _has_copy_rooted_at(by_s, v):
                attach.extend([v] * missing)
    return (add_pendants(G, attach) if attach else G), attach


def _simplicial_images(G: Graph, pattern: TwoRootedGraph) -> list[tuple[int, ...]]:
    s, t = pattern.s, pattern.t
    out = []
    for img in copy_images(G, pattern):
        if next(_CopyView(G, img, img[s], img[t]).pairs(), None) is None:
            out.append(img)
    return out


def has_simplicial_copy(G: Graph, pattern: TwoRootedGraph) -> bool:
    return bool(_simplicial_images(G, pattern))


def enumerate_minimal_pes(G: Graph, copy: CopyEmbedding) -> list[Graph]:
    """All graphs obtained by adding the fewest pendant edges at the copy's roots that make it non-simplicial."""
    s, t = copy.s, copy.t
    img = copy.image
    if next(_CopyView(G, img, s, t).pairs(), None) is not None:
        raise ValueError("copy is not simplicial")
    if s != t:
        options = [[[s], [t]], [[s, t]]]
    else:
        options = [[[s]], [[s, s]]]
    for group in options:
        found: list[Graph] = []
        for attach in group:
            G2 = add_pendants(G, attach)
            if next(_CopyView(G2, img, s, t).pairs(), None) is not None and G2 not in found:
                found.append(G2)
        if found:
            return found
    raise AssertionError("two pendant edges always suffice")


def greedy_stage(G: Graph, pattern: TwoRootedGraph, rng: Optional[random.Random] = None) -> tuple[Graph, list[int]]:
    """One stage built literally: process every simplicial copy of ``G`` in turn, applying a PE when still needed.

    With ``rng`` the copy order and the choice among minimal PEs are random;
    otherwise canonical order and the first PE are used.
    """
    images = _simplicial_images(G, pattern)
    if rng is not None:
        rng.shuffle(images)
    cur = G
    s, t = pattern.s, pattern.t
    for img in images:
        if next(_CopyView(cur, img, img[s], img[t]).pairs(), None) is not None:
            continue
        pes = enumerate_minimal_pes(cur, CopyEmbedding(pattern, cur, img))
        cur = rng.choice(pes) if rng is not None else pes[0]
    attach = [_stage_anchor(cur, v) for v in range(G.n, cur.n)]
    return cur, attach


def _stage_anchor(G: Graph, v: int) -> int:
    for w in G.adj[v]:
        if w < v:
            return w
    raise AssertionError("new vertex without an older neighbour")


@dataclass(frozen=True)
class Converged:
    limit_stage: int

    def __str__(self) -> str:
        return f"converged({self.limit_stage})"


@dataclass(frozen=True)
class BudgetExhausted:
    max_stages: int
    max_vertices: int
    stages_computed: int

    def __str__(self) -> str:
        return f"budget-exhausted({self.max_stages},{self.max_vertices})"


@dataclass(frozen=True)
class StageTrace:
    pattern: TwoRootedGraph
    stages: tuple[Graph, ...]
    parent_maps: tuple[tuple[int, ...], ...]  # per stage j >= 1: attachment vertex of each new vertex
    status: Union[Converged, BudgetExhausted]

    @property
    def converged(self) -> bool:
        return isinstance(self.status, Converged)

    @property
    def final(self) -> Graph:
        return self.stages[-1]


def stage_sequence(
    pattern: TwoRootedGraph,
    max_stages: int = DEFAULT_MAX_STAGES,
    max_vertices: int = DEFAULT_MAX_VERTICES,
) -> StageTrace:
    """Stage graphs of ``pattern`` until convergence or budget.

    Connected patterns iterate :func:`hst_extension`; disconnected ones fall
    back to :func:`greedy_stage`, since the closed-form step is only valid for
    connected patterns.
    """
    if max_stages < 0:
        raise ValueError("max_stages must be non-negative")
    step = hst_extension if pattern.graph.is_connected() else (lambda G, p: greedy_stage(G, p))
    stages = [pattern.graph]
    maps: list[tuple[int, ...]] = []
    G = pattern.graph
    while True:
        G2, attach = step(G, pattern)
        if not attach:
            if has_simplicial_copy(G, pattern):
                raise AssertionError("stage step added nothing but a simplicial copy remains")
            status = Converged(len(stages) - 1)
            break
        if len(stages) - 1 >= max_stages or G2.n > max_vertices:
            status = BudgetExhausted(max_stages, max_vertices, len(stages) - 1)
            break
        stages.append(G2)
        maps.append(tuple(attach))
        G = G2
    return StageTrace(pattern, tuple(stages), tuple(maps), status)


@dataclass(frozen=True)
class FinitelyExtendable:
    limit: Graph
    trace: StageTrace

    def __str__(self) -> str:
        return "finitely-extendable"


@dataclass(frozen=True)
class PEInherentUpToBudget:
    trace: StageTrace
    budget: int

    def __str__(self) -> str:
        return f"PE-inherent-up-to-budget({self.budget})"


def classify(
    pattern: TwoRootedGraph,
    max_stages: int = DEFAULT_MAX_STAGES,
    max_vertices: int = DEFAULT_MAX_VERTICES,
) -> Union[FinitelyExtendable, PEInherentUpToBudget]:
    if not pattern.graph.is_connected():
        warnings.warn("pattern is disconnected; uniqueness of the limit graph is not established", stacklevel=2)
    trace = stage_sequence(pattern, max_stages, max_vertices)
    if trace.converged:
        return FinitelyExtendable(trace.final, trace)
    return PEInherentUpToBudget(trace, max_stages)


def is_pe_of(G: Graph, G_next: Graph, pattern: TwoRootedGraph) -> bool:
    """Is ``G_next`` isomorphic to a minimal PE of ``G`` for some simplicial copy?"""
    if not G.n < G_next.n <= G.n + 2 or G_next.m - G.m != G_next.n - G.n:
        return False
    seen: list[Graph] = []
    for img in _simplicial_images(G, pattern):
        for cand in enumerate_minimal_pes(G, CopyEmbedding(pattern, G, img)):
            if cand.n != G_next.n or any(is_isomorphic(cand, x) for x in seen):
                continue
            if is_isomorphic(cand, G_next):
                return True
            seen.append(cand)
    return False


def verify_pe_sequence(graphs: Sequence[Graph], pattern: TwoRootedGraph) -> tuple[bool, Optional[int]]:
    """Check a (possibly truncated) PE-sequence; returns ``(ok, index of first bad graph)``."""
    if not graphs:
        raise ValueError("empty sequence")
    if not is_isomorphic(graphs[0], pattern.graph):
        return False, 0
    for i in range(len(graphs) - 1):
        if not is_pe_of(graphs[i], graphs[i + 1], pattern):
            return False, i + 1
    return True, None


def pe_sequence_branches(pattern: TwoRootedGraph, max_length: int = 12) -> list[list[Graph]]:
    """Every PE-sequence up to isomorphism of its terms, explored breadth-first.

    A branch ends at a graph without simplicial copies or at ``max_length`` terms.
    """
    done: list[list[Graph]] = []
    frontier = [[pattern.graph]]
    while frontier:
        nxt = []
        for seq in frontier:
            G = seq[-1]
            images = _simplicial_images(G, pattern)
            if not images or len(seq) >= max_length:
                done.append(seq)
                continue
            children: list[Graph] = []
            for img in images:
                for cand in enumerate_minimal_pes(G, CopyEmbedding(pattern, G, img)):
                    if not any(is_isomorphic(cand, c) for c in children):
                        children.append(cand)
            nxt.extend(seq + [c] for c in children)
        frontier = nxt
    return done


def write_trace(trace: StageTrace, graphs_out: TextIO, sidecar_out: TextIO) -> None:
    """One graph6 line per stage, plus one JSON line per stage with its parent map and the final status."""
    for j, G in enumerate(trace.stages):
        graphs_out.write(encode(G) + "\n")
        record = {"stage": j, "n": G.n, "attach": list(trace.parent_maps[j - 1]) if j else []}
        sidecar_out.write(json.dumps(record, sort_keys=True) + "\n")
    sidecar_out.write(json.dumps({"status": str(trace.status), "pattern": to_rg6(trace.pattern)}, sort_keys=True) + "\n")
