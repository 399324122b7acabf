"""Two-rooted graphs, their copies in host graphs, extensions and avoidability."""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterator, Optional, Sequence

from .codec import decode, encode
from .graph import Graph, bits, component_mask, to_mask
from .iso import automorphism_orbits, find_isomorphism


@dataclass(frozen=True)
class TwoRootedGraph:
    graph: Graph
    s: int
    t: int
    name: str = field(default="", compare=False)

    def __post_init__(self):
        n = self.graph.n
        if not (0 <= self.s < n and 0 <= self.t < n):
            raise ValueError(f"roots ({self.s}, {self.t}) out of range for n={n}")

    @property
    def roots(self) -> tuple[int, int]:
        return (self.s, self.t)

    def swapped(self) -> "TwoRootedGraph":
        return TwoRootedGraph(self.graph, self.t, self.s, self.name)

    def normalized(self) -> "TwoRootedGraph":
        """Root order with ``d(s) <= d(t)``."""
        if self.graph.degree(self.s) <= self.graph.degree(self.t):
            return self
        return self.swapped()

    def __str__(self) -> str:
        return self.name or to_rg6(self)


def to_rg6(p: TwoRootedGraph) -> str:
    return f"{encode(p.graph)} {p.s} {p.t}"


def parse_rooted(line: str) -> TwoRootedGraph:
    """Parse an rg6 line ``<graph6> <s> <t>``."""
    parts = line.split()
    if len(parts) != 3:
        raise ValueError(f"rg6 line needs 3 fields, got {len(parts)}: {line!r}")
    g = decode(parts[0])
    try:
        s, t = int(parts[1]), int(parts[2])
    except ValueError:
        raise ValueError(f"root indices must be integers: {line!r}") from None
    return TwoRootedGraph(g, s, t)


@dataclass(frozen=True)
class CopyEmbedding:
    """An induced, root-preserving embedding; ``image[i]`` is the host vertex of pattern vertex ``i``."""

    pattern: TwoRootedGraph
    host: Graph
    image: tuple[int, ...]

    @property
    def s(self) -> int:
        return self.image[self.pattern.s]

    @property
    def t(self) -> int:
        return self.image[self.pattern.t]

    @property
    def vertices(self) -> frozenset[int]:
        return frozenset(self.image)

    @property
    def key(self) -> tuple[tuple[int, ...], int, int]:
        return (tuple(sorted(self.image)), self.s, self.t)


@dataclass(frozen=True)
class Extension:
    copy: CopyEmbedding
    s_prime: int
    t_prime: int


# -- embedding search --------------------------------------------------------


def _search_order(P: Graph, start: int, second: int) -> list[int]:
    order: list[int] = []
    seen: set[int] = set()
    for root in [start, second] + list(range(P.n)):
        if root in seen:
            continue
        seen.add(root)
        queue = [root]
        while queue:
            # most back-connections first keeps the candidate sets small
            queue.sort(key=lambda v: (-sum(1 for w in P.adj[v] if w in seen), -P.degree(v), v))
            v = queue.pop(0)
            order.append(v)
            for w in P.adj[v]:
                if w not in seen:
                    seen.add(w)
                    queue.append(w)
    return order


class _Matcher:
    """Backtracking enumerator of induced embeddings of ``P`` into ``host``."""

    def __init__(self, host: Graph, P: Graph, start: int = 0, second: int = 0):
        self.host = host
        self.k = P.n
        self.order = _search_order(P, start, second) if P.n else []
        pos = {v: i for i, v in enumerate(self.order)}
        self.plan = []
        for i, v in enumerate(self.order):
            back_adj = [pos[w] for w in P.adj[v] if pos[w] < i]
            back_non = [j for j in range(i) if j not in back_adj]
            self.plan.append((back_adj, back_non))
        full = host.all_mask
        self.full = full
        self.masks = host.masks
        self.nonmasks = [full & ~m for m in host.masks]
        by_deg: dict[int, int] = {}
        hdeg = host.degrees()
        for d in set(P.degrees()):
            by_deg[d] = to_mask(v for v in range(host.n) if hdeg[v] >= d)
        self.degok = [by_deg[P.degree(v)] for v in self.order]

    def embeddings(self, first: Optional[int] = None, within: Optional[int] = None) -> Iterator[tuple[int, ...]]:
        """Yield images indexed by pattern vertex.

        ``first`` restricts the image of the first vertex in search order;
        ``within`` restricts all images to a vertex mask.
        """
        k = self.k
        if k == 0:
            yield ()
            return
        if within is None:
            within = self.full
        masks, nonmasks, plan, degok = self.masks, self.nonmasks, self.plan, self.degok
        img = [0] * k
        cands = [0] * k
        c0 = within & degok[0]
        if first is not None:
            c0 &= 1 << first
        cands[0] = c0
        used = 0
        order = self.order
        i = 0
        while i >= 0:
            c = cands[i]
            if not c:
                i -= 1
                if i >= 0:
                    used ^= 1 << img[i]
                continue
            low = c & -c
            cands[i] = c ^ low
            img[i] = low.bit_length() - 1
            if i == k - 1:
                out = [0] * k
                for j, v in enumerate(order):
                    out[v] = img[j]
                yield tuple(out)
                continue
            used |= low
            i += 1
            back_adj, back_non = plan[i]
            if back_adj:
                c = masks[img[back_adj[0]]]
                for j in back_adj[1:]:
                    c &= masks[img[j]]
            else:
                c = within
            for j in back_non:
                c &= nonmasks[img[j]]
            cands[i] = c & within & degok[i] & ~used


def has_induced_copy(host: Graph, H: Graph, within: Optional[int] = None) -> bool:
    for _ in _Matcher(host, H).embeddings(within=within):
        return True
    return False


def find_induced_copy(host: Graph, H: Graph, within: Optional[int] = None) -> Optional[tuple[int, ...]]:
    for img in _Matcher(host, H).embeddings(within=within):
        return img
    return None


def copy_images(host: Graph, pattern: TwoRootedGraph, within: Optional[int] = None) -> list[tuple[int, ...]]:
    """One image tuple per distinct copy, in canonical order."""
    matcher = _Matcher(host, pattern.graph, pattern.s, pattern.t)
    s, t = pattern.s, pattern.t
    seen: dict[tuple[int, int, int], tuple[int, ...]] = {}
    for img in matcher.embeddings(within=within):
        key = (to_mask(img), img[s], img[t])
        if key not in seen:
            seen[key] = img
    return sorted(seen.values(), key=lambda img: (sorted(img), img[s], img[t]))


def enumerate_copies(host: Graph, pattern: TwoRootedGraph) -> list[CopyEmbedding]:
    return [CopyEmbedding(pattern, host, img) for img in copy_images(host, pattern)]


# -- extensions and closability ------------------------------------------------


class _CopyView:
    """Bitmask facts about one copy in one host, shared by the extension/closing logic."""

    __slots__ = ("masks", "full", "s", "t", "vmask", "closed", "s_cands", "t_cands")

    def __init__(self, host: Graph, image: Sequence[int], s: int, t: int):
        masks = host.masks
        self.masks = masks
        self.full = host.all_mask
        self.s, self.t = s, t
        vmask = to_mask(image)
        self.vmask = vmask
        nb = 0
        nb_wo_s = nb_wo_t = 0
        for v in image:
            m = masks[v]
            nb |= m
            if v != s:
                nb_wo_s |= m
            if v != t:
                nb_wo_t |= m
        self.closed = nb | vmask
        self.s_cands = masks[s] & ~vmask & ~nb_wo_s
        self.t_cands = masks[t] & ~vmask & ~nb_wo_t

    def pairs(self) -> Iterator[tuple[int, int]]:
        masks = self.masks
        if self.s == self.t:
            c = self.s_cands
            for a in bits(c):
                for b in bits(c & ~masks[a]):
                    if a != b:
                        yield a, b
        else:
            for a in bits(self.s_cands):
                for b in bits(self.t_cands & ~masks[a]):
                    yield a, b

    def outside_components(self) -> list[int]:
        rest = self.full & ~self.closed
        comps = []
        while rest:
            comp = component_mask(self.masks, rest & -rest, rest)
            comps.append(comp)
            rest &= ~comp
        return comps

    def first_unclosable(self) -> Optional[tuple[int, int]]:
        """First non-closable extension pair in (s', t') order, or None if avoidable."""
        if not self.s_cands or not self.t_cands:
            return None
        comps = None
        touch: dict[int, int] = {}
        masks = self.masks
        for a, b in self.pairs():
            if comps is None:
                comps = self.outside_components()
            for x in (a, b):
                if x not in touch:
                    tm = 0
                    for i, comp in enumerate(comps):
                        if masks[x] & comp:
                            tm |= 1 << i
                    touch[x] = tm
            if not touch[a] & touch[b]:
                return a, b
        return None

    def closing_path(self, a: int, b: int) -> Optional[list[int]]:
        allowed = (self.full & ~self.closed) | (1 << b)
        prev = {a: -1}
        frontier = [a]
        masks = self.masks
        while frontier:
            nxt = []
            for u in frontier:
                for w in bits(masks[u] & allowed):
                    if w in prev:
                        continue
                    prev[w] = u
                    if w == b:
                        path = [b]
                        while prev[path[-1]] != -1:
                            path.append(prev[path[-1]])
                        return path[::-1]
                    nxt.append(w)
            allowed &= ~to_mask(nxt)
            frontier = nxt
        return None


def _view(copy: CopyEmbedding, host: Optional[Graph] = None) -> _CopyView:
    return _CopyView(host if host is not None else copy.host, copy.image, copy.s, copy.t)


def enumerate_extensions(ext_host: Graph, copy: CopyEmbedding) -> list[Extension]:
    view = _view(copy, ext_host)
    return [Extension(copy, a, b) for a, b in sorted(view.pairs())]


def validate_extension(host: Graph, ext: Extension) -> None:
    """Raise ``AssertionError`` unless ``ext`` satisfies every extension invariant in ``host``."""
    V = set(ext.copy.image)
    a, b = ext.s_prime, ext.t_prime
    s, t = ext.copy.s, ext.copy.t
    assert a != b, "s' == t'"
    assert a not in V and b not in V, "pendant vertex inside the copy"
    assert not host.has_edge(a, b), "s't' is an edge"
    assert set(host.adj[a]) & (V | {b}) == {s}, "s' not privately attached to s"
    assert set(host.adj[b]) & (V | {a}) == {t}, "t' not privately attached to t"


def is_closable(host: Graph, ext: Extension) -> tuple[bool, Optional[list[int]]]:
    """Closable iff s' and t' are joined through vertices outside N[copy]; returns a shortest such path."""
    path = _view(ext.copy, host).closing_path(ext.s_prime, ext.t_prime)
    return path is not None, path


def validate_closing_path(host: Graph, ext: Extension, path: Sequence[int]) -> None:
    closed = set(ext.copy.image)
    for v in ext.copy.image:
        closed.update(host.adj[v])
    assert path[0] == ext.s_prime and path[-1] == ext.t_prime
    assert len(set(path)) == len(path)
    for i, u in enumerate(path):
        for j in range(i + 1, len(path)):
            assert host.has_edge(u, path[j]) == (j == i + 1), "closing path is not induced"
    assert not closed & set(path[1:-1]), "closing path touches N[copy]"


def is_simplicial(host: Graph, copy: CopyEmbedding) -> bool:
    view = _view(copy, host)
    return next(view.pairs(), None) is None


def is_avoidable(host: Graph, copy: CopyEmbedding) -> tuple[bool, Optional[Extension]]:
    """All extensions closable?  On failure also returns the first non-closable extension."""
    bad = _view(copy, host).first_unclosable()
    if bad is None:
        return True, None
    return False, Extension(copy, *bad)


# -- confinement ---------------------------------------------------------------


@dataclass(frozen=True)
class CopyVerdict:
    image: tuple[int, ...]
    avoidable: bool
    witness: Optional[tuple[int, int]] = None  # non-closable (s', t') when not avoidable


@dataclass(frozen=True)
class ConfinementReport:
    pattern: TwoRootedGraph
    host: Graph
    copy_count: int
    verdicts: tuple[CopyVerdict, ...]
    overall: bool
    host_name: str = field(default="", compare=False)

    def closing_paths(self, index: int) -> list[tuple[Extension, list[int]]]:
        """Closing paths for every extension of the ``index``-th copy (avoidable copies only)."""
        v = self.verdicts[index]
        copy = CopyEmbedding(self.pattern, self.host, v.image)
        out = []
        for ext in enumerate_extensions(self.host, copy):
            ok, path = is_closable(self.host, ext)
            if not ok:
                raise ValueError(f"copy {index} is not avoidable")
            out.append((ext, path))
        return out

    def witness_extensions(self) -> list[Extension]:
        return [
            Extension(CopyEmbedding(self.pattern, self.host, v.image), *v.witness)
            for v in self.verdicts
            if v.witness is not None
        ]


def _verdicts(host: Graph, pattern: TwoRootedGraph, images: Sequence[tuple[int, ...]]) -> list[CopyVerdict]:
    s, t = pattern.s, pattern.t
    out = []
    for img in images:
        bad = _CopyView(host, img, img[s], img[t]).first_unclosable()
        out.append(CopyVerdict(img, bad is None, bad))
    return out


def confines(host: Graph, pattern: TwoRootedGraph, workers: int = 1, host_name: str = "") -> ConfinementReport:
    """Does ``host`` contain the pattern graph but no avoidable copy?

    ``workers > 1`` splits the copies over processes; verdicts are merged in
    canonical copy order, so the report does not depend on ``workers``.
    """
    images = copy_images(host, pattern)
    if workers > 1 and len(images) > 2000:
        chunk = -(-len(images) // (workers * 4))
        parts = [images[i:i + chunk] for i in range(0, len(images), chunk)]
        with ProcessPoolExecutor(max_workers=min(workers, os.cpu_count() or 1, len(parts))) as pool:
            verdicts = [v for part in pool.map(_verdicts, [host] * len(parts), [pattern] * len(parts), parts) for v in part]
    else:
        verdicts = _verdicts(host, pattern, images)
    overall = bool(verdicts) and not any(v.avoidable for v in verdicts)
    return ConfinementReport(pattern, host, len(verdicts), tuple(verdicts), overall, host_name)


# -- structural predicates -----------------------------------------------------


def is_subcubic_two_rooted_tree(pattern: TwoRootedGraph) -> bool:
    p = pattern.normalized()
    H, s, t = p.graph, p.s, p.t
    if not H.is_tree():
        return False
    deg = H.degrees()
    is_path = H.max_degree() <= 2
    if is_path and deg[s] <= 1:
        return True
    if H.max_degree() > 3:
        return False
    if not (1 == deg[s] <= deg[t] <= 2):
        return False
    return (deg[t] == 1) == (s == t)


def equivalent(p1: TwoRootedGraph, p2: TwoRootedGraph) -> bool:
    """Same graph up to isomorphism with roots in the same automorphism orbits.

    Patterns with ``s == t`` are only equivalent to patterns with ``s == t``.
    """
    if (p1.s == p1.t) != (p2.s == p2.t):
        return False
    f = find_isomorphism(p2.graph, p1.graph)
    if f is None:
        return False
    orbit = {}
    for block in automorphism_orbits(p1.graph):
        for v in block:
            orbit[v] = block[0]
    return orbit[f[p2.s]] == orbit[p1.s] and orbit[f[p2.t]] == orbit[p1.t]
