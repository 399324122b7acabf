"""Constructors for the graph families used throughout the package.

Comb numbering: spine ``a_1..a_{p+q+r}`` is ``0..p+q+r-1``; tooth ``b_{p+i}``
is ``p+q+r+i-1`` and hangs off ``a_{p+i}``.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graph import Graph, cartesian, lexicographic
from .iso import automorphism_orbits
from .rooted import TwoRootedGraph


def path(k: int) -> Graph:
    if k < 1:
        raise ValueError("path needs at least one vertex")
    return Graph(k, [(i, i + 1) for i in range(k - 1)])


def cycle(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycle needs at least three vertices")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n: int) -> Graph:
    if n < 1:
        raise ValueError("complete graph needs at least one vertex")
    return Graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def complete_bipartite(a: int, b: int) -> Graph:
    if a < 1 or b < 1:
        raise ValueError("both sides of a complete bipartite graph must be non-empty")
    return Graph(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def empty(n: int) -> Graph:
    if n < 0:
        raise ValueError("negative vertex count")
    return Graph(n)


def basic(kind: str, *sizes: int) -> Graph:
    makers = {
        "path": path,
        "cycle": cycle,
        "complete": complete,
        "complete_bipartite": complete_bipartite,
        "empty": empty,
    }
    if kind not in makers:
        raise ValueError(f"unknown basic family {kind!r}")
    return makers[kind](*sizes)


@dataclass(frozen=True)
class CombSpec:
    p: int
    q: int
    r: int

    def __post_init__(self):
        if min(self.p, self.q, self.r) < 0 or self.p + self.q + self.r == 0:
            raise ValueError(f"invalid comb parameters {self.p, self.q, self.r}")

    def spine(self, i: int) -> int:
        """Index of ``a_i`` (1-based as in the usual notation)."""
        return i - 1

    def tooth(self, i: int) -> int:
        """Index of ``b_i`` for ``p < i <= p + q``."""
        if not self.p < i <= self.p + self.q:
            raise ValueError(f"no tooth b_{i} in F{self.p, self.q, self.r}")
        return self.p + self.q + self.r + (i - self.p) - 1


def comb(spec: CombSpec) -> Graph:
    p, q, r = spec.p, spec.q, spec.r
    length = p + q + r
    edges = [(i, i + 1) for i in range(length - 1)]
    edges += [(spec.spine(p + i), spec.tooth(p + i)) for i in range(1, q + 1)]
    return Graph(length + q, edges)


def _rake_graph(q: int, split: bool) -> tuple[Graph, int, int]:
    """T2(2, q) with every tooth edge subdivided; optionally a pendant on inner subdivisions."""
    spec = CombSpec(2, q, 2)
    base = comb(spec)
    first_mid = base.n
    edges = [e for e in base.edges() if not (e[1] >= q + 4)]
    for j, i in enumerate(range(3, q + 3)):
        mid = first_mid + j
        edges += [(spec.spine(i), mid), (mid, spec.tooth(i))]
    n = first_mid + q
    if split:
        for i in range(4, q + 2):
            edges.append((first_mid + i - 3, n))
            n += 1
    return Graph(n, edges), spec.spine(1), spec.spine(q + 3)


def rooted_family(kind: str, *params: int) -> TwoRootedGraph:
    """Rooted families T1..T5.

    T1(p,q,r) = (F(p,q,r), a_1, a_p); T2(p,q) = (F(p,q,p), a_1, a_{p+q+1});
    T3(p,q) = (F(p,q,p+1), a_1, a_{p+q+1}); T4(q) rake; T5(q) split rake.
    """
    name = f"{kind}({','.join(map(str, params))})"
    if kind == "T1":
        p, q, r = params
        if p < 1 or q < 0 or r < 0:
            raise ValueError(f"{name}: needs p >= 1, q, r >= 0")
        spec = CombSpec(p, q, r)
        return TwoRootedGraph(comb(spec), spec.spine(1), spec.spine(p), name)
    if kind == "T2":
        p, q = params
        if p < 1 or q < 1:
            raise ValueError(f"{name}: needs p, q >= 1")
        spec = CombSpec(p, q, p)
        return TwoRootedGraph(comb(spec), spec.spine(1), spec.spine(p + q + 1), name)
    if kind == "T3":
        p, q = params
        if p < 1 or q < 0:
            raise ValueError(f"{name}: needs p >= 1, q >= 0")
        spec = CombSpec(p, q, p + 1)
        return TwoRootedGraph(comb(spec), spec.spine(1), spec.spine(p + q + 1), name)
    if kind in ("T4", "T5"):
        (q,) = params
        lo = 2 if kind == "T4" else 3
        if q < lo:
            raise ValueError(f"{name}: needs q >= {lo}")
        g, s, t = _rake_graph(q, split=kind == "T5")
        return TwoRootedGraph(g, s, t, name)
    raise ValueError(f"unknown rooted family {kind!r}")


def leaf_extended_full_tree(d: int, adjacent: bool = False) -> TwoRootedGraph:
    """Full depth-``d`` tree (degree-3 root, internal vertices of degree 3) with every leaf extended.

    ``s`` is the smallest degree-1 vertex and ``t`` the smallest degree-2
    vertex that is (``adjacent=True``) or is not adjacent to it.
    """
    if d < 2:
        raise ValueError("depth must be at least 2")
    edges = []
    level = [0]
    n = 1
    for depth in range(d):
        nxt = []
        for v in level:
            for _ in range(3 if depth == 0 else 2):
                edges.append((v, n))
                nxt.append(n)
                n += 1
        level = nxt
    for v in level:
        edges.append((v, n))
        n += 1
    g = Graph(n, edges)
    deg = g.degrees()
    s = min(v for v in range(n) if deg[v] == 1)
    t = min(v for v in range(n) if deg[v] == 2 and g.has_edge(s, v) == adjacent)
    return TwoRootedGraph(g, s, t, f"LFT({d}{',adj' if adjacent else ''})")


def circulant(n: int, S) -> Graph:
    if n < 1:
        raise ValueError("circulant needs n >= 1")
    S = sorted(set(S))
    for d in S:
        if not 1 <= d <= n // 2:
            raise ValueError(f"residue {d} outside [1, {n // 2}]")
    return Graph(n, {tuple(sorted((i, (i + d) % n))) for i in range(n) for d in S})


def lcf(n: int, shifts: list[int], repeats: int) -> Graph:
    """Hamiltonian cycle ``0..n-1`` plus LCF chords."""
    edges = {tuple(sorted((i, (i + 1) % n))) for i in range(n)}
    seq = shifts * repeats
    for i in range(n):
        edges.add(tuple(sorted((i, (i + seq[i]) % n))))
    return Graph(n, edges)


# Named cubic graphs.  Petersen: outer 5-cycle 0..4, spokes i~i+5, inner
# pentagram.  The rest are standard LCF codes (Heawood [5,-5]^7,
# McGee [12,7,-7]^8, Tutte-Coxeter [-13,-9,7,-7,9,13]^5,
# dodecahedron [10,7,4,-4,-7,10,-4,7,-7,4]^2); tests re-check order,
# regularity and girth rather than trusting these constants.
_PETERSEN_EDGES = [(i, (i + 1) % 5) for i in range(5)] + [(i, i + 5) for i in range(5)] + [
    (5 + i, 5 + (i + 2) % 5) for i in range(5)
]
_LCF = {
    "heawood": (14, [5, -5], 7),
    "mcgee": (24, [12, 7, -7], 8),
    "tutte_coxeter": (30, [-13, -9, 7, -7, 9, 13], 5),
    "dodecahedron": (20, [10, 7, 4, -4, -7, 10, -4, 7, -7, 4], 2),
}


def prism(n: int) -> Graph:
    if n < 3:
        raise ValueError("prism needs n >= 3")
    return cartesian(cycle(n), path(2))


def moebius_ladder(n: int) -> Graph:
    """Cycle on ``2n`` vertices plus the ``n`` antipodal chords."""
    if n < 2:
        raise ValueError("Moebius ladder needs n >= 2")
    return circulant(2 * n, [1, n])


def named(name: str, *args: int) -> Graph:
    if name == "petersen":
        return Graph(10, _PETERSEN_EDGES)
    if name in _LCF:
        return lcf(*_LCF[name])
    if name == "prism":
        return prism(*args)
    if name in ("moebius_ladder", "moebius"):
        return moebius_ladder(*args)
    raise ValueError(f"unknown named graph {name!r}")


def lex_double(G: Graph) -> Graph:
    """``G o 2K1``: every vertex doubled into a pair of false twins."""
    return lexicographic(G, empty(2))


def rooted_path(length: int, s: int, t: int) -> TwoRootedGraph:
    """Path ``(v_0..v_length)`` rooted at ``v_s``, ``v_t``."""
    return TwoRootedGraph(path(length + 1), s, t, f"P({length};v{s},v{t})")


def orbit_root_pairs(G: Graph) -> list[tuple[int, int]]:
    """One root pair per equivalence class: unordered orbit pairs, with s == t split off."""
    blocks = automorphism_orbits(G)
    pairs = []
    for i, A in enumerate(blocks):
        pairs.append((A[0], A[0]))
        if len(A) > 1:
            pairs.append((A[0], A[1]))
        for B in blocks[i + 1:]:
            pairs.append((A[0], B[0]))
    return pairs
