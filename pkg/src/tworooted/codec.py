"""graph6 text encoding and DOT export."""

from __future__ import annotations

from typing import Iterable, Iterator, Literal, Optional, TextIO

from .graph import Graph

HEADER = ">>graph6<<"


class Graph6Error(ValueError):
    pass


def _encode_n(n: int) -> str:
    if n <= 62:
        return chr(n + 63)
    if n <= 258047:
        return "~" + "".join(chr(((n >> sh) & 63) + 63) for sh in (12, 6, 0))
    if n <= 68719476735:
        return "~~" + "".join(chr(((n >> sh) & 63) + 63) for sh in (30, 24, 18, 12, 6, 0))
    raise Graph6Error(f"graph too large for graph6: n={n}")


def encode(G: Graph) -> str:
    out = [_encode_n(G.n)]
    acc = nbits = 0
    for j in range(1, G.n):
        row = G.masks[j]
        for i in range(j):
            acc = (acc << 1) | (row >> i & 1)
            nbits += 1
            if nbits == 6:
                out.append(chr(acc + 63))
                acc = nbits = 0
    if nbits:
        out.append(chr((acc << (6 - nbits)) + 63))
    return "".join(out)


def decode(text: str) -> Graph:
    s = text.strip()
    if s.startswith(HEADER):
        s = s[len(HEADER):]
    if not s:
        raise Graph6Error("empty graph6 string")
    data = []
    for ch in s:
        c = ord(ch) - 63
        if not 0 <= c <= 63:
            raise Graph6Error(f"invalid graph6 character {ch!r}")
        data.append(c)
    if data[0] != 63:
        n, pos = data[0], 1
    elif len(data) >= 2 and data[1] == 63:
        if len(data) < 8:
            raise Graph6Error("truncated 8-byte size field")
        n, pos = 0, 8
        for c in data[2:8]:
            n = (n << 6) | c
    else:
        if len(data) < 4:
            raise Graph6Error("truncated 4-byte size field")
        n, pos = 0, 4
        for c in data[1:4]:
            n = (n << 6) | c
    nbits = n * (n - 1) // 2
    body = data[pos:]
    if len(body) != (nbits + 5) // 6:
        raise Graph6Error(f"expected {(nbits + 5) // 6} data bytes for n={n}, got {len(body)}")
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            if body[k // 6] >> (5 - k % 6) & 1:
                edges.append((i, j))
            k += 1
    if nbits % 6 and body[-1] & ((1 << (6 - nbits % 6)) - 1):
        raise Graph6Error("non-zero padding bits")
    return Graph(n, edges)


def read_graph6(stream: TextIO | Iterable[str]) -> Iterator[tuple[int, Graph]]:
    """Yield ``(line_number, graph)`` for each non-blank line; line numbers are 1-based."""
    for lineno, line in enumerate(stream, 1):
        if line.strip():
            try:
                yield lineno, decode(line)
            except Graph6Error as exc:
                raise Graph6Error(f"line {lineno}: {exc}") from None


def to_dot(G: Graph, roots: Optional[tuple[int, int]] = None, name: str = "G") -> str:
    lines = [f"graph {name} {{"]
    hl = set(roots) if roots else set()
    for v in range(G.n):
        if v in hl:
            label = "s=t" if roots[0] == roots[1] else ("s" if v == roots[0] else "t")
            lines.append(f'  {v} [style=filled, fillcolor=black, fontcolor=white, xlabel="{label}"];')
        else:
            lines.append(f"  {v};")
    lines.extend(f"  {u} -- {v};" for u, v in G.edges())
    lines.append("}")
    return "\n".join(lines) + "\n"


def codec(direction: Literal["encode", "decode", "dot_export"], payload, roots=None):
    if direction == "encode":
        return encode(payload)
    if direction == "decode":
        return decode(payload)
    if direction == "dot_export":
        return to_dot(payload, roots)
    raise ValueError(f"unknown codec direction {direction!r}")
