"""A small recursive language for naming hosts and rooted patterns on the command line.

Hosts::

    path:k  cycle:n  complete:n  kbip:a,b  empty:n  comb:p,q,r
    circ:n:d1,d2,...  named:petersen  named:prism:6  g6:<graph6>
    lex(A,B)  cart(A,B)  union(A,B)

Patterns::

    T1:p,q,r  T2:p,q  T3:p,q  T4:q  T5:q  lft:d  lft:d,adj
    rooted(A,s,t)  rg6:<graph6>:s:t  or a raw ``<graph6> s t`` line
"""

from __future__ import annotations

import re

from . import generators as gen
from .codec import Graph6Error, decode
from .graph import Graph, cartesian, disjoint_union, lexicographic
from .rooted import TwoRootedGraph, parse_rooted


class FamilyError(ValueError):
    pass


_CALL = re.compile(r"^(\w+)\((.*)\)$", re.S)


def _split_top(text: str) -> list[str]:
    parts, depth, cur = [], 0, []
    for ch in text:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
            if depth < 0:
                raise FamilyError(f"unbalanced parentheses in {text!r}")
        if ch == "," and depth == 0:
            parts.append("".join(cur).strip())
            cur = []
        else:
            cur.append(ch)
    if depth:
        raise FamilyError(f"unbalanced parentheses in {text!r}")
    parts.append("".join(cur).strip())
    return parts


def _ints(text: str, what: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",")] if text else []
    except ValueError:
        raise FamilyError(f"{what}: expected integers, got {text!r}") from None


_BASIC = {
    "path": gen.path,
    "cycle": gen.cycle,
    "complete": gen.complete,
    "kbip": gen.complete_bipartite,
    "empty": gen.empty,
}
_BINARY = {"lex": lexicographic, "cart": cartesian, "union": disjoint_union}


def parse_host(text: str) -> Graph:
    text = text.strip()
    try:
        return _host(text)
    except FamilyError:
        raise
    except (ValueError, TypeError) as exc:
        raise FamilyError(f"{text!r}: {exc}") from None


def _host(text: str) -> Graph:
    m = _CALL.match(text)
    if m:
        fn, args = m.group(1), _split_top(m.group(2))
        if fn not in _BINARY:
            raise FamilyError(f"unknown graph operation {fn!r}")
        if len(args) != 2:
            raise FamilyError(f"{fn} takes two graphs")
        return _BINARY[fn](_host(args[0]), _host(args[1]))
    kind, _, rest = text.partition(":")
    if kind in _BASIC:
        return _BASIC[kind](*_ints(rest, kind))
    if kind == "comb":
        return gen.comb(gen.CombSpec(*_ints(rest, kind)))
    if kind == "circ":
        n, _, res = rest.partition(":")
        return gen.circulant(*_ints(n, kind), _ints(res, kind))
    if kind == "named":
        name, _, args = rest.partition(":")
        return gen.named(name, *_ints(args, kind))
    if kind == "g6":
        try:
            return decode(rest)
        except Graph6Error as exc:
            raise FamilyError(str(exc)) from None
    raise FamilyError(f"unknown graph family {kind!r}")


def parse_pattern(text: str) -> TwoRootedGraph:
    text = text.strip()
    try:
        p = _pattern(text)
    except FamilyError:
        raise
    except (ValueError, TypeError) as exc:
        raise FamilyError(f"{text!r}: {exc}") from None
    return p if p.name else TwoRootedGraph(p.graph, p.s, p.t, text)


def _pattern(text: str) -> TwoRootedGraph:
    if len(text.split()) == 3:
        return parse_rooted(text)
    m = _CALL.match(text)
    if m:
        if m.group(1) != "rooted":
            raise FamilyError(f"unknown pattern operation {m.group(1)!r}")
        args = _split_top(m.group(2))
        if len(args) != 3:
            raise FamilyError("rooted takes a graph and two root indices")
        s, t = _ints(",".join(args[1:]), "rooted")
        return TwoRootedGraph(_host(args[0]), s, t)
    kind, _, rest = text.partition(":")
    if kind in ("T1", "T2", "T3", "T4", "T5"):
        return gen.rooted_family(kind, *_ints(rest, kind))
    if kind == "lft":
        depth, _, flag = rest.partition(",")
        if flag not in ("", "adj"):
            raise FamilyError("lft takes a depth and an optional ',adj'")
        return gen.leaf_extended_full_tree(*_ints(depth, kind), adjacent=flag == "adj")
    if kind == "rg6":
        fields = rest.split(":")
        if len(fields) != 3:
            raise FamilyError("rg6 pattern needs <graph6>:s:t")
        return parse_rooted(" ".join(fields))
    raise FamilyError(f"unknown pattern family {kind!r}")
