"""Text-to-graph resolution for the CLI.

A specifier is tried as a catalog name first, then as an edge-list
literal "n;u-v,u-w,..." when it contains a semicolon, and finally as
graph6. Catalog names cover the named small graphs and the parameterized
families: complete:k, empty:k, path:k (k vertices), cycle:k, star:k
(k leaves), matching:k (k edges), claw, paw, diamond, H:p,q,r, S:p,r,
Q:p,r,x,y.
"""

from __future__ import annotations

from .constructions import HParams, QParams, SplitParams, h_graph, q_graph, s_graph
from .errors import ParseError
from .graph6 import decode_graph6
from .graphs import (
    Graph,
    complete_graph,
    cycle_graph,
    empty_graph,
    make_graph,
    matching_graph,
    path_graph,
    star_graph,
)

_FIXED = {
    "claw": lambda: star_graph(3),
    "paw": lambda: make_graph(4, [(0, 1), (0, 2), (1, 2), (0, 3)]),
    "diamond": lambda: make_graph(4, [(0, 1), (0, 2), (1, 2), (0, 3), (1, 3)]),
}

_PARAMETRIC = {
    "complete": (1, lambda k: complete_graph(k)),
    "empty": (1, lambda k: empty_graph(k)),
    "path": (1, lambda k: path_graph(k)),
    "cycle": (1, lambda k: cycle_graph(k)),
    "star": (1, lambda k: star_graph(k)),
    "matching": (1, lambda k: matching_graph(k)),
    "h": (3, lambda p, q, r: h_graph(HParams(p, q, r))),
    "s": (2, lambda p, r: s_graph(SplitParams(p, r))),
    "q": (4, lambda p, r, x, y: q_graph(QParams(p, r, x, y))),
}


def _parse_named(text: str) -> Graph | None:
    low = text.strip().lower()
    if low in _FIXED:
        return _FIXED[low]()
    head, sep, tail = low.partition(":")
    if not sep or head not in _PARAMETRIC:
        return None
    arity, build = _PARAMETRIC[head]
    parts = tail.split(",")
    if len(parts) != arity:
        raise ParseError(
            f"{head!r} takes {arity} parameter(s), got {len(parts)}", len(head) + 1
        )
    args = []
    for part in parts:
        if not part.strip().lstrip("-").isdigit():
            raise ParseError(f"bad integer {part!r} in {text!r}", text.find(part))
        args.append(int(part))
    return build(*args)


def parse_edge_list(text: str) -> Graph:
    head, _, tail = text.partition(";")
    if not head.strip().isdigit():
        raise ParseError(f"edge list needs a leading vertex count, got {head!r}", 0)
    n = int(head)
    edges = []
    offset = len(head) + 1
    for token in tail.split(",") if tail.strip() else []:
        u, sep, v = token.partition("-")
        if not sep or not u.strip().isdigit() or not v.strip().isdigit():
            raise ParseError(f"bad edge token {token.strip()!r}", offset)
        edges.append((int(u), int(v)))
        offset += len(token) + 1
    return make_graph(n, edges)


def parse_graph(text: str) -> Graph:
    """Resolve a specifier: catalog name, then edge list, then graph6."""
    named = _parse_named(text)
    if named is not None:
        return named
    if ";" in text:
        return parse_edge_list(text)
    try:
        return decode_graph6(text.strip())
    except ParseError as e:
        raise ParseError(
            f"{text!r} is not a catalog name, an edge list, or graph6 ({e.message})",
            e.offset,
        )
