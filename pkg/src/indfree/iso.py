"""Exact isomorphism machinery for small graphs.

Three entry points: canonical_form (an isomorphism-invariant relabeling,
equal iff isomorphic), is_isomorphic, and contains_induced (the induced
subgraph oracle returning an explicit embedding).

canonical_form searches vertex orderings that respect a stable coloring
and keeps the lexicographically least adjacency code. The coloring is
iterated neighbor-color refinement, which on its own does not decide
isomorphism; the ordering search closes the gap, so the result is exact.
Orders in this package stay at or below roughly 14, where this is quick.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graphs import Graph


@dataclass(frozen=True)
class Embedding:
    """Injective map from pattern vertices to host vertices.

    map[i] is the host vertex carrying pattern vertex i; every pattern
    pair (i, j) is an edge exactly when (map[i], map[j]) is.
    """

    map: tuple[int, ...]


def wl_colors(g: Graph) -> tuple[int, ...]:
    """Stable vertex coloring, invariant under relabeling.

    Starts from degrees and repeatedly splits classes by the multiset of
    neighbor colors until no class splits. Colors are ranks 0..c-1 in a
    label-independent order, so isomorphic graphs get matching colorings.
    """
    n = g.order
    colors = list(g.degrees())
    rank = {c: i for i, c in enumerate(sorted(set(colors)))}
    colors = [rank[c] for c in colors]
    while True:
        keys = [
            (colors[v], tuple(sorted(colors[u] for u in g.neighbors(v))))
            for v in range(n)
        ]
        krank = {k: i for i, k in enumerate(sorted(set(keys)))}
        new = [krank[k] for k in keys]
        if len(krank) == len(set(colors)):
            return tuple(new)
        colors = new


_INF = 1 << 70


def canonical_form(g: Graph) -> Graph:
    """Canonical representative: equal for two graphs iff they are isomorphic.

    Branch and bound over orderings consistent with wl_colors (cells in
    color order, one cell at a time). The code of an ordering is the
    per-vertex tuple of adjacency bits toward earlier vertices; the least
    code over all explored orderings defines the output graph. Placing a
    vertex twin to one already tried at the same slot cannot change the
    best completion, so twins are skipped; that keeps cliques, stars and
    near-complete graphs linear instead of factorial.
    """
    n = g.order
    if n <= 1:
        return g
    colors = wl_colors(g)
    ncells = max(colors) + 1
    cells: list[list[int]] = [[] for _ in range(ncells)]
    for v, c in enumerate(colors):
        cells[c].append(v)
    slots: list[list[int]] = []
    for cell in cells:
        slots.extend([cell] * len(cell))

    rows = g.rows
    best = [_INF] * n
    placed: list[int] = []

    def descend(i: int, used: int) -> None:
        if i == n:
            return
        seen_open: set[int] = set()
        seen_closed: set[int] = set()
        for v in slots[i]:
            if used >> v & 1:
                continue
            ro = rows[v]
            rc = ro | (1 << v)
            if ro in seen_open or rc in seen_closed:
                continue
            seen_open.add(ro)
            seen_closed.add(rc)
            code = 0
            for u in placed:
                code = code << 1 | (ro >> u & 1)
            if code > best[i]:
                continue
            if code < best[i]:
                best[i] = code
                for j in range(i + 1, n):
                    best[j] = _INF
            placed.append(v)
            descend(i + 1, used | (1 << v))
            placed.pop()

    descend(0, 0)

    out = [0] * n
    for i in range(n):
        code = best[i]
        for j in range(i):
            if code >> (i - 1 - j) & 1:
                out[i] |= 1 << j
                out[j] |= 1 << i
    return Graph(n, tuple(out))


def is_isomorphic(a: Graph, b: Graph) -> bool:
    if a.order != b.order or a.edge_count != b.edge_count:
        return False
    if sorted(a.degrees()) != sorted(b.degrees()):
        return False
    return canonical_form(a) == canonical_form(b)


def contains_induced(host: Graph, pattern: Graph) -> Embedding | None:
    """Find an induced copy of pattern in host, or report there is none.

    Backtracking over pattern vertices in descending degree order. The
    candidate set for each slot is kept as a bitmask and narrowed by one
    row operation per already-placed vertex: intersect with the placed
    vertex's neighborhood when the pattern demands an edge, with its
    non-neighborhood otherwise. Induced means non-edges constrain too.
    """
    np_, nh = pattern.order, host.order
    if np_ > nh:
        return None
    if np_ == 0:
        return Embedding(())
    porder = sorted(range(np_), key=lambda v: -pattern.rows[v].bit_count())
    prows = pattern.rows
    hrows = host.rows
    pdeg = pattern.degrees()
    hdeg = host.degrees()
    full = (1 << nh) - 1
    assign = [0] * np_

    def place(i: int, used: int) -> bool:
        if i == np_:
            return True
        pv = porder[i]
        cand = full & ~used
        for j in range(i):
            if prows[pv] >> porder[j] & 1:
                cand &= hrows[assign[j]]
            else:
                cand &= ~hrows[assign[j]]
        need = pdeg[pv]
        while cand:
            lsb = cand & -cand
            cand ^= lsb
            hv = lsb.bit_length() - 1
            if hdeg[hv] < need:
                continue
            assign[i] = hv
            if place(i + 1, used | lsb):
                return True
        return False

    if not place(0, 0):
        return None
    out = [0] * np_
    for i, pv in enumerate(porder):
        out[pv] = assign[i]
    return Embedding(tuple(out))
