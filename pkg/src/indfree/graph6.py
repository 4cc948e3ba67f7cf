"""graph6 text interchange, short form only (orders 0 to 62).

Layout per the published format: one byte n+63, then the upper-triangle
adjacency bits in column order (0-1, 0-2, 1-2, 0-3, ...) packed six per
byte, most significant first, each byte offset by 63. Decoding is strict:
bad length, bytes outside the printable range, nonzero padding and the
long-form marker all raise ParseError carrying the byte offset.
"""

from __future__ import annotations

from .errors import CapacityError, ParseError
from .graphs import Graph

MAX_GRAPH6_ORDER = 62


def encode_graph6(g: Graph) -> str:
    if g.order > MAX_GRAPH6_ORDER:
        raise CapacityError(
            f"graph6 short form caps at {MAX_GRAPH6_ORDER} vertices, got {g.order}"
        )
    n = g.order
    out = [chr(n + 63)]
    acc = 0
    nbits = 0
    for v in range(1, n):
        for u in range(v):
            acc = acc << 1 | (g.rows[u] >> v & 1)
            nbits += 1
            if nbits == 6:
                out.append(chr(acc + 63))
                acc = 0
                nbits = 0
    if nbits:
        out.append(chr((acc << (6 - nbits)) + 63))
    return "".join(out)


def decode_graph6(text: str) -> Graph:
    if not text:
        raise ParseError("empty graph6 string", 0)
    head = ord(text[0])
    if head == 126:
        raise ParseError("graph6 long form (order > 62) not supported", 0)
    if not 63 <= head < 126:
        raise ParseError(f"invalid graph6 order byte {text[0]!r}", 0)
    n = head - 63
    need = (n * (n - 1) // 2 + 5) // 6
    if len(text) != 1 + need:
        raise ParseError(
            f"graph6 string for order {n} needs {1 + need} bytes, got {len(text)}",
            min(len(text), 1 + need),
        )
    rows = [0] * n
    acc = 0
    have = 0
    pos = 1
    for v in range(1, n):
        for u in range(v):
            if have == 0:
                b = ord(text[pos])
                if not 63 <= b <= 126:
                    raise ParseError(f"invalid graph6 byte {text[pos]!r}", pos)
                acc = b - 63
                have = 6
                pos += 1
            have -= 1
            if acc >> have & 1:
                rows[u] |= 1 << v
                rows[v] |= 1 << u
    if have and acc & ((1 << have) - 1):
        raise ParseError("nonzero padding bits", pos - 1)
    return Graph(n, tuple(rows))


def encode_graph6_list(graphs) -> str:
    """Newline-delimited graph6, one graph per line, trailing newline."""
    return "".join(encode_graph6(g) + "\n" for g in graphs)


def decode_graph6_list(text: str) -> list[Graph]:
    """Parse newline-delimited graph6; blank lines are skipped.

    ParseError offsets are rebased to the whole input, not the line.
    """
    out = []
    start = 0
    for line in text.split("\n"):
        stripped = line.strip()
        if stripped:
            try:
                out.append(decode_graph6(stripped))
            except ParseError as e:
                raise ParseError(e.message, start + line.index(stripped) + e.offset)
        start += len(line) + 1
    return out
