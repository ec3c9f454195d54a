"""graph6 and arc-list text formats."""

from __future__ import annotations

from typing import Iterable, TextIO

from .graph import Graph, GraphError, OrientedGraph


def _encode_n(n: int) -> str:
    if n < 63:
        return chr(n + 63)
    if n < 258048:
        return "~" + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))
    raise GraphError("graph too large for graph6")


def to_graph6(g: Graph) -> str:
    bits = []
    for j in range(1, g.n):
        for i in range(j):
            bits.append(1 if (i, j) in g.edges else 0)
    while len(bits) % 6:
        bits.append(0)
    body = []
    for k in range(0, len(bits), 6):
        val = 0
        for b in bits[k : k + 6]:
            val = (val << 1) | b
        body.append(chr(val + 63))
    return _encode_n(g.n) + "".join(body)


def from_graph6(line: str) -> Graph:
    s = line.strip()
    if s.startswith(">>graph6<<"):
        s = s[10:]
    if not s:
        raise GraphError("empty graph6 string")
    for pos, ch in enumerate(s):
        if not (63 <= ord(ch) <= 126):
            raise GraphError(f"invalid graph6 character {ch!r} at position {pos}")
    if s[0] == "~":
        if len(s) < 4 or s[1] == "~":
            raise GraphError("unsupported graph6 size header at position 0")
        n = 0
        for ch in s[1:4]:
            n = (n << 6) | (ord(ch) - 63)
        data = s[4:]
    else:
        n = ord(s[0]) - 63
        data = s[1:]
    need = (n * (n - 1) // 2 + 5) // 6
    if len(data) != need:
        raise GraphError(f"graph6 body has {len(data)} characters, expected {need}")
    bits = []
    for ch in data:
        val = ord(ch) - 63
        bits.extend((val >> s) & 1 for s in range(5, -1, -1))
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            if bits[k]:
                edges.append((i, j))
            k += 1
    return Graph.from_edges(n, edges)


def read_graph6(lines: Iterable[str]) -> list[Graph]:
    return [from_graph6(line) for line in lines if line.strip()]


def write_graph6(graphs: Iterable[Graph], fh: TextIO) -> None:
    for g in graphs:
        fh.write(to_graph6(g) + "\n")


def to_arc_list(og: OrientedGraph) -> str:
    lines = [f"{og.n} {og.m}"]
    lines.extend(f"{u} {v}" for u, v in og.sorted_arcs)
    return "\n".join(lines) + "\n"


def from_arc_list(text: str) -> OrientedGraph:
    """Parse ``n m`` followed by ``m`` lines ``i j`` (arc i -> j)."""
    rows = [(k + 1, line.split()) for k, line in enumerate(text.splitlines())]
    rows = [(k, r) for k, r in rows if r and not r[0].startswith("#")]
    if not rows:
        raise GraphError("empty arc list")

    def ints(lineno, parts, expect):
        if len(parts) != expect:
            raise GraphError(f"line {lineno}: expected {expect} integers, got {len(parts)}")
        try:
            return [int(p) for p in parts]
        except ValueError as exc:
            raise GraphError(f"line {lineno}: {exc}") from None

    n, m = ints(*rows[0], 2)
    arcs = [tuple(ints(k, r, 2)) for k, r in rows[1:]]
    if len(arcs) != m:
        raise GraphError(f"header announces {m} arcs, found {len(arcs)}")
    for lineno_arc, (u, v) in zip((k for k, _ in rows[1:]), arcs):
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"line {lineno_arc}: vertex out of range")
    return OrientedGraph.from_arcs(n, arcs)
