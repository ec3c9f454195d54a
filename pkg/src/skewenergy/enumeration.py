"""Canonical labelling and exhaustive generation of small trees, unicyclic and bicyclic graphs.

Generation is structure first: every connected graph of cycle rank r <= 2 is
either a "core" with minimum degree >= 2 (K_1 for trees, a cycle, or one of
the three bicyclic core shapes) or has a leaf whose removal leaves a smaller
graph of the same cycle rank.  Levels are therefore grown by attaching a
pendant vertex anywhere and deduplicating by canonical form.
"""

from __future__ import annotations

import os
from functools import lru_cache
from typing import Iterator

from .graph import Graph, GraphError, diameter, in_class_B

MAX_CANON_N = 16


def _refine(adj: list[frozenset], cells: list[list[int]]) -> list[list[int]]:
    """Equitable refinement; cell order depends only on isomorphism-invariant data."""
    while True:
        where = {}
        for idx, cell in enumerate(cells):
            for v in cell:
                where[v] = idx
        k = len(cells)
        new_cells = []
        for cell in cells:
            if len(cell) == 1:
                new_cells.append(cell)
                continue
            sig = {}
            for v in cell:
                counts = [0] * k
                for w in adj[v]:
                    counts[where[w]] += 1
                sig.setdefault(tuple(counts), []).append(v)
            for key in sorted(sig):
                new_cells.append(sig[key])
        if len(new_cells) == len(cells):
            return new_cells
        cells = new_cells


def _key_for(order: list[int], adj: list[frozenset]) -> int:
    n = len(order)
    key = 0
    for i in range(n):
        ai = adj[order[i]]
        for j in range(i + 1, n):
            key = (key << 1) | (order[j] in ai)
    return key


def canonical_labeling(g: Graph) -> tuple[int, list[int]]:
    """Return ``(key, order)``: ``order[k]`` is the vertex given label ``k``.

    Search tree of individualise-and-refine; among the discrete leaves the
    lexicographically smallest upper-triangle adjacency string wins.  Twins
    (vertices with equal neighbourhoods apart from each other) inside a cell
    are exchanged by an automorphism that fixes everything individualised so
    far, so only one of them is branched on.
    """
    if g.n > MAX_CANON_N:
        raise GraphError(f"canonical form supports n <= {MAX_CANON_N}")
    adj = [frozenset(a) for a in g.adj]
    start = _refine(adj, _degree_cells(adj))
    best: list = [None, None]

    def search(cells: list[list[int]]) -> None:
        target = next((c for c in cells if len(c) > 1), None)
        if target is None:
            order = [c[0] for c in cells]
            key = _key_for(order, adj)
            if best[0] is None or key < best[0]:
                best[0], best[1] = key, order
            return
        idx = cells.index(target)
        tried: list[int] = []
        for v in target:
            if any(adj[v] - {w} == adj[w] - {v} for w in tried):
                continue
            tried.append(v)
            rest = [w for w in target if w != v]
            search(_refine(adj, cells[:idx] + [[v], rest] + cells[idx + 1 :]))

    search(start)
    return best[0], best[1]


def _degree_cells(adj: list[frozenset]) -> list[list[int]]:
    by_deg: dict[int, list[int]] = {}
    for v, a in enumerate(adj):
        by_deg.setdefault(len(a), []).append(v)
    return [by_deg[d] for d in sorted(by_deg)]


def canonical_form(g: Graph) -> tuple[int, int]:
    """Total-order key ``(n, adjacency bits)``; equal iff the graphs are isomorphic."""
    if g.n == 0:
        return (0, 0)
    return (g.n, canonical_labeling(g)[0])


def canonical_graph(g: Graph) -> Graph:
    """The graph relabelled by its canonical labelling."""
    if g.n == 0:
        return g
    _, order = canonical_labeling(g)
    label = {v: k for k, v in enumerate(order)}
    return Graph.from_edges(g.n, [(label[u], label[v]) for u, v in g.edges])


def is_isomorphic(g: Graph, h: Graph) -> bool:
    return g.n == h.n and g.m == h.m and canonical_form(g) == canonical_form(h)


# ---------------------------------------------------------------------------
# cores


def path_graph_edges(vertices: list[int]) -> list[tuple[int, int]]:
    return list(zip(vertices, vertices[1:]))


def bicyclic_cores(k: int) -> Iterator[Graph]:
    """Bicyclic graphs with minimum degree >= 2 on ``k`` vertices (with repeats)."""
    # theta: internally disjoint paths of lengths p <= q <= r between 0 and 1
    for p in range(1, k + 1):
        for q in range(max(p, 2), k + 1):
            r = k + 1 - p - q
            if r < q:
                continue
            nxt = 2
            edges = []
            for length in (p, q, r):
                inner = list(range(nxt, nxt + length - 1))
                nxt += length - 1
                edges += path_graph_edges([0] + inner + [1])
            yield Graph.from_edges(k, edges)
    # two cycles a <= b joined by a path of length l >= 0
    for a in range(3, k + 1):
        for b in range(a, k + 1):
            l = k + 1 - a - b
            if l < 0:
                continue
            ca = list(range(a))
            edges = path_graph_edges(ca) + [(a - 1, 0)]
            spine = [0] + list(range(a, a + l))
            edges += path_graph_edges(spine)
            anchor = spine[-1]
            cb = [anchor] + list(range(a + l, a + l + b - 1))
            edges += path_graph_edges(cb) + [(cb[-1], anchor)]
            yield Graph.from_edges(k, edges)


def _grow(prev: dict, cores: list[Graph]) -> dict:
    level = {}
    for g in cores:
        level.setdefault(canonical_form(g), g)
    for g in prev.values():
        new = g.n
        for v in range(g.n):
            h = Graph(g.n + 1, g.edges | {(v, new)})
            key = canonical_form(h)
            if key not in level:
                level[key] = h
    return level


@lru_cache(maxsize=None)
def _cached_levels(kind: str, n: int) -> dict:
    if kind == "tree":
        if n == 1:
            return {canonical_form(Graph(1, frozenset())): Graph(1, frozenset())}
        prev = _cached_levels(kind, n - 1)
        return _grow(prev, [])
    if kind == "unicyclic":
        cycle = Graph.from_edges(n, path_graph_edges(list(range(n))) + [(n - 1, 0)]) if n >= 3 else None
        prev = _cached_levels(kind, n - 1) if n > 3 else {}
        return _grow(prev, [cycle] if cycle else [])
    if kind == "bicyclic":
        if n < 4:
            return {}
        prev = _cached_levels(kind, n - 1)
        return _grow(prev, list(bicyclic_cores(n)))
    raise ValueError(kind)


def _sorted_members(kind: str, n: int) -> list[Graph]:
    level = _cached_levels(kind, n)
    return [canonical_graph(level[k]) for k in sorted(level)]


def enumerate_trees(n: int) -> list[Graph]:
    if not (1 <= n <= 14):
        raise GraphError("n out of range")
    return _sorted_members("tree", n)


def enumerate_unicyclic(n: int) -> list[Graph]:
    if not (3 <= n <= 14):
        raise GraphError("n out of range")
    return _sorted_members("unicyclic", n)


def enumerate_bicyclic(n: int) -> list[Graph]:
    """Connected graphs with ``n + 1`` edges up to isomorphism, sorted by canonical form."""
    if not (4 <= n <= 12):
        raise GraphError("n must satisfy 4 <= n <= 12")
    return _sorted_members("bicyclic", n)


def enumerate_B_nd(n: int, d: int) -> list[Graph]:
    if not (3 <= d <= n - 3):
        raise GraphError("need 3 <= d <= n - 3")
    return [g for g in enumerate_bicyclic(n) if in_class_B(g) and diameter(g) == d]


def enumerate_by_diameter(kind: str, n: int, d: int) -> list[Graph]:
    graphs = {"tree": enumerate_trees, "unicyclic": enumerate_unicyclic, "bicyclic": enumerate_bicyclic}[kind](n)
    return [g for g in graphs if diameter(g) == d]


def worker_count() -> int:
    """Worker processes for corpus-level checks (``SKEWENERGY_THREADS``, default 1)."""
    try:
        return max(1, int(os.environ.get("SKEWENERGY_THREADS", "1")))
    except ValueError:
        return 1
