"""Simple graphs, oriented graphs and the structural queries built on them.

Vertices are always labelled ``0..n-1``.  Undirected edges are stored as
pairs ``(i, j)`` with ``i < j``; arcs of an oriented graph are ordered pairs
``(tail, head)``.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Iterator, Optional, Sequence


class GraphError(ValueError):
    pass


def _edge(u: int, v: int) -> tuple[int, int]:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    n: int
    edges: frozenset

    def __post_init__(self):
        if self.n < 0:
            raise GraphError("negative vertex count")
        for e in self.edges:
            u, v = e
            if u == v:
                raise GraphError(f"self-loop at {u}")
            if not (0 <= u < v < self.n):
                raise GraphError(f"bad edge {e} for n={self.n}")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Sequence[int]]) -> "Graph":
        normalized = set()
        for u, v in edges:
            if u == v:
                raise GraphError(f"self-loop at {u}")
            e = _edge(u, v)
            if e in normalized:
                raise GraphError(f"multi-edge {e}")
            normalized.add(e)
        return cls(n, frozenset(normalized))

    @cached_property
    def adj(self) -> tuple[tuple[int, ...], ...]:
        nbrs = [[] for _ in range(self.n)]
        for u, v in self.edges:
            nbrs[u].append(v)
            nbrs[v].append(u)
        return tuple(tuple(sorted(a)) for a in nbrs)

    @cached_property
    def sorted_edges(self) -> tuple[tuple[int, int], ...]:
        return tuple(sorted(self.edges))

    @property
    def m(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adj[v]

    def has_edge(self, u: int, v: int) -> bool:
        return _edge(u, v) in self.edges

    def is_connected(self) -> bool:
        if self.n == 0:
            return True
        return len(bfs_distances(self, 0)) == self.n

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={list(self.sorted_edges)})"


@dataclass(frozen=True)
class OrientedGraph:
    """A simple graph together with one arc per edge."""

    base: Graph
    arcs: frozenset = field(repr=False)

    def __post_init__(self):
        if len(self.arcs) != self.base.m:
            raise GraphError("orientation must give exactly one arc per edge")
        if {_edge(u, v) for u, v in self.arcs} != self.base.edges:
            raise GraphError("arcs do not match the base edge set")

    @classmethod
    def from_arcs(cls, n: int, arcs: Iterable[Sequence[int]]) -> "OrientedGraph":
        arcs = [tuple(a) for a in arcs]
        return cls(Graph.from_edges(n, arcs), frozenset(arcs))

    @classmethod
    def low_to_high(cls, g: Graph) -> "OrientedGraph":
        return cls(g, g.edges)

    @property
    def n(self) -> int:
        return self.base.n

    @property
    def m(self) -> int:
        return self.base.m

    @cached_property
    def sorted_arcs(self) -> tuple[tuple[int, int], ...]:
        return tuple(sorted(self.arcs))

    def has_arc(self, u: int, v: int) -> bool:
        return (u, v) in self.arcs

    def arc_for(self, u: int, v: int) -> tuple[int, int]:
        if (u, v) in self.arcs:
            return (u, v)
        if (v, u) in self.arcs:
            return (v, u)
        raise GraphError(f"no arc between {u} and {v}")

    def skew_matrix(self):
        import numpy as np

        s = np.zeros((self.n, self.n), dtype=np.int64)
        for u, v in self.arcs:
            s[u, v] = 1
            s[v, u] = -1
        return s

    def skew_rows(self) -> list[list[int]]:
        """Skew-adjacency matrix as nested Python int lists (exact arithmetic)."""
        s = [[0] * self.n for _ in range(self.n)]
        for u, v in self.arcs:
            s[u][v] = 1
            s[v][u] = -1
        return s

    def __repr__(self) -> str:
        return f"OrientedGraph(n={self.n}, arcs={list(self.sorted_arcs)})"


AnyGraph = Graph | OrientedGraph


def underlying(g: AnyGraph) -> Graph:
    return g.base if isinstance(g, OrientedGraph) else g


# ---------------------------------------------------------------------------
# distances


def bfs_distances(g: Graph, source: int) -> dict[int, int]:
    dist = {source: 0}
    queue = deque([source])
    adj = g.adj
    while queue:
        u = queue.popleft()
        for w in adj[u]:
            if w not in dist:
                dist[w] = dist[u] + 1
                queue.append(w)
    return dist


def distance_matrix(g: Graph) -> list[list[int]]:
    """All-pairs BFS distances; raises on a disconnected graph."""
    g = underlying(g)
    rows = []
    for s in range(g.n):
        dist = bfs_distances(g, s)
        if len(dist) != g.n:
            raise GraphError("graph not connected")
        rows.append([dist[v] for v in range(g.n)])
    return rows


def diameter(g: AnyGraph) -> int:
    g = underlying(g)
    if g.n == 0:
        raise GraphError("graph not connected")
    return max(max(row) for row in distance_matrix(g))


def components(g: AnyGraph) -> list[list[int]]:
    g = underlying(g)
    seen: set[int] = set()
    comps = []
    for s in range(g.n):
        if s in seen:
            continue
        comp = sorted(bfs_distances(g, s))
        seen.update(comp)
        comps.append(comp)
    return comps


# ---------------------------------------------------------------------------
# cycles


def _normalize_cycle(cycle: Sequence[int]) -> tuple[int, ...]:
    k = len(cycle)
    i = min(range(k), key=cycle.__getitem__)
    rot = list(cycle[i:]) + list(cycle[:i])
    if rot[1] > rot[-1]:
        rot = [rot[0]] + rot[1:][::-1]
    return tuple(rot)


def all_cycles(g: AnyGraph) -> list[tuple[int, ...]]:
    """Every simple cycle once, starting at its least vertex.

    Of the two traversal directions the one whose second vertex is smaller
    is kept.  Output is sorted by length, then lexicographically.
    """
    g = underlying(g)
    adj = g.adj
    found = []
    for s in range(g.n):
        # cycles whose minimum vertex is s
        path = [s]
        on_path = [False] * g.n
        on_path[s] = True

        def dfs(u: int) -> None:
            for w in adj[u]:
                if w == s:
                    if len(path) >= 3 and path[1] < path[-1]:
                        found.append(tuple(path))
                elif w > s and not on_path[w]:
                    on_path[w] = True
                    path.append(w)
                    dfs(w)
                    path.pop()
                    on_path[w] = False

        dfs(s)
    found.sort(key=lambda c: (len(c), c))
    return found


def cycle_edges(cycle: Sequence[int]) -> list[tuple[int, int]]:
    k = len(cycle)
    return [_edge(cycle[j], cycle[(j + 1) % k]) for j in range(k)]


def is_cycle_of(g: AnyGraph, cycle: Sequence[int]) -> bool:
    g = underlying(g)
    if len(cycle) < 3 or len(set(cycle)) != len(cycle):
        return False
    if any(not (0 <= v < g.n) for v in cycle):
        return False
    return all(e in g.edges for e in cycle_edges(cycle))


def cycle_rank(g: AnyGraph) -> int:
    g = underlying(g)
    return g.m - g.n + len(components(g))


# ---------------------------------------------------------------------------
# bicyclic taxonomy


@dataclass(frozen=True)
class BicyclicShape:
    """Two base cycles ``C_a``, ``C_b`` (a <= b) sharing ``t`` vertices.

    For ``t >= 2`` there is a third cycle of length ``c = a + b - 2t + 2``;
    for ``t == 0`` the cycles are joined by a path of length ``l``.
    """

    t: int
    a: int
    b: int
    c: Optional[int]
    l: Optional[int]
    cycle_a: tuple[int, ...]
    cycle_b: tuple[int, ...]
    cycle_c: Optional[tuple[int, ...]] = None

    @property
    def cycles(self) -> tuple[tuple[int, ...], ...]:
        if self.cycle_c is None:
            return (self.cycle_a, self.cycle_b)
        return (self.cycle_a, self.cycle_b, self.cycle_c)


def is_bicyclic(g: AnyGraph) -> bool:
    g = underlying(g)
    return g.n > 0 and g.m == g.n + 1 and g.is_connected()


def classify_bicyclic(g: AnyGraph) -> BicyclicShape:
    g = underlying(g)
    if not is_bicyclic(g):
        raise GraphError("not bicyclic")
    cycles = all_cycles(g)
    ca, cb = cycles[0], cycles[1]
    a, b = len(ca), len(cb)
    common = set(ca) & set(cb)
    t = len(common)
    if t >= 2:
        if len(cycles) != 3:
            raise GraphError("not bicyclic")
        cc = cycles[2]
        c = len(cc)
        if c != a + b - 2 * t + 2:
            raise GraphError("inconsistent theta structure")
        return BicyclicShape(t, a, b, c, None, ca, cb, cc)
    if len(cycles) != 2:
        raise GraphError("not bicyclic")
    if t == 1:
        return BicyclicShape(1, a, b, None, 0, ca, cb)
    # t == 0: length of the connecting path
    target = set(cb)
    best = None
    for s in ca:
        dist = bfs_distances(g, s)
        d = min(dist[v] for v in target)
        best = d if best is None else min(best, d)
    return BicyclicShape(0, a, b, None, best, ca, cb)


def has_bad_odd_pair(g: AnyGraph) -> bool:
    """Vertex-disjoint odd cycles whose lengths sum to 2 mod 4 exist."""
    cycles = [c for c in all_cycles(g) if len(c) % 2 == 1]
    for i, c1 in enumerate(cycles):
        s1 = set(c1)
        for c2 in cycles[i + 1 :]:
            if s1.isdisjoint(c2) and (len(c1) + len(c2)) % 4 == 2:
                return True
    return False


def in_class_B(g: AnyGraph) -> bool:
    shape = classify_bicyclic(g)
    if shape.t != 0:
        return True
    return not (shape.a % 2 == 1 and shape.b % 2 == 1 and (shape.a + shape.b) % 4 == 2)


def pendant_vertices(g: AnyGraph) -> list[int]:
    g = underlying(g)
    return [v for v in range(g.n) if g.degree(v) == 1]


def cut_edges(g: AnyGraph) -> list[tuple[int, int]]:
    """Edges lying on no cycle."""
    g = underlying(g)
    on_cycle = set()
    for c in all_cycles(g):
        on_cycle.update(cycle_edges(c))
    return [e for e in g.sorted_edges if e not in on_cycle]


# ---------------------------------------------------------------------------
# linear subgraphs


@dataclass(frozen=True)
class LinearSubgraph:
    edges: tuple[tuple[int, int], ...] = ()
    cycles: tuple[tuple[int, ...], ...] = ()

    @property
    def vertex_count(self) -> int:
        return 2 * len(self.edges) + sum(len(c) for c in self.cycles)

    @property
    def vertices(self) -> frozenset:
        vs = set()
        for e in self.edges:
            vs.update(e)
        for c in self.cycles:
            vs.update(c)
        return frozenset(vs)


def linear_subgraphs(g: AnyGraph, size: Optional[int] = None) -> Iterator[LinearSubgraph]:
    """Generate linear subgraphs, optionally only those covering ``size`` vertices.

    Branches on the lowest undecided vertex: leave it uncovered, match it to a
    higher undecided neighbour, or route a cycle through it (such a cycle has
    that vertex as its minimum).
    """
    g = underlying(g)
    n = g.n
    adj = g.adj
    by_min: list[list[tuple[int, ...]]] = [[] for _ in range(n)]
    for c in all_cycles(g):
        by_min[c[0]].append(c)
    covered = [False] * n
    edges: list[tuple[int, int]] = []
    cycles: list[tuple[int, ...]] = []

    def rec(v: int, count: int) -> Iterator[LinearSubgraph]:
        while v < n and covered[v]:
            v += 1
        if size is not None:
            if count > size:
                return
            free = sum(1 for w in range(v, n) if not covered[w])
            if count + free < size:
                return
        if v >= n:
            if size is None or count == size:
                yield LinearSubgraph(tuple(edges), tuple(cycles))
            return
        # leave v uncovered
        yield from rec(v + 1, count)
        covered[v] = True
        for w in adj[v]:
            if w > v and not covered[w]:
                covered[w] = True
                edges.append((v, w))
                yield from rec(v + 1, count + 2)
                edges.pop()
                covered[w] = False
        for c in by_min[v]:
            if all(not covered[w] for w in c[1:]):
                for w in c[1:]:
                    covered[w] = True
                cycles.append(c)
                yield from rec(v + 1, count + len(c))
                cycles.pop()
                for w in c[1:]:
                    covered[w] = False
        covered[v] = False

    yield from rec(0, 0)


def evenly_linear_subgraphs(g: AnyGraph, i: int) -> list[LinearSubgraph]:
    if i % 2:
        raise GraphError("i must be even")
    if i < 0:
        raise GraphError("i must be nonnegative")
    return list(linear_subgraphs(g, i))


# ---------------------------------------------------------------------------
# deletion and unions


def delete(g: AnyGraph, vertices: Iterable[int] = (), edges: Iterable[Sequence[int]] = ()) -> AnyGraph:
    """Remove edges, then vertices, and relabel survivors in ascending order."""
    base = underlying(g)
    vertices = set(vertices)
    for v in vertices:
        if not (0 <= v < base.n):
            raise GraphError(f"vertex {v} not in graph")
    drop_edges = set()
    for u, v in edges:
        e = _edge(u, v)
        if e not in base.edges:
            raise GraphError(f"edge {e} not in graph")
        drop_edges.add(e)
    keep = [v for v in range(base.n) if v not in vertices]
    relabel = {v: k for k, v in enumerate(keep)}

    def survives(u: int, v: int) -> bool:
        return u in relabel and v in relabel and _edge(u, v) not in drop_edges

    if isinstance(g, OrientedGraph):
        arcs = [(relabel[u], relabel[v]) for u, v in g.arcs if survives(u, v)]
        return OrientedGraph.from_arcs(len(keep), arcs)
    new_edges = [(relabel[u], relabel[v]) for u, v in base.edges if survives(u, v)]
    return Graph.from_edges(len(keep), new_edges)


def disjoint_union(*graphs: AnyGraph) -> AnyGraph:
    """Disjoint union; oriented if every argument is oriented."""
    oriented = all(isinstance(h, OrientedGraph) for h in graphs)
    offset = 0
    pairs = []
    for h in graphs:
        src = h.arcs if oriented else underlying(h).edges
        pairs.extend((u + offset, v + offset) for u, v in src)
        offset += h.n
    if oriented:
        return OrientedGraph.from_arcs(offset, pairs)
    return Graph.from_edges(offset, pairs)
