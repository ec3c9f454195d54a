"""Switching, switching equivalence and orientation classes."""

from __future__ import annotations

from collections import deque
from itertools import product
from typing import Iterable, Sequence

from .graph import Graph, GraphError, OrientedGraph, _edge, all_cycles, is_cycle_of

EVENLY = "evenly"  # the "-" class of an even cycle
ODDLY = "oddly"  # the "+" class of an even cycle
ODD_CYCLE = "odd-cycle"


def switch(og: OrientedGraph, w: Iterable[int]) -> OrientedGraph:
    """Reverse every arc with exactly one endpoint in ``w``."""
    w = set(w)
    arcs = frozenset((v, u) if ((u in w) != (v in w)) else (u, v) for u, v in og.arcs)
    return OrientedGraph(og.base, arcs)


def forward_arcs(og: OrientedGraph, cycle: Sequence[int]) -> int:
    k = len(cycle)
    return sum((cycle[j], cycle[(j + 1) % k]) in og.arcs for j in range(k))


def cycle_parity(og: OrientedGraph, cycle: Sequence[int]) -> str:
    """``EVENLY``/``ODDLY`` for even cycles, ``ODD_CYCLE`` otherwise."""
    if not is_cycle_of(og.base, cycle):
        raise GraphError(f"{list(cycle)} is not a cycle of the graph")
    if len(cycle) % 2:
        return ODD_CYCLE
    return EVENLY if forward_arcs(og, cycle) % 2 == 0 else ODDLY


def sign_label(parity: str) -> str:
    return {EVENLY: "-", ODDLY: "+", ODD_CYCLE: "o"}[parity]


def bfs_tree(g: Graph) -> tuple[list[int | None], list[int]]:
    """Parent pointers and visiting order of a BFS forest rooted at component minima."""
    parent: list[int | None] = [None] * g.n
    seen = [False] * g.n
    order = []
    for root in range(g.n):
        if seen[root]:
            continue
        seen[root] = True
        queue = deque([root])
        while queue:
            u = queue.popleft()
            order.append(u)
            for w in g.adj[u]:
                if not seen[w]:
                    seen[w] = True
                    parent[w] = u
                    queue.append(w)
    return parent, order


def tree_edges(g: Graph) -> frozenset:
    parent, _ = bfs_tree(g)
    return frozenset(_edge(v, p) for v, p in enumerate(parent) if p is not None)


def normalizing_set(og: OrientedGraph) -> set[int]:
    """The switching set that makes every BFS-tree arc point away from its root."""
    parent, order = bfs_tree(og.base)
    flip = [False] * og.n
    for v in order:
        p = parent[v]
        if p is None:
            continue
        flip[v] = flip[p] if (p, v) in og.arcs else not flip[p]
    return {v for v in range(og.n) if flip[v]}


def normalize(og: OrientedGraph) -> OrientedGraph:
    return switch(og, normalizing_set(og))


def class_key(og: OrientedGraph) -> tuple[int, ...]:
    """Directions of non-tree arcs after normalization, in sorted edge order.

    Bit 0 means the arc runs from the lower to the higher label.
    """
    norm = normalize(og)
    tree = tree_edges(og.base)
    return tuple(int((u, v) not in norm.arcs) for u, v in og.base.sorted_edges if (u, v) not in tree)


def switching_equivalent(og1: OrientedGraph, og2: OrientedGraph) -> bool:
    if og1.base != og2.base:
        raise GraphError("orientations of different graphs")
    return class_key(og1) == class_key(og2)


def orientation_class_reps(g: Graph) -> list[OrientedGraph]:
    """One representative per switching class, tree arcs pointing away from vertex 0."""
    if not g.is_connected():
        raise GraphError("graph not connected")
    parent, _ = bfs_tree(g)
    tree_arcs = [(p, v) for v, p in enumerate(parent) if p is not None]
    tree = {_edge(u, v) for u, v in tree_arcs}
    cotree = [e for e in g.sorted_edges if e not in tree]
    reps = []
    for bits in product((0, 1), repeat=len(cotree)):
        arcs = list(tree_arcs)
        arcs.extend((v, u) if b else (u, v) for (u, v), b in zip(cotree, bits))
        reps.append(OrientedGraph(g, frozenset(arcs)))
    return reps


def parity_signature(og: OrientedGraph) -> tuple[str, ...]:
    """Labels (+, -, or o for odd cycles) of all cycles in canonical cycle order."""
    return tuple(sign_label(cycle_parity(og, c)) for c in all_cycles(og.base))
