"""Constructors for the named graphs P_n, S_n, C_n, T_{n,d}, U_{n,d} and B_{n,d}.

Labels are deterministic: path spine first, then the cycle/core, then pendant
vertices.  Trees are oriented low -> high; graphs with cycles start from that
orientation and flip non-tree arcs until every cycle has the requested class
("-" evenly oriented, "+" oddly oriented).
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache
from itertools import product
from typing import Optional

from .graph import (
    Graph,
    GraphError,
    OrientedGraph,
    all_cycles,
    classify_bicyclic,
    diameter,
    is_bicyclic,
)
from .orientations import cycle_parity, sign_label, tree_edges
from .spectrum import SkewPolynomial, char_poly_expansion

KINDS = ("P", "S", "C", "T", "U", "B")


class FamilyError(ValueError):
    pass


@dataclass(frozen=True)
class FamilySpec:
    kind: str
    n: int
    d: Optional[int] = None
    orient: Optional[str] = None

    def __post_init__(self):
        k, n, d = self.kind, self.n, self.d
        if k not in KINDS:
            raise FamilyError(f"unknown family {k!r}")
        if self.orient is not None and set(self.orient) - {"+", "-"}:
            raise FamilyError(f"orientation labels must be '+' or '-', got {self.orient!r}")
        if k in ("P", "S") and n < 1:
            raise FamilyError(f"{k} needs n >= 1")
        if k == "C" and n < 3:
            raise FamilyError("C needs n >= 3")
        if k in ("T", "U", "B") and d is None:
            raise FamilyError(f"{k} needs d")
        if k == "T" and not (2 <= d <= n - 1):
            raise FamilyError("T needs 2 <= d <= n-1")
        if k == "U" and not (3 <= d <= n - 2):
            raise FamilyError("U needs 3 <= d <= n-2")
        if k == "B" and not (3 <= d <= n - 3):
            raise FamilyError("B needs 3 <= d <= n-3")

    def __str__(self) -> str:
        parts = [f"n={self.n}"]
        if self.d is not None:
            parts.append(f"d={self.d}")
        if self.orient:
            parts.append(f"orient={self.orient}")
        return f"{self.kind}:" + ",".join(parts)


_SPEC_RE = re.compile(r"^([A-Z]):(.*)$")


def parse_spec(text: str) -> FamilySpec:
    """Parse e.g. ``"B:n=7,d=4,orient=---"``; errors carry a character position."""
    m = _SPEC_RE.match(text.strip())
    if not m:
        raise FamilyError(f"position 0: expected '<KIND>:key=value,...' in {text!r}")
    kind, body = m.group(1), m.group(2)
    if kind not in KINDS:
        raise FamilyError(f"position 0: unknown family {kind!r}")
    fields: dict = {}
    pos = 2
    for item in body.split(",") if body else []:
        if "=" not in item:
            raise FamilyError(f"position {pos}: expected key=value, got {item!r}")
        key, val = item.split("=", 1)
        key = key.strip()
        if key in ("n", "d"):
            try:
                fields[key] = int(val)
            except ValueError:
                raise FamilyError(f"position {pos + len(key) + 1}: {key} must be an integer") from None
        elif key == "orient":
            fields[key] = val.strip()
        else:
            raise FamilyError(f"position {pos}: unknown key {key!r}")
        pos += len(item) + 1
    if "n" not in fields:
        raise FamilyError(f"position {len(text)}: missing n")
    return FamilySpec(kind, fields["n"], fields.get("d"), fields.get("orient"))


def _edges(spec: FamilySpec) -> list[tuple[int, int]]:
    n, d = spec.n, spec.d
    if spec.kind == "P":
        return [(i, i + 1) for i in range(n - 1)]
    if spec.kind == "S":
        return [(0, i) for i in range(1, n)]
    if spec.kind == "C":
        return [(i, i + 1) for i in range(n - 1)] + [(0, n - 1)]
    if spec.kind == "T":
        # P_{d-1} on 0..d-2 glued to a leaf of the star centred at d-1
        edges = [(i, i + 1) for i in range(d - 2)]
        centre = d - 1
        edges.append((d - 2, centre))
        edges += [(centre, v) for v in range(d, n)]
        return edges
    if spec.kind == "U":
        # P_{d-2} on 0..d-3 glued to x = d-3 on the 4-cycle x p y q
        edges = [(i, i + 1) for i in range(d - 3)]
        x, p, y, q = d - 3, d - 2, d - 1, d
        edges += [(x, p), (p, y), (x, q), (q, y)]
        edges += [(y, v) for v in range(d + 1, n)]
        return edges
    if spec.kind == "B":
        # P_{d-2} on 0..d-3 glued to x = d-3 of K_{2,3} with parts {x, y}, {p, q, r}
        edges = [(i, i + 1) for i in range(d - 3)]
        x, y = d - 3, d + 1
        for w in (d - 2, d - 1, d):
            edges += [(x, w), (w, y)]
        edges += [(y, v) for v in range(d + 2, n)]
        return edges
    raise FamilyError(spec.kind)


def _labels(og: OrientedGraph, cycles) -> str:
    return "".join(sign_label(cycle_parity(og, c)) for c in cycles)


def shape_cycles(g: Graph) -> list[tuple[int, ...]]:
    if is_bicyclic(g):
        return list(classify_bicyclic(g).cycles)
    return all_cycles(g)


def build(spec: FamilySpec) -> OrientedGraph:
    g = Graph.from_edges(spec.n, _edges(spec))
    cycles = shape_cycles(g)
    if not cycles:
        return OrientedGraph.low_to_high(g)
    want = spec.orient
    if want is None and all(len(c) % 2 for c in cycles):
        return OrientedGraph.low_to_high(g)
    if want is None:
        raise FamilyError(f"{spec.kind} needs orientation labels")
    # for B two labels may be given; the third follows from the first two
    if not (spec.kind == "B" and len(want) == 2) and len(want) != len(cycles):
        raise FamilyError(f"expected {len(cycles)} orientation labels, got {len(want)}")
    tree = tree_edges(g)
    cotree = [e for e in g.sorted_edges if e not in tree]
    for bits in product((0, 1), repeat=len(cotree)):
        flips = {e for e, b in zip(cotree, bits) if b}
        arcs = frozenset((v, u) if (u, v) in flips else (u, v) for u, v in g.edges)
        og = OrientedGraph(g, arcs)
        got = _labels(og, cycles)
        if got[: len(want)] == want:
            return og
    raise FamilyError("orientation not realizable")


def verify_family_shape(og: OrientedGraph, spec: FamilySpec) -> bool:
    """Re-derive size, diameter, cycle structure and cycle classes from ``og``."""
    g = og.base
    n = spec.n
    expected_m = {"P": n - 1, "S": n - 1, "T": n - 1, "C": n, "U": n, "B": n + 1}[spec.kind]
    if g.n != n or g.m != expected_m or not g.is_connected():
        return False
    if n == 1:
        return True
    expected_d = {"P": n - 1, "S": min(2, n - 1), "C": n // 2}.get(spec.kind, spec.d)
    if diameter(g) != expected_d:
        return False
    if spec.kind == "B":
        shape = classify_bicyclic(g)
        if (shape.t, shape.a, shape.b, shape.c) != (3, 4, 4, 4):
            return False
    if spec.kind == "U" and [len(c) for c in all_cycles(g)] != [4]:
        return False
    cycles = shape_cycles(g)
    if cycles and spec.orient is not None:
        labels = _labels(og, cycles)
        if labels[: len(spec.orient)] != spec.orient:
            return False
    return True


@lru_cache(maxsize=None)
def family_graph(kind: str, n: int, d: Optional[int] = None, orient: Optional[str] = None) -> OrientedGraph:
    return build(FamilySpec(kind, n, d, orient))


@lru_cache(maxsize=None)
def family_poly(kind: str, n: int, d: Optional[int] = None, orient: Optional[str] = None) -> SkewPolynomial:
    """Polynomial of a named graph; ``P_0``/``S_0`` give the empty graph."""
    if kind in ("P", "S") and n == 0:
        return SkewPolynomial(0, (1,))
    if n < 0:
        raise GraphError(f"{kind}_{n}: index below 0")
    return char_poly_expansion(family_graph(kind, n, d, orient))


def parse_family_or_none(text: str) -> Optional[FamilySpec]:
    if _SPEC_RE.match(text.strip()):
        return parse_spec(text)
    return None
