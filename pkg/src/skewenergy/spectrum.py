"""Exact skew characteristic polynomials, the coefficient quasi-order and skew energy.

For an oriented graph on ``n`` vertices the skew characteristic polynomial
``det(xI - S)`` only has even-indexed coefficients, so a polynomial is stored
as the sequence ``a_0, a_2, ..., a_{2*floor(n/2)}``.
"""

from __future__ import annotations

import enum
import json
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

import numpy as np

from .graph import GraphError, OrientedGraph, all_cycles, cycle_edges, delete, linear_subgraphs
from .orientations import forward_arcs


class OracleError(ArithmeticError):
    pass


class QuadratureError(ArithmeticError):
    def __init__(self, message: str, estimate: float, error: float):
        super().__init__(f"{message} (estimate={estimate!r}, error~{error:.3g})")
        self.estimate = estimate
        self.error = error


@dataclass(frozen=True)
class SkewPolynomial:
    n: int
    coeffs: tuple[int, ...]

    def __post_init__(self):
        if len(self.coeffs) != self.n // 2 + 1:
            raise ValueError(f"expected {self.n // 2 + 1} coefficients, got {len(self.coeffs)}")
        if self.coeffs[0] != 1:
            raise ValueError("leading coefficient must be 1")
        if any(c < 0 for c in self.coeffs):
            raise ValueError(f"negative coefficient in {self.coeffs}")

    def __getitem__(self, i: int) -> int:
        """``a_i`` by its true index (odd ``i`` gives 0)."""
        if i % 2 or i < 0 or i // 2 >= len(self.coeffs):
            return 0
        return self.coeffs[i // 2]

    def full_coefficients(self) -> list[int]:
        """Coefficients of ``x^n, x^(n-1), ..., x^0``."""
        out = [0] * (self.n + 1)
        for k, c in enumerate(self.coeffs):
            out[2 * k] = c
        return out

    def __str__(self) -> str:
        terms = []
        for k, c in enumerate(self.coeffs):
            if c == 0:
                continue
            p = self.n - 2 * k
            mono = "1" if p == 0 else ("x" if p == 1 else f"x^{p}")
            terms.append(mono if c == 1 and p else f"{c}" if p == 0 else f"{c}{mono}")
        return " + ".join(terms) if terms else "0"

    def to_json(self) -> dict:
        return {"n": self.n, "coeffs": [str(c) for c in self.coeffs]}

    @classmethod
    def from_json(cls, obj) -> "SkewPolynomial":
        if isinstance(obj, str):
            obj = json.loads(obj)
        return cls(int(obj["n"]), tuple(int(c) for c in obj["coeffs"]))


def union_poly(*polys: SkewPolynomial) -> SkewPolynomial:
    """Polynomial of a disjoint union: product of the factors."""
    n = 0
    coeffs = [1]
    for p in polys:
        out = [0] * (len(coeffs) + len(p.coeffs) - 1)
        for i, x in enumerate(coeffs):
            for j, y in enumerate(p.coeffs):
                out[i + j] += x * y
        coeffs = out
        n += p.n
    coeffs += [0] * (n // 2 + 1 - len(coeffs))
    return SkewPolynomial(n, tuple(coeffs[: n // 2 + 1]))


# ---------------------------------------------------------------------------
# route 1: linear subgraph expansion


def _cycle_weight(og: OrientedGraph, cycle: Sequence[int]) -> int:
    # evenly oriented even cycle -> -2, oddly -> +2
    return -2 if forward_arcs(og, cycle) % 2 == 0 else 2


def char_poly_expansion(og: OrientedGraph) -> SkewPolynomial:
    """Sum of ``(-2)^{p_e} 2^{p_o}`` over linear subgraphs of each even size.

    Linear subgraphs containing an odd cycle contribute nothing: the two
    traversals of an odd cycle cancel in the determinant.
    """
    coeffs = [0] * (og.n // 2 + 1)
    for sub in linear_subgraphs(og.base):
        size = sub.vertex_count
        if size % 2:
            continue
        w = 1
        for c in sub.cycles:
            if len(c) % 2:
                w = 0
                break
            w *= _cycle_weight(og, c)
        coeffs[size // 2] += w
    return SkewPolynomial(og.n, tuple(coeffs))


# ---------------------------------------------------------------------------
# routes 2 and 3: edge and vertex deletion recurrences


def _empty(n: int) -> list[int]:
    return [1] + [0] * (n // 2)


def _add_shifted(acc: list[int], part: Sequence[int], shift: int, factor: int = 1) -> None:
    for k, c in enumerate(part):
        if k + shift < len(acc):
            acc[k + shift] += factor * c


def _edge_route(og: OrientedGraph, arc: Optional[tuple[int, int]], memo: dict) -> list[int]:
    key = (og.n, og.sorted_arcs)
    if key in memo:
        return memo[key]
    if og.m == 0:
        return _empty(og.n)
    u, v = arc if arc is not None else og.sorted_arcs[0]
    res = list(_edge_route(delete(og, edges=[(u, v)]), None, memo))
    _add_shifted(res, _edge_route(delete(og, vertices=[u, v]), None, memo), 1)
    for c in all_cycles(og.base):
        if len(c) % 2 or (min(u, v), max(u, v)) not in cycle_edges(c):
            continue
        rest = _edge_route(delete(og, vertices=c), None, memo)
        _add_shifted(res, rest, len(c) // 2, _cycle_weight(og, c))
    memo[key] = res
    return res


def char_poly_recurrence_edge(og: OrientedGraph, arc: Optional[tuple[int, int]] = None) -> SkewPolynomial:
    """Expand along ``arc`` (default: the least arc), recursing on smaller graphs."""
    if arc is not None:
        arc = tuple(arc)
        if arc not in og.arcs:
            raise GraphError(f"arc {arc} not in graph")
    return SkewPolynomial(og.n, tuple(_edge_route(og, arc, {})))


def _vertex_route(og: OrientedGraph, v: int, memo: dict) -> list[int]:
    key = (og.n, og.sorted_arcs)
    if key in memo:
        return memo[key]
    if og.n == 0:
        return [1]
    res = [0] * (og.n // 2 + 1)
    _add_shifted(res, _vertex_route(delete(og, vertices=[v]), 0, memo), 0)
    for u in og.base.adj[v]:
        _add_shifted(res, _vertex_route(delete(og, vertices=[u, v]), 0, memo), 1)
    for c in all_cycles(og.base):
        if len(c) % 2 or v not in c:
            continue
        rest = _vertex_route(delete(og, vertices=c), 0, memo)
        _add_shifted(res, rest, len(c) // 2, _cycle_weight(og, c))
    memo[key] = res
    return res


def char_poly_recurrence_vertex(og: OrientedGraph, v: int = 0) -> SkewPolynomial:
    if og.n == 0:
        return SkewPolynomial(0, (1,))
    if not (0 <= v < og.n):
        raise GraphError(f"vertex {v} out of range")
    return SkewPolynomial(og.n, tuple(_vertex_route(og, v, {})))


# ---------------------------------------------------------------------------
# route 4: determinant evaluation and interpolation


def bareiss_det(matrix: Sequence[Sequence[int]]) -> int:
    """Exact integer determinant by fraction-free elimination."""
    m = [list(row) for row in matrix]
    n = len(m)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for r in range(k + 1, n):
                if m[r][k] != 0:
                    m[k], m[r] = m[r], m[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = m[k][k]
        for i in range(k + 1, n):
            mik = m[i][k]
            row_i = m[i]
            row_k = m[k]
            for j in range(k + 1, n):
                row_i[j] = (row_i[j] * pivot - mik * row_k[j]) // prev
            row_i[k] = 0
        prev = pivot
    return sign * m[n - 1][n - 1]


def interpolate(xs: Sequence[int], ys: Sequence[int]) -> list[Fraction]:
    """Monomial coefficients (constant term first) of the interpolating polynomial."""
    k = len(xs)
    table = [Fraction(y) for y in ys]
    newton = [table[0]]
    for level in range(1, k):
        table = [(table[i + 1] - table[i]) / (xs[i + level] - xs[i]) for i in range(k - level)]
        newton.append(table[0])
    coeffs = [Fraction(0)] * k
    for level in range(k - 1, -1, -1):
        # coeffs <- coeffs * (x - xs[level]) + newton[level]
        shifted = [Fraction(0)] + coeffs[:-1]
        coeffs = [s - xs[level] * c for s, c in zip(shifted, coeffs)]
        coeffs[0] += newton[level]
    return coeffs


def char_poly_oracle(og: OrientedGraph) -> SkewPolynomial:
    n = og.n
    s = og.skew_rows()
    xs = list(range(n + 1))
    ys = []
    for k in xs:
        mat = [[(k if i == j else 0) - s[i][j] for j in range(n)] for i in range(n)]
        ys.append(bareiss_det(mat))
    mono = interpolate(xs, ys)
    if any(c.denominator != 1 for c in mono):
        raise OracleError("oracle inconsistency: non-integer coefficient")
    # a_i is the coefficient of x^(n-i)
    full = [int(mono[n - i]) for i in range(n + 1)]
    if any(full[i] for i in range(1, n + 1, 2)):
        raise OracleError("oracle inconsistency: nonzero odd coefficient")
    return SkewPolynomial(n, tuple(full[0::2]))


ROUTES = {
    "expansion": char_poly_expansion,
    "edge": char_poly_recurrence_edge,
    "vertex": char_poly_recurrence_vertex,
    "oracle": char_poly_oracle,
}


def char_poly(og: OrientedGraph, route: str = "expansion") -> SkewPolynomial:
    try:
        fn = ROUTES[route]
    except KeyError:
        raise ValueError(f"unknown route {route!r}") from None
    return fn(og)


# ---------------------------------------------------------------------------
# quasi-order


class QuasiOrder(enum.Enum):
    EQUIVALENT = "equivalent"
    STRICTLY_LESS = "strictly-less"
    STRICTLY_GREATER = "strictly-greater"
    LESS_OR_EQUIVALENT = "less-or-equivalent"
    GREATER_OR_EQUIVALENT = "greater-or-equivalent"
    INCOMPARABLE = "incomparable"

    @property
    def is_le(self) -> bool:
        return self in (QuasiOrder.EQUIVALENT, QuasiOrder.STRICTLY_LESS, QuasiOrder.LESS_OR_EQUIVALENT)

    @property
    def is_ge(self) -> bool:
        return self in (QuasiOrder.EQUIVALENT, QuasiOrder.STRICTLY_GREATER, QuasiOrder.GREATER_OR_EQUIVALENT)


def compare_sequences(p: Sequence[int], q: Sequence[int]) -> QuasiOrder:
    """Coefficientwise comparison, padding the shorter sequence with zeros.

    Only the four decisive outcomes can arise from a full comparison; the
    two ``*_OR_EQUIVALENT`` members exist for callers that summarise several.
    """
    k = max(len(p), len(q))
    p = list(p) + [0] * (k - len(p))
    q = list(q) + [0] * (k - len(q))
    less = any(x < y for x, y in zip(p, q))
    greater = any(x > y for x, y in zip(p, q))
    if less and greater:
        return QuasiOrder.INCOMPARABLE
    if less:
        return QuasiOrder.STRICTLY_LESS
    if greater:
        return QuasiOrder.STRICTLY_GREATER
    return QuasiOrder.EQUIVALENT


def quasi_compare(p: SkewPolynomial, q: SkewPolynomial) -> QuasiOrder:
    if p.n != q.n:
        raise ValueError("orders differ")
    return compare_sequences(p.coeffs, q.coeffs)


# ---------------------------------------------------------------------------
# skew energy


def skew_energy_spectral(og: OrientedGraph) -> float:
    """Sum of singular values of S.

    Taken from the symmetric matrix ``[[0, S], [S^T, 0]]`` whose eigenvalues
    are plus/minus the singular values; square roots of the eigenvalues of
    ``-S^2`` would blow rounding near zero up to ~1e-8.
    """
    n = og.n
    if n == 0:
        return 0.0
    s = og.skew_matrix().astype(float)
    block = np.zeros((2 * n, 2 * n))
    block[:n, n:] = s
    block[n:, :n] = s.T
    ev = np.linalg.eigvalsh(block)
    return float(np.abs(ev).sum() / 2.0)


_GL_NODES, _GL_WEIGHTS = np.polynomial.legendre.leggauss(10)


def _composite_gauss(f, panels: int) -> float:
    edges = np.linspace(0.0, 1.0, panels + 1)
    half = 0.5 * (edges[1:] - edges[:-1])
    mid = 0.5 * (edges[1:] + edges[:-1])
    x = (mid[:, None] + half[:, None] * _GL_NODES[None, :]).ravel()
    w = (half[:, None] * _GL_WEIGHTS[None, :]).ravel()
    return float(np.dot(w, f(x)))


def coulson_energy(coeffs: Sequence[int], abs_tol: float = 1e-9, max_panels: int = 1 << 14) -> float:
    """``(2/pi) * int_0^inf x^-2 ln(sum a_2i x^2i) dx`` from exact coefficients.

    The half-line is split at 1; on ``[1, inf)`` the substitution ``x = 1/u``
    turns the integrand into ``ln Q(u) - 2m ln u`` with ``Q`` the reversed
    polynomial, and the log term integrates to ``2m`` in closed form.  Both
    remaining integrands are smooth on ``[0, 1]``.
    """
    if abs_tol <= 0:
        raise ValueError("abs_tol must be positive")
    a = [float(c) for c in coeffs]
    top = max(i for i, c in enumerate(coeffs) if c)
    if top == 0:
        return 0.0
    tail = np.array(a[1 : top + 1])  # a_2 .. a_2m
    head = np.array(a[: top + 1])  # a_0 .. a_2m; a_0 multiplies u^2m in Q

    def near(x):
        x2 = x * x
        s = np.zeros_like(x)
        for c in tail[::-1]:
            s = (s + c) * x2
        out = np.empty_like(x)
        small = x2 < 1e-300
        out[~small] = np.log1p(s[~small]) / x2[~small]
        out[small] = tail[0]
        return out

    def far(u):
        u2 = u * u
        s = np.zeros_like(u)
        for c in head:
            s = s * u2 + c
        return np.log(s)

    def total(panels):
        return (2.0 / math.pi) * (_composite_gauss(near, panels) + _composite_gauss(far, panels) + 2.0 * top)

    panels = 2
    prev = total(panels)
    while True:
        panels *= 2
        cur = total(panels)
        err = abs(cur - prev)
        if err < abs_tol / 2:
            return cur
        if panels >= max_panels:
            raise QuadratureError("quadrature did not converge", cur, err)
        prev = cur


def skew_energy_integral(og: OrientedGraph, abs_tol: float = 1e-9) -> float:
    return coulson_energy(char_poly_expansion(og).coeffs, abs_tol)
