"""Constructors for the gap weight functions on simplex grids.

Five families:
  build_w3      — the triangle gap with corner triangles and middle hexagon
  build_fk      — the classic n = 2 lower-bound instance with lpc = 7/8
  build_w_hat   — the face-averaged embedding of build_w3 into k dimensions
  build_w_prime — uniform weight on the boundary lines between terminals
  build_w_tilde — the convex combination of the last two that pushes every
                  k-way cut cost to at least one
"""

from __future__ import annotations

from fractions import Fraction
from math import comb

from .core import (
    Edge,
    Point,
    WeightFunction,
    canonical_edge,
    combine,
    enumerate_edges,
    support,
)


def _require_divisible(n: int) -> None:
    if n < 3 or n % 3 != 0:
        raise ValueError(f"construction needs n >= 3 divisible by 3, got {n}")


def edge_direction(x: Point, y: Point) -> tuple[int, int, int]:
    """(constant index c, moving index a, moving index b) for a triangle edge.

    The edge is parallel to the side spanned by vertices a and b, with a < b.
    """
    diff = [i for i in range(3) if x[i] != y[i]]
    (c,) = (i for i in range(3) if i not in diff)
    return c, diff[0], diff[1]


def build_w3(n: int) -> WeightFunction:
    """The triangle gap: lpc = 5/6 + 1/(2n), every non-opposite cut costs >= 1.

    Edges strictly inside corner triangle T_c parallel to the side opposite
    e^c get weight 0; side edges ramp from (n/3)*rho next to a terminal down
    to rho at the hexagon; everything else gets rho = 1/(2n).
    """
    _require_divisible(n)
    rho = Fraction(1, 2 * n)
    third = n // 3
    weights: dict[Edge, Fraction] = {}
    for x, y in enumerate_edges(3, n):
        c, a, b = edge_direction(x, y)
        m = x[c]
        if 3 * m > 2 * n:
            continue  # weight zero
        if m == 0:
            u = min(x[a], y[a])
            v = min(x[b], y[b])
            if v < third:
                wgt = (third - v) * rho
            elif u < third:
                wgt = (third - u) * rho
            else:
                wgt = rho
        else:
            wgt = rho
        weights[(x, y)] = wgt
    return WeightFunction(3, n, weights)


def build_fk() -> WeightFunction:
    """The classic n = 2 triangle instance with lpc = 7/8."""
    weights: dict[Edge, Fraction] = {}
    for x, y in enumerate_edges(3, 2):
        if max(x) == 2 or max(y) == 2:
            weights[(x, y)] = Fraction(1, 6)  # simplex vertex to middle point
        else:
            weights[(x, y)] = Fraction(1, 4)  # middle point to middle point
    return WeightFunction(3, 2, weights)


def _embedded_w3_value(x: Point, y: Point, face: tuple[int, ...], w3: WeightFunction) -> Fraction:
    px = tuple(x[i] for i in face)
    py = tuple(y[i] for i in face)
    return w3.get(px, py)


def build_w_hat(k: int, n: int) -> WeightFunction:
    """Average of build_w3 embedded into every 3-element face of [k].

    Computed by the face-count shortcut: an edge with support union S,
    |S| = s <= 3, receives the embedded triangle weight on each of the
    C(k-s, 3-s) faces containing S, and the embedded value is the same on
    all of them since build_w3 is permutation-invariant.
    """
    if k < 3:
        raise ValueError(f"need k >= 3, got {k}")
    _require_divisible(n)
    w3 = build_w3(n)
    nfaces = comb(k, 3)
    weights: dict[Edge, Fraction] = {}
    for x, y in enumerate_edges(k, n):
        S = sorted(support(x) | support(y))
        s = len(S)
        if s > 3:
            continue
        pad = [i for i in range(k) if i not in S]
        face = tuple(sorted(S + pad[: 3 - s]))
        val = _embedded_w3_value(x, y, face, w3)
        if val != 0:
            weights[(x, y)] = Fraction(comb(k - s, 3 - s), nfaces) * val
    return WeightFunction(k, n, weights)


def build_w_hat_literal(k: int, n: int) -> WeightFunction:
    """Reference implementation of build_w_hat summing over all C(k,3) faces.

    Quadratically slower; kept as the oracle for the face-count shortcut.
    """
    if k < 3:
        raise ValueError(f"need k >= 3, got {k}")
    _require_divisible(n)
    w3 = build_w3(n)
    from itertools import combinations

    nfaces = comb(k, 3)
    weights: dict[Edge, Fraction] = {}
    for x, y in enumerate_edges(k, n):
        acc = Fraction(0)
        SU = support(x) | support(y)
        for face in combinations(range(k), 3):
            if SU <= set(face):
                acc += _embedded_w3_value(x, y, face, w3)
        if acc != 0:
            weights[(x, y)] = acc / nfaces
    return WeightFunction(k, n, weights)


def build_w_prime(k: int, n: int) -> WeightFunction:
    """Weight 1/C(k,2) on every edge lying on a line between two terminals."""
    if k < 2:
        raise ValueError(f"need k >= 2, got {k}")
    if n < 2:
        raise ValueError(f"need n >= 2, got {n}")
    val = Fraction(1, comb(k, 2))
    weights: dict[Edge, Fraction] = {}
    for x, y in enumerate_edges(k, n):
        if len(support(x) | support(y)) == 2:
            weights[(x, y)] = val
    return WeightFunction(k, n, weights)


def build_w_tilde(k: int, n: int) -> WeightFunction:
    """((k-2)/(k-1)) * w_hat + (1/(k-1)) * w_prime."""
    if k < 3:
        raise ValueError(f"need k >= 3, got {k}")
    _require_divisible(n)
    return combine(
        Fraction(k - 2, k - 1),
        build_w_hat(k, n),
        Fraction(1, k - 1),
        build_w_prime(k, n),
    )


def lpc_w3_closed(n: int) -> Fraction:
    return Fraction(5, 6) + Fraction(1, 2 * n)


def lpc_w_tilde_closed(k: int, n: int) -> Fraction:
    return Fraction(k - 2, k - 1) * lpc_w3_closed(n) + Fraction(1, k - 1)


BUILDERS = {
    "w3": lambda k, n: build_w3(n),
    "fk": lambda k, n: build_fk(),
    "what": build_w_hat,
    "wprime": build_w_prime,
    "wtilde": build_w_tilde,
}
