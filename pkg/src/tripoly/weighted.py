"""Triangulation polynomials of weighted convex polygons.

A convex polygon with side weights (a_1, ..., a_l) stands for the
configuration whose i-th side carries a_i - 1 extra collinear points
splitting it into a_i equal parts.  Its polynomials come straight from
the edge basis: the maximal count pairs the product of the p_{a_i}, the
complete polynomial pairs the product of the pbar_{a_i}.  The pairing
stays valid for two-sided polygons; digon_max_count gives the same
numbers in closed binomial form and also covers weight 0 by convention.
"""
from __future__ import annotations

from math import comb, lcm
from typing import Sequence

from .exactmath import (
    PolyS,
    PolyST,
    PolyT,
    catalan_pair_st,
    catalan_pair_t,
    complete_edge_basis,
    maximal_edge_basis,
)
from .planar import Configuration, NearEdge, convex_polygon_points

_COMPLETE_CACHE: dict[tuple[int, ...], dict[int, int]] = {}


def weight_multiset_normalize(weights: Sequence[int]) -> tuple[int, ...]:
    """Sorted weight tuple; both polynomials depend only on this."""
    return tuple(sorted(int(w) for w in weights))


def digon_max_count(a: int, b: int) -> int:
    """Maximal triangulations of the two-sided polygon with weights a, b.

    Both boundary chains join the same two corners; the count is
    binom(a + b - 4, a - 2), with the degenerate low weights fixed by
    convention: a weightless pair counts one, a single unit side can
    only face another unit side.
    """
    a, b = sorted((int(a), int(b)))
    if a < 0:
        raise ValueError("side weights must be >= 0")
    if a == 0:
        return 1 if b == 0 else 0
    if a == 1:
        return 1 if b == 1 else 0
    return comb(a + b - 4, a - 2)


def weighted_max_count(weights: Sequence[int]) -> int:
    """Maximal triangulations of a weighted convex polygon (two or more sides)."""
    ws = [int(w) for w in weights]
    if len(ws) < 2:
        raise ValueError("a polygon needs at least two sides")
    if any(w < 1 for w in ws):
        raise ValueError("side weights must be >= 1")
    prod = PolyT({0: 1})
    for w in ws:
        prod = prod * maximal_edge_basis(w)
    return catalan_pair_t(prod)


def weighted_complete_poly(weights: Sequence[int]) -> PolyS:
    """Complete triangulation polynomial of a weighted convex polygon."""
    ws = [int(w) for w in weights]
    if len(ws) < 2:
        raise ValueError("a polygon needs at least two sides")
    if any(w < 1 for w in ws):
        raise ValueError("side weights must be >= 1")
    key = weight_multiset_normalize(ws)
    cached = _COMPLETE_CACHE.get(key)
    if cached is None:
        prod = PolyST({(0, 0): 1})
        for w in ws:
            prod = prod * complete_edge_basis(w)
        cached = catalan_pair_st(prod).c
        _COMPLETE_CACHE[key] = cached
    return PolyS(dict(cached))


def weighted_polygon_config(weights: Sequence[int]) -> Configuration:
    """An integer realization of the weighted polygon.

    The corner polygon is scaled by the least common multiple of the
    weights so that the equal subdivision points of every side land on
    integer coordinates.
    """
    ws = [int(w) for w in weights]
    if len(ws) < 3:
        raise ValueError("a realizable polygon needs at least three sides")
    if any(w < 1 for w in ws):
        raise ValueError("side weights must be >= 1")
    base = convex_polygon_points(len(ws))
    scale = lcm(*ws)
    pts = []
    for i, a in enumerate(ws):
        bx, by = base[i]
        nx, ny = base[(i + 1) % len(ws)]
        dx, dy = nx - bx, ny - by
        for j in range(a):
            t = j * (scale // a)
            pts.append((scale * bx + t * dx, scale * by + t * dy))
    return Configuration(pts)


def straight_edge(a: int) -> NearEdge:
    """The weight-a edge whose points all sit on one line."""
    if a < 1:
        raise ValueError("edge weight must be >= 1")
    return NearEdge((i, 0) for i in range(a + 1))
