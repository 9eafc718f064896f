"""Transfer iteration sweeping a region by decorated roofs.

The host is a sequence of points in sweep order.  A state vector maps
decorated-roof codes to multiplicities; one transfer step replaces every
state by the sum of its successor states.  Fresh states are injected
from the floor of the region, and whenever a state's skyline reaches the
ceiling it pays off into the accumulating polynomial.

Exponent bookkeeping runs in half units of s: a state reached at step k
with a roof of length L (segments) accounts for (2 + k + L)/2 used
vertices, an even half because every move changes k + L by zero or two.
"""
from __future__ import annotations

from itertools import combinations
from typing import Callable, Mapping, Sequence

from . import roofs as roofmod
from .exactmath import PolyS, PolyST, maximal_edge_basis
from .planar import (
    Configuration,
    NearEdge,
    Point,
    lower_hull,
    on_segment,
    orient,
    path_corners,
    point_on_path,
    point_vs_path,
    sweep_key,
    upper_hull,
)
from .roofs import DecoratedRoof, decode, encode, skyline_points

TraceFn = Callable[[int, dict[int, int], dict[int, int]], None]


def _path_prefix(part: Sequence[Point], corners: Sequence[Point]) -> bool:
    """True when the corner path ``part`` is an initial piece of ``corners``.

    All corners must coincide except that the last point of ``part`` may
    lie anywhere on the corresponding segment of the longer path.
    """
    if len(part) > len(corners):
        return False
    if len(part) == 1:
        return part[0] == corners[0]
    for i in range(len(part) - 1):
        if part[i] != corners[i]:
            return False
    last = part[-1]
    j = len(part) - 1
    return last == corners[j] or on_segment(last, corners[j - 1], corners[j])


class _Engine:
    """Cached successor machine over a fixed host point sequence."""

    def __init__(
        self,
        points: Sequence[Point],
        *,
        ceiling: Sequence[Point] | None = None,
        immediate: bool = False,
        prune: bool = False,
    ):
        self.points = tuple(points)
        self.n = len(self.points) - 1
        self.immediate = immediate
        self.ceiling = tuple(ceiling) if ceiling is not None else None
        self.prune = bool(prune) and self.ceiling is not None
        if self.ceiling is not None:
            self.ceiling_corners = path_corners(self.ceiling)
            self.on_ceiling = tuple(
                point_on_path(p, self.ceiling) for p in self.points
            )
            self.ceiling_set = frozenset(
                i for i, hit in enumerate(self.on_ceiling) if hit
            )
        else:
            self.ceiling_corners = None
            self.on_ceiling = None
            self.ceiling_set = None
        self._orient_cache: dict[tuple[int, int, int], int] = {}
        self._minimal_cache: dict[tuple[int, int, int], bool] = {}
        self._succ: dict[int, tuple[int, ...]] = {}
        self._match: dict[int, tuple[bool, int]] = {}

    def _orient3(self, i: int, j: int, k: int) -> int:
        key = (i, j, k)
        s = self._orient_cache.get(key)
        if s is None:
            p = self.points
            s = orient(p[i], p[j], p[k])
            self._orient_cache[key] = s
        return s

    def _minimal3(self, i: int, j: int, k: int) -> bool:
        key = (i, j, k)
        s = self._minimal_cache.get(key)
        if s is None:
            s = roofmod.closed_triangle_empty(self.points, i, j, k)
            self._minimal_cache[key] = s
        return s

    def _dead_end(self, roof: DecoratedRoof) -> bool:
        """Frozen-prefix test: the roof touches the ceiling at or before
        its marker along a path the ceiling does not follow."""
        idx = roof.indices
        for pos in range(roof.d, -1, -1):
            if self.on_ceiling[idx[pos]]:
                prefix = path_corners(
                    tuple(self.points[i] for i in idx[: pos + 1])
                )
                return not _path_prefix(prefix, self.ceiling_corners)
        return False

    def successor_codes(self, code: int) -> tuple[int, ...]:
        out = self._succ.get(code)
        if out is None:
            roof = decode(code, self.n)
            nxt = roofmod.successors(
                self.points,
                roof,
                immediate=self.immediate,
                orient3=self._orient3,
                minimal3=self._minimal3,
            )
            if self.prune:
                nxt = [r for r in nxt if not self._dead_end(r)]
            out = tuple(sorted(encode(r, self.n) for r in nxt))
            self._succ[code] = out
        return out

    def apply(self, vec: Mapping[int, int]) -> dict[int, int]:
        out: dict[int, int] = {}
        for code, mult in vec.items():
            for nxt in self.successor_codes(code):
                out[nxt] = out.get(nxt, 0) + mult
        return out

    def _match_info(self, code: int) -> tuple[bool, int]:
        info = self._match.get(code)
        if info is None:
            roof = decode(code, self.n)
            length = len(roof.indices) - 1
            if self.immediate:
                ok = frozenset(roof.indices) == self.ceiling_set
            else:
                sky = path_corners(skyline_points(self.points, roof))
                ok = sky == self.ceiling_corners
            info = (ok, length)
            self._match[code] = info
        return info

    def w_image(self, vec: Mapping[int, int]) -> dict[int, int]:
        """Half-exponent -> coefficient over states whose skyline is the
        ceiling; the half exponent of a matching state is its length."""
        out: dict[int, int] = {}
        for code, mult in vec.items():
            ok, length = self._match_info(code)
            if ok:
                out[length] = out.get(length, 0) + mult
        return out


def initial_vectors(
    points: Sequence[Point], floor: Sequence[Point]
) -> dict[int, dict[int, int]]:
    """Floor states by injection step.

    Every roof made of the floor corners plus any subset of the other
    host points lying on the floor path starts the iteration with marker
    0, entering at the step equal to its length.
    """
    pts = tuple(points)
    n = len(pts) - 1
    pos = {p: i for i, p in enumerate(pts)}
    corners = path_corners(tuple(floor))
    corner_idx = []
    for c in corners:
        if c not in pos:
            raise ValueError(f"floor corner {c} is not a host point")
        corner_idx.append(pos[c])
    if corner_idx[0] != 0 or corner_idx[-1] != n:
        raise ValueError("floor must join the first and last host points")
    optional = [
        i
        for i, p in enumerate(pts)
        if i not in corner_idx and point_on_path(p, floor)
    ]
    out: dict[int, dict[int, int]] = {}
    for r in range(len(optional) + 1):
        for extra in combinations(optional, r):
            idx = tuple(sorted(corner_idx + list(extra)))
            code = encode(DecoratedRoof(idx, 0), n)
            k = len(idx) - 1
            level = out.setdefault(k, {})
            level[code] = level.get(code, 0) + 1
    return out


def apply_transfer(
    points: Sequence[Point],
    vec: Mapping[int, int],
    *,
    ceiling: Sequence[Point] | None = None,
    immediate: bool = False,
    prune: bool = False,
) -> dict[int, int]:
    """One transfer step applied to a state vector (codes -> counts)."""
    eng = _Engine(points, ceiling=ceiling, immediate=immediate, prune=prune)
    return eng.apply(vec)


def render_vector(points: Sequence[Point], vec: Mapping[int, int]) -> str:
    n = len(points) - 1
    parts = [
        f"{mult}*R{code}{decode(code, n).render()}"
        for code, mult in sorted(vec.items())
    ]
    return " + ".join(parts) if parts else "0"


def _step_bound(points: Sequence[Point], kmax: int) -> int:
    xs = [p[0] for p in points]
    ys = [p[1] for p in points]
    return kmax + 2 * (max(xs) - min(xs)) * (max(ys) - min(ys)) + 4


def _run_complete(
    host: Sequence[Point],
    floor: Sequence[Point],
    ceiling: Sequence[Point],
    *,
    prune: bool = True,
    trace: TraceFn | None = None,
) -> PolyS:
    eng = _Engine(host, ceiling=ceiling, immediate=False, prune=prune)
    init = initial_vectors(host, floor)
    kmax = max(init)
    bound = _step_bound(host, kmax)
    total: dict[int, int] = {}
    vec: dict[int, int] = {}
    k = 0
    while vec or k < kmax:
        k += 1
        if k > bound:
            raise AssertionError("transfer iteration failed to terminate")
        vec = eng.apply(vec)
        for code, mult in init.get(k, {}).items():
            vec[code] = vec.get(code, 0) + mult
        w = eng.w_image(vec)
        if trace is not None:
            trace(k, dict(vec), dict(w))
        for length, coeff in w.items():
            h = 2 + k + length
            if h % 2:
                raise AssertionError("odd vertex count in a ceiling state")
            total[h // 2] = total.get(h // 2, 0) + coeff
    return PolyS(total)


def _run_max(
    host: Sequence[Point],
    floor: Sequence[Point],
    ceiling: Sequence[Point],
    *,
    trace: TraceFn | None = None,
) -> int:
    eng = _Engine(host, ceiling=ceiling, immediate=True, prune=False)
    start = tuple(
        i for i, p in enumerate(host) if point_on_path(p, floor)
    )
    if start[0] != 0 or start[-1] != eng.n:
        raise ValueError("floor must join the first and last host points")
    k = len(start) - 1
    vec = {encode(DecoratedRoof(start, 0), eng.n): 1}
    bound = _step_bound(host, k)
    total = 0
    while vec:
        w = eng.w_image(vec)
        if trace is not None:
            trace(k, dict(vec), dict(w))
        total += sum(w.values())
        vec = eng.apply(vec)
        k += 1
        if k > bound:
            raise AssertionError("transfer iteration failed to terminate")
    return total


def max_region_count_points(
    points: Sequence[Point],
    floor: Sequence[Point],
    ceiling: Sequence[Point],
    *,
    trace: TraceFn | None = None,
) -> int:
    """Maximal triangulations of the region between two paths, hosting
    exactly the given points (all of which must be used)."""
    return _run_max(points, floor, ceiling, trace=trace)


def _region_host(
    config: Configuration,
    floor_idx: Sequence[int],
    ceiling_idx: Sequence[int],
) -> tuple[tuple[Point, ...], tuple[Point, ...], tuple[Point, ...]]:
    """Validate a region of a configuration.

    Returns the participating points in sweep order together with the
    floor and ceiling as point paths.
    """
    pts = config.points
    for name, idxs in (("floor", floor_idx), ("ceiling", ceiling_idx)):
        if len(idxs) < 2:
            raise ValueError(f"{name} path needs at least two indices")
        if any(i < 0 or i >= len(pts) for i in idxs):
            raise ValueError(f"{name} path index out of range")
        if any(a >= b for a, b in zip(idxs, idxs[1:])):
            raise ValueError(
                f"{name} path must be strictly increasing in sweep order"
            )
    floor = tuple(pts[i] for i in floor_idx)
    ceiling = tuple(pts[i] for i in ceiling_idx)
    if floor[0] != ceiling[0] or floor[-1] != ceiling[-1]:
        raise ValueError("floor and ceiling must share their endpoints")
    if set(floor_idx[1:-1]) & set(ceiling_idx[1:-1]):
        raise ValueError("floor and ceiling share an interior point")
    for c in path_corners(floor)[1:-1]:
        if point_vs_path(c, ceiling) > 0:
            raise ValueError(f"floor corner {c} lies above the ceiling")
    for c in path_corners(ceiling)[1:-1]:
        if point_vs_path(c, floor) < 0:
            raise ValueError(f"ceiling corner {c} lies below the floor")
    lo, hi = floor[0], floor[-1]
    host = [
        p
        for p in pts
        if sweep_key(lo) <= sweep_key(p) <= sweep_key(hi)
        and lo[0] <= p[0] <= hi[0]
        and point_vs_path(p, floor) >= 0
        and point_vs_path(p, ceiling) <= 0
    ]
    host.sort(key=sweep_key)
    return tuple(host), floor, ceiling


def region_poly(
    config: Configuration,
    floor: Sequence[int],
    ceiling: Sequence[int],
    *,
    maximal: bool = False,
    prune: bool | None = None,
    trace: TraceFn | None = None,
) -> PolyS | int:
    """Triangulation polynomial (or maximal count) of a region.

    The region lies between two x-monotone paths through configuration
    points, given as strictly increasing index sequences in sweep order
    sharing their endpoints.  Triangulations use the path corners and
    any subset of the other participating points; the maximal count uses
    them all.
    """
    host, floor_path, ceiling_path = _region_host(config, floor, ceiling)
    if maximal:
        if prune:
            raise ValueError("dead-end pruning applies to complete runs only")
        return _run_max(host, floor_path, ceiling_path, trace=trace)
    if prune is None:
        prune = True
    return _run_complete(
        host, floor_path, ceiling_path, prune=prune, trace=trace
    )


def complete_config_poly(
    config: Configuration,
    *,
    prune: bool | None = None,
    trace: TraceFn | None = None,
) -> PolyS:
    """Complete triangulation polynomial of a configuration.

    Counts every triangulation of every subset containing the extremal
    points, graded by s per vertex used.
    """
    if len(config) < 3 or config.all_collinear():
        raise ValueError(
            "the configuration must have at least three non-collinear points"
        )
    if prune is None:
        prune = True
    host = config.points
    return _run_complete(
        host,
        lower_hull(host),
        upper_hull(host),
        prune=prune,
        trace=trace,
    )


def max_config_count(
    config: Configuration, *, trace: TraceFn | None = None
) -> int:
    """Number of maximal triangulations (every point a vertex)."""
    if len(config) < 3 or config.all_collinear():
        raise ValueError(
            "the configuration must have at least three non-collinear points"
        )
    host = config.points
    return _run_max(host, lower_hull(host), upper_hull(host), trace=trace)


def complete_edge_poly_tm(
    edge: NearEdge, *, trace: TraceFn | None = None
) -> PolyST:
    """Complete polynomial of a near-edge by the transfer iteration.

    With no ceiling every state pays off: a state of length L reached at
    step k contributes s^((k + L)/2) p_L, summing the basis images of
    all covering roofs over all sub-edges.
    """
    host = tuple(edge.points)
    eng = _Engine(host)
    init = initial_vectors(host, lower_hull(host))
    kmax = max(init)
    bound = _step_bound(host, kmax)
    acc: dict[tuple[int, int], int] = {}
    vec: dict[int, int] = {}
    lengths: dict[int, int] = {}
    k = 0
    while vec or k < kmax:
        k += 1
        if k > bound:
            raise AssertionError("transfer iteration failed to terminate")
        vec = eng.apply(vec)
        for code, mult in init.get(k, {}).items():
            vec[code] = vec.get(code, 0) + mult
        step: dict[int, int] = {}
        for code, mult in vec.items():
            length = lengths.get(code)
            if length is None:
                length = len(decode(code, eng.n).indices) - 1
                lengths[code] = length
            step[length] = step.get(length, 0) + mult
        if trace is not None:
            trace(k, dict(vec), dict(step))
        for length, mult in step.items():
            h = k + length
            if h % 2:
                raise AssertionError("odd vertex count in an edge state")
            key = (h, length)
            acc[key] = acc.get(key, 0) + mult
    out = PolyST()
    for (h, length), mult in sorted(acc.items()):
        out = out + mult * PolyST.from_t(maximal_edge_basis(length), h)
    return out
