"""Planar primitives over integer coordinates.

Points are ``(x, y)`` tuples of ints, so every orientation test is an
exact integer determinant.  The sweep order used throughout sorts by
``x`` ascending and breaks ties by ``y`` descending, which keeps the
lower boundary of a configuration first among vertically aligned
points.
"""
from __future__ import annotations

from typing import Iterable, Sequence

Point = tuple[int, int]


def orient(a: Point, b: Point, c: Point) -> int:
    """Sign of the cross product (b - a) x (c - a).

    Positive when the triple turns counterclockwise, i.e. c lies
    strictly above the directed line a -> b.
    """
    d = (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0])
    return (d > 0) - (d < 0)


def sweep_key(p: Point) -> tuple[int, int]:
    return (p[0], -p[1])


def sweep_compare(p: Point, q: Point) -> int:
    """-1, 0 or 1 as p comes before, equals or comes after q in sweep order."""
    a, b = sweep_key(p), sweep_key(q)
    return (a > b) - (a < b)


def lower_hull(points: Sequence[Point]) -> tuple[Point, ...]:
    """Corners of the lower convex boundary, in sweep order."""
    pts = sorted(set(points), key=sweep_key)
    chain: list[Point] = []
    for p in pts:
        while len(chain) >= 2 and orient(chain[-2], chain[-1], p) <= 0:
            chain.pop()
        chain.append(p)
    return tuple(chain)


def upper_hull(points: Sequence[Point]) -> tuple[Point, ...]:
    """Corners of the upper convex boundary, in sweep order."""
    pts = sorted(set(points), key=sweep_key)
    chain: list[Point] = []
    for p in pts:
        while len(chain) >= 2 and orient(chain[-2], chain[-1], p) >= 0:
            chain.pop()
        chain.append(p)
    return tuple(chain)


def hull_points(points: Sequence[Point]) -> set[Point]:
    """All points lying on the convex boundary (corners or not)."""
    out: set[Point] = set()
    for chain in (lower_hull(points), upper_hull(points)):
        for a, b in zip(chain, chain[1:]):
            for p in points:
                if on_segment(p, a, b):
                    out.add(p)
    if len(set(points)) == 1:
        out.update(points)
    return out


def extremal_points(points: Sequence[Point]) -> set[Point]:
    """Corners of the convex hull."""
    lo = lower_hull(points)
    hi = upper_hull(points)
    if len(lo) <= 2 and len(hi) <= 2:
        # collinear configuration: every point of the segment hull that
        # is an endpoint is extremal; interior collinear points are not
        pts = sorted(set(points), key=sweep_key)
        return {pts[0], pts[-1]} if pts else set()
    return set(lo) | set(hi)


def on_segment(p: Point, a: Point, b: Point) -> bool:
    """True when p lies on the closed segment [a, b]."""
    if orient(a, b, p) != 0:
        return False
    return (
        min(a[0], b[0]) <= p[0] <= max(a[0], b[0])
        and min(a[1], b[1]) <= p[1] <= max(a[1], b[1])
    )


def point_on_path(p: Point, path: Sequence[Point]) -> bool:
    return any(on_segment(p, a, b) for a, b in zip(path, path[1:]))


def point_vs_path(p: Point, path: Sequence[Point]) -> int:
    """+1 / 0 / -1 for p above / on / below an x-monotone path.

    The path's corners must be strictly increasing in x and p's abscissa
    must lie within the path's x-range.
    """
    if point_on_path(p, path):
        return 0
    for a, b in zip(path, path[1:]):
        if a[0] <= p[0] <= b[0]:
            s = orient(a, b, p)
            if s == 0:
                # collinear with a vertical segment but beyond its ends:
                # earlier in sweep order counts as above
                return 1 if sweep_key(p) < sweep_key(a) else -1
            return s
    raise ValueError(f"point {p} outside the x-range of the path")


def path_corners(path: Sequence[Point]) -> tuple[Point, ...]:
    """Drop interior vertices that lie on the segment joining their
    neighbours, collapsing collinear runs of any length."""
    out = list(path)
    changed = True
    while changed and len(out) > 2:
        changed = False
        for i in range(1, len(out) - 1):
            if on_segment(out[i], out[i - 1], out[i + 1]):
                del out[i]
                changed = True
                break
    return tuple(out)


class Configuration:
    """A finite set of integer points, at least 1, stored in sweep order."""

    __slots__ = ("points",)

    def __init__(self, points: Iterable[Point]):
        pts = [(int(x), int(y)) for x, y in points]
        if len(set(pts)) != len(pts):
            raise ValueError("configuration has repeated points")
        if not pts:
            raise ValueError("configuration is empty")
        self.points = tuple(sorted(pts, key=sweep_key))

    def __len__(self) -> int:
        return len(self.points)

    def __iter__(self):
        return iter(self.points)

    def __eq__(self, other) -> bool:
        return isinstance(other, Configuration) and self.points == other.points

    def __hash__(self) -> int:
        return hash(self.points)

    def __repr__(self) -> str:
        return f"Configuration({list(self.points)!r})"

    def extremal(self) -> set[Point]:
        return extremal_points(self.points)

    def lower_boundary(self) -> tuple[Point, ...]:
        return lower_hull(self.points)

    def upper_boundary(self) -> tuple[Point, ...]:
        return upper_hull(self.points)

    def all_collinear(self) -> bool:
        p = self.points
        return all(orient(p[0], p[1], q) == 0 for q in p[2:]) if len(p) >= 3 else True


class NearEdge:
    """Points with strictly increasing x coordinates, in that order."""

    __slots__ = ("points",)

    def __init__(self, points: Iterable[Point]):
        pts = tuple((int(x), int(y)) for x, y in points)
        if len(pts) < 2:
            raise ValueError("a near-edge needs at least two points")
        if any(a[0] >= b[0] for a, b in zip(pts, pts[1:])):
            raise ValueError("near-edge x coordinates must strictly increase")
        self.points = pts

    def __len__(self) -> int:
        return len(self.points)

    def __iter__(self):
        return iter(self.points)

    def __eq__(self, other) -> bool:
        return isinstance(other, NearEdge) and self.points == other.points

    def __hash__(self) -> int:
        return hash(self.points)

    def __repr__(self) -> str:
        return f"NearEdge({list(self.points)!r})"

    @property
    def weight(self) -> int:
        """Number of gaps, i.e. len - 1."""
        return len(self.points) - 1

    def lower_corners(self) -> tuple[Point, ...]:
        return lower_hull(self.points)

    def is_straight(self) -> bool:
        p = self.points
        return all(orient(p[0], p[-1], q) == 0 for q in p[1:-1])

    def is_convex(self) -> bool:
        """True when every point is a corner of the convex hull."""
        return extremal_points(self.points) == set(self.points)

    def translate_to_origin(self) -> "NearEdge":
        x0, y0 = self.points[0]
        return NearEdge((x - x0, y - y0) for x, y in self.points)

    def mirror(self) -> "NearEdge":
        """Reflect across a vertical axis, keeping the first abscissa."""
        x0 = self.points[0][0]
        xn = self.points[-1][0]
        return NearEdge((x0 + xn - x, y) for x, y in reversed(self.points))


def hulls(
    config: Configuration,
) -> tuple[tuple[Point, ...], tuple[Point, ...], set[Point]]:
    """(lower boundary, upper boundary, extremal vertices) of a configuration."""
    return config.lower_boundary(), config.upper_boundary(), config.extremal()


def validate_near_edge(points: Iterable[Point]) -> NearEdge:
    """Build a near-edge, enforcing the strictly increasing abscissa rule."""
    return NearEdge(points)


def vertical_mirror(edge: NearEdge) -> NearEdge:
    """The mirror image of a near-edge across a vertical axis."""
    return edge.mirror()


def convex_profile(edge: NearEdge) -> tuple[int, ...] | None:
    """Signs (+1 above / -1 below the end chord) of the interior points.

    Returns None unless the edge is convex with no interior point on the
    chord; a straight two-point edge has the empty profile.
    """
    if not edge.is_convex():
        return None
    a, b = edge.points[0], edge.points[-1]
    out = []
    for p in edge.points[1:-1]:
        s = orient(a, b, p)
        if s == 0:
            return None
        out.append(s)
    return tuple(out)


def profile_realization(profile: Sequence[int]) -> NearEdge:
    """A canonical convex near-edge with the given interior sign profile."""
    n = len(profile) + 1
    pts: list[Point] = [(0, 0)]
    for i, eps in enumerate(profile, start=1):
        if eps not in (1, -1):
            raise ValueError(f"profile entries must be +1 or -1, got {eps}")
        pts.append((i, eps * i * (n - i)))
    pts.append((n, 0))
    edge = NearEdge(pts)
    if convex_profile(edge) != tuple(profile):
        raise AssertionError("canonical realization failed to be convex")
    return edge


def factorize(edge: NearEdge) -> list[NearEdge]:
    """Split a near-edge into its prime factors.

    A split position k is valid when every later point lies strictly
    above each line through two of the first k+1 points, and every
    earlier point lies strictly above each line through two of the
    last n-k+1 points.  Factors are translated to start at the origin.
    """
    pts = edge.points
    n = len(pts) - 1

    def splits_at(k: int) -> bool:
        head, tail = pts[: k + 1], pts[k:]
        for i in range(len(head)):
            for j in range(i + 1, len(head)):
                if any(orient(head[i], head[j], q) <= 0 for q in pts[k + 1 :]):
                    return False
        for i in range(len(tail)):
            for j in range(i + 1, len(tail)):
                if any(orient(tail[i], tail[j], q) <= 0 for q in pts[:k]):
                    return False
        return True

    factors: list[NearEdge] = []
    start = 0
    for k in range(1, n):
        if splits_at(k):
            factors.append(NearEdge(pts[start : k + 1]).translate_to_origin())
            start = k
    factors.append(NearEdge(pts[start:]).translate_to_origin())
    return factors


def order_type_equivalent(a: Sequence[Point], b: Sequence[Point]) -> bool:
    """Same orientation on every index triple, after sweep sorting both."""
    pa = sorted(a, key=sweep_key)
    pb = sorted(b, key=sweep_key)
    if len(pa) != len(pb):
        raise ValueError("order types are only comparable at equal sizes")
    n = len(pa)
    for i in range(n):
        for j in range(i + 1, n):
            for k in range(j + 1, n):
                if orient(pa[i], pa[j], pa[k]) != orient(pb[i], pb[j], pb[k]):
                    return False
    return True


def convex_polygon_points(l: int, scale: int = 1 << 20) -> tuple[Point, ...]:
    """A strictly convex integer l-gon, counterclockwise.

    Vertices are rounded from a regular polygon; the scale doubles until
    the rounding artefacts leave every corner strictly convex.
    """
    from math import cos, sin, tau

    if l < 3:
        raise ValueError(f"a polygon needs at least three corners, got {l}")
    while True:
        pts = tuple(
            (round(scale * cos(tau * i / l)), round(scale * sin(tau * i / l)))
            for i in range(l)
        )
        if len(set(pts)) == l and all(
            orient(pts[i], pts[(i + 1) % l], pts[(i + 2) % l]) > 0
            for i in range(l)
        ):
            return pts
        scale *= 2


def parse_points(text: str) -> list[Point]:
    """Parse one `x y` pair per line; `#` starts a comment."""
    out: list[Point] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.replace(",", " ").split()
        if len(parts) != 2:
            raise ValueError(f"line {lineno}: expected `x y`, got {raw!r}")
        try:
            out.append((int(parts[0]), int(parts[1])))
        except ValueError:
            raise ValueError(f"line {lineno}: coordinates must be integers: {raw!r}")
    return out


def load_points(path: str) -> list[Point]:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_points(fh.read())
