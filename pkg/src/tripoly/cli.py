"""Command line front end.

Point files hold one ``x y`` pair per line (``#`` starts a comment).
Near-edge files list their points left to right; configuration files may
use any order.  Paths for the region verbs are comma-separated 0-based
positions in the sweep order of the file's points.

Exit codes: 0 on success, 1 on any input problem, 2 when a brute-force
guard refuses the instance.
"""
from __future__ import annotations

import argparse
import json
import sys
from typing import Callable, Sequence

from .exactmath import (
    PolyS,
    PolyST,
    PolyT,
    hankel_recover,
    maximal_edge_basis,
    p_basis_coefficients,
)
from .neargon import (
    EDGE_METHODS,
    NearGon,
    compose,
    edge_poly,
    realize,
    recover_edge_poly_from_counts,
)
from .oracle import GuardExceeded, oracle_complete_poly, oracle_region_poly
from .planar import Configuration, NearEdge, load_points
from .transfer import (
    _region_host,
    complete_config_poly,
    complete_edge_poly_tm,
    max_config_count,
    region_poly,
    render_vector,
)
from .weighted import weighted_complete_poly, weighted_max_count


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    """argparse variant that reports errors instead of exiting."""

    def error(self, message: str) -> None:  # type: ignore[override]
        raise _UsageError(f"{message}\n{self.format_usage().rstrip()}")


def _build_parser() -> _Parser:
    parser = _Parser(prog="tripoly", description=__doc__)
    sub = parser.add_subparsers(dest="verb", parser_class=_Parser)
    sub.required = True

    def add(verb: str, help_: str) -> argparse.ArgumentParser:
        return sub.add_parser(verb, help=help_)

    p = add("poly", "complete triangulation polynomial of a configuration")
    p.add_argument("file")
    p.add_argument("--json", action="store_true")
    p.add_argument("--trace", action="store_true")

    p = add("maxcount", "number of maximal triangulations of a configuration")
    p.add_argument("file")
    p.add_argument("--json", action="store_true")
    p.add_argument("--trace", action="store_true")

    p = add("region", "triangulation polynomial of a region between two paths")
    p.add_argument("file")
    p.add_argument("--floor", required=True)
    p.add_argument("--ceiling", required=True)
    p.add_argument("--maximal", action="store_true")
    p.add_argument("--json", action="store_true")
    p.add_argument("--trace", action="store_true")

    p = add("edgepoly", "complete polynomial of a near-edge")
    p.add_argument("file")
    p.add_argument("--method", choices=EDGE_METHODS, default="auto")
    p.add_argument("--json", action="store_true")

    p = add("edgepoly-tm", "near-edge polynomial by the transfer iteration")
    p.add_argument("file")
    p.add_argument("--json", action="store_true")
    p.add_argument("--trace", action="store_true")

    p = add("weighted", "polynomial of a weighted convex polygon")
    p.add_argument("weights", nargs="+", type=int)
    p.add_argument("--maximal", action="store_true")
    p.add_argument("--json", action="store_true")

    p = add("neargon", "compose near-edge files around a convex polygon")
    p.add_argument("files", nargs="+")
    p.add_argument("--maximal", action="store_true")
    p.add_argument("--json", action="store_true")

    p = add("recover", "maximal edge polynomial from closure counts")
    p.add_argument("counts", nargs="+", type=int)
    p.add_argument("--range", required=True, dest="basis_range")
    p.add_argument("--json", action="store_true")

    p = add("realize", "integer configuration of a near-gon")
    p.add_argument("files", nargs="+")
    p.add_argument("-o", dest="out")

    p = add("oracle", "brute-force polynomial of a small configuration")
    p.add_argument("file")
    p.add_argument("--json", action="store_true")

    p = add("oracle-region", "brute-force polynomial of a small region")
    p.add_argument("file")
    p.add_argument("--floor", required=True)
    p.add_argument("--ceiling", required=True)
    p.add_argument("--json", action="store_true")

    add("selftest", "run the pinned example suite")
    return parser


def _indices(text: str, name: str) -> tuple[int, ...]:
    try:
        return tuple(int(part) for part in text.split(","))
    except ValueError:
        raise ValueError(f"--{name} wants comma-separated integers, got {text!r}")


def _json_s(poly: PolyS) -> str:
    terms = [
        {"s": e, "coeff": str(poly.coeff(e))}
        for e in sorted(poly.c, reverse=True)
    ]
    return json.dumps({"terms": terms})


def _json_t(poly: PolyT) -> str:
    terms = [
        {"t": e, "coeff": str(poly.coeff(e))}
        for e in sorted(poly.c, reverse=True)
    ]
    return json.dumps({"terms": terms})


def _json_st(poly: PolyST) -> str:
    if not poly.integral_s():
        raise AssertionError("fractional s power in a final polynomial")
    terms = [
        {"s": h // 2, "t": t, "coeff": str(poly.c[(h, t)])}
        for h, t in sorted(poly.c, key=lambda k: (-k[0], -k[1]))
    ]
    return json.dumps({"terms": terms})


def _json_count(value: int) -> str:
    return json.dumps({"count": str(value)})


def _tracer(out, host) -> Callable[[int, dict, dict], None]:
    def trace(k: int, vec: dict, w: dict) -> None:
        print(f"V_{k} = {render_vector(host, vec)}", file=out)

    return trace


def _load_config(path: str) -> Configuration:
    return Configuration(load_points(path))


def _load_edge(path: str) -> NearEdge:
    return NearEdge(load_points(path))


def _run_verb(args: argparse.Namespace, out) -> int:
    verb = args.verb

    if verb == "poly" or verb == "maxcount":
        cfg = _load_config(args.file)
        trace = _tracer(out, cfg.points) if args.trace else None
        if verb == "poly":
            poly = complete_config_poly(cfg, trace=trace)
            print(_json_s(poly) if args.json else poly.text(), file=out)
        else:
            count = max_config_count(cfg, trace=trace)
            print(_json_count(count) if args.json else count, file=out)
        return 0

    if verb == "region":
        cfg = _load_config(args.file)
        floor = _indices(args.floor, "floor")
        ceiling = _indices(args.ceiling, "ceiling")
        trace = None
        if args.trace:
            host, _, _ = _region_host(cfg, floor, ceiling)
            trace = _tracer(out, host)
        result = region_poly(
            cfg, floor, ceiling, maximal=args.maximal, trace=trace
        )
        if args.maximal:
            print(_json_count(result) if args.json else result, file=out)
        else:
            print(_json_s(result) if args.json else result.text(), file=out)
        return 0

    if verb == "edgepoly":
        ep = edge_poly(_load_edge(args.file), method=args.method)
        print(_json_st(ep.complete) if args.json else ep.complete.text(), file=out)
        return 0

    if verb == "edgepoly-tm":
        edge = _load_edge(args.file)
        trace = _tracer(out, edge.points) if args.trace else None
        poly = complete_edge_poly_tm(edge, trace=trace)
        print(_json_st(poly) if args.json else poly.text(), file=out)
        return 0

    if verb == "weighted":
        if args.maximal:
            count = weighted_max_count(tuple(args.weights))
            print(_json_count(count) if args.json else count, file=out)
        else:
            poly = weighted_complete_poly(tuple(args.weights))
            print(_json_s(poly) if args.json else poly.text(), file=out)
        return 0

    if verb == "neargon":
        polys = tuple(edge_poly(_load_edge(f)) for f in args.files)
        result = compose(polys, maximal=args.maximal)
        if args.maximal:
            print(_json_count(result) if args.json else result, file=out)
        else:
            print(_json_s(result) if args.json else result.text(), file=out)
        return 0

    if verb == "recover":
        span = _indices(args.basis_range, "range")
        if len(span) != 2:
            raise ValueError(f"--range wants two integers, got {args.basis_range!r}")
        poly = recover_edge_poly_from_counts(tuple(args.counts), (span[0], span[1]))
        print(_json_t(poly) if args.json else poly.text(), file=out)
        return 0

    if verb == "realize":
        edges = tuple(_load_edge(f) for f in args.files)
        cfg = realize(NearGon(edges))
        lines = "\n".join(f"{x} {y}" for x, y in cfg.points)
        if args.out:
            with open(args.out, "w", encoding="utf-8") as fh:
                fh.write(lines + "\n")
        else:
            print(lines, file=out)
        return 0

    if verb == "oracle":
        poly = oracle_complete_poly(_load_config(args.file))
        print(_json_s(poly) if args.json else poly.text(), file=out)
        return 0

    if verb == "oracle-region":
        cfg = _load_config(args.file)
        floor = _indices(args.floor, "floor")
        ceiling = _indices(args.ceiling, "ceiling")
        poly = oracle_region_poly(cfg, floor, ceiling)
        print(_json_s(poly) if args.json else poly.text(), file=out)
        return 0

    if verb == "selftest":
        return _selftest(out)

    raise ValueError(f"unknown verb {verb!r}")


def _selftest(out) -> int:
    EDGE_A = NearEdge(((0, 0), (1, 1), (2, -1), (3, 1), (4, -1), (5, 0)))
    EDGE_B = NearEdge(((0, 0), (1, 1), (2, -1), (3, 1), (4, 0)))
    EDGE_C = NearEdge(((0, 0), (1, 2), (2, 1), (3, -1), (4, 1), (5, 0)))
    SQUEEZE = ((0, 3), (0, 1), (1, 3), (1, 2), (1, 1), (2, 2), (2, 1), (2, 0))
    GON = {14: 194939, 13: 338669, 12: 263615, 11: 119944, 10: 34773,
           9: 6522, 8: 748, 7: 42}

    def closure_counts() -> bool:
        fans = ((1, 10), (2, 11), (3, 10))
        got = [
            max_config_count(Configuration(EDGE_C.points + fans[:j]))
            for j in (1, 2, 3)
        ]
        return got == [19, 87, 334]

    def recovery() -> bool:
        want = (
            10 * maximal_edge_basis(3)
            + 7 * maximal_edge_basis(4)
            + 2 * maximal_edge_basis(5)
        )
        return recover_edge_poly_from_counts((19, 87, 334), (3, 5)) == want

    checks: list[tuple[str, Callable[[], bool]]] = [
        (
            "weighted pentagon count",
            lambda: weighted_max_count((1, 5, 2, 3, 4)) == 8046,
        ),
        (
            "weighted pentagon polynomial",
            lambda: weighted_complete_poly((1, 5, 2, 3, 4)).c
            == {15: 8046, 14: 37250, 13: 77467, 12: 95364, 11: 77048,
                10: 42776, 9: 16584, 8: 4460, 7: 805, 6: 90, 5: 5},
        ),
        (
            "weighted triangle polynomial",
            lambda: weighted_complete_poly((5, 4, 5)).c
            == {14: 901, 13: 4825, 12: 11734, 11: 17130, 10: 16710,
                9: 11466, 8: 5670, 7: 2034, 6: 525, 5: 95, 4: 11, 3: 1},
        ),
        (
            "zigzag edge polynomial",
            lambda: edge_poly(EDGE_A).p_coefficients()
            == {5: {3: 14, 4: 7, 5: 1}, 4: {2: 10, 3: 7, 4: 2},
                3: {1: 2, 2: 2, 3: 1}},
        ),
        (
            "edge transfer iteration",
            lambda: complete_edge_poly_tm(EDGE_C) == edge_poly(EDGE_C).complete,
        ),
        (
            "three edge composition",
            lambda: compose(tuple(edge_poly(e) for e in (EDGE_A, EDGE_B, EDGE_C))).c
            == GON,
        ),
        (
            "squeezed region polynomial",
            lambda: region_poly(
                Configuration(SQUEEZE), (0, 1, 7), (0, 2, 3, 5, 6, 7)
            ).c
            == {8: 12, 7: 16, 6: 5},
        ),
        ("fan closure counts", closure_counts),
        ("edge recovery", recovery),
        (
            "monomial recovery",
            lambda: hankel_recover((1, 2, 6), 2, 4)
            == PolyT({4: 1, 3: -2, 2: 1}),
        ),
        (
            "realized near-gon",
            lambda: complete_config_poly(realize(NearGon((EDGE_A, EDGE_B, EDGE_C)))).c
            == GON,
        ),
        (
            "oracle quadrilateral",
            lambda: oracle_complete_poly(
                Configuration(((0, 0), (2, 0), (2, 2), (0, 2)))
            ).c
            == {4: 2},
        ),
        (
            "oracle region",
            lambda: oracle_region_poly(
                Configuration(SQUEEZE), (0, 1, 7), (0, 2, 3, 5, 6, 7)
            ).c
            == {8: 12, 7: 16, 6: 5},
        ),
    ]
    failures = 0
    for name, check in checks:
        try:
            ok = check()
        except Exception as exc:  # pragma: no cover - defensive
            ok = False
            print(f"FAIL {name}: {exc}", file=out)
            failures += 1
            continue
        if ok:
            print(f"ok   {name}", file=out)
        else:
            print(f"FAIL {name}", file=out)
            failures += 1
    print(
        f"{len(checks) - failures} of {len(checks)} examples passed",
        file=out,
    )
    return 1 if failures else 0


def run(argv: Sequence[str], out=None) -> int:
    """Execute one command line; returns the exit status."""
    if out is None:
        out = sys.stdout
    parser = _build_parser()
    try:
        args = parser.parse_args(list(argv))
    except _UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    try:
        return _run_verb(args, out)
    except GuardExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
