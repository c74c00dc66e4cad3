"""Command-line front end.

Exit codes: 0 the property holds, 1 it fails (a witness is printed),
2 usage or input error.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from pathlib import Path
from typing import Optional, Sequence

from .adjacency import AdjacencySpec, complement_components, components, neighbor_count, neighbors
from .alexandrov import khalimsky_space_on
from .documents import (
    DocumentError,
    default_raster_window,
    document,
    dump_document,
    load_document,
    render_pgm,
    to_jsonable,
)
from .lattice import Window, as_point
from .manifold import (
    AXIOMS,
    AdjacencyPair,
    good_pair_table,
    is_digital_manifold,
    is_good_pair,
    jordan_check,
)

OK, FAIL, USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _point(text: str, dim: int):
    try:
        p = as_point(int(c) for c in text.split(","))
    except ValueError:
        raise UsageError(f"malformed point {text!r}") from None
    if len(p) != dim:
        raise UsageError(f"point {text!r} does not have dimension {dim}")
    return p


def _spec(text: str, dim: int) -> AdjacencySpec:
    try:
        return AdjacencySpec.parse(text, dim)
    except ValueError as err:
        raise UsageError(str(err)) from None


def _pair(alpha: str, beta: str, dim: int) -> AdjacencyPair:
    return AdjacencyPair(_spec(alpha, dim), _spec(beta, dim))


def _window(text: Optional[str], dim: int) -> Optional[Window]:
    """``lo,hi`` for the cube [lo,hi]^dim, or 2*dim numbers lo_1..lo_n,hi_1..hi_n."""
    if text is None:
        return None
    try:
        vals = [int(c) for c in text.split(",")]
        if len(vals) == 2:
            return Window((vals[0],) * dim, (vals[1],) * dim)
        if len(vals) == 2 * dim:
            return Window(tuple(vals[:dim]), tuple(vals[dim:]))
    except ValueError:
        pass
    raise UsageError(f"malformed window {text!r}")


def _load(path: str):
    try:
        return load_document(path)
    except DocumentError as err:
        raise UsageError(str(err)) from None


def _emit(report: dict, args, started: float) -> None:
    if getattr(args, "timing", False):
        report["timing"] = {"seconds": round(time.perf_counter() - started, 6)}
    print(json.dumps(report))


def _manifold_report(verdict) -> dict:
    out = {"holds": verdict.holds}
    if not verdict.holds:
        out["failed_axiom"] = verdict.failed_axiom
        out["axiom"] = AXIOMS[verdict.failed_axiom]
        out["witness"] = to_jsonable(verdict.witness)
    return out


# -- commands ----------------------------------------------------------------


def cmd_neighbors(args, started) -> int:
    a = _spec(args.adjacency, args.dim)
    p = _point(args.point, args.dim)
    print(dump_document(args.dim, neighbors(a, p)))
    return OK


def cmd_components(args, started) -> int:
    dim, pts = _load(args.file)
    a = _spec(args.adjacency, dim)
    w = _window(args.window, dim)
    report = {"command": "components", "adjacency": str(a), "complement": args.complement}
    try:
        if args.complement:
            part = complement_components(a, pts, w)
        else:
            part = components(a, pts)
    except ValueError as err:
        raise UsageError(str(err)) from None
    blocks = []
    for i, b in enumerate(part.blocks):
        if i == part.unbounded:
            blocks.append({"unbounded": True})
        else:
            entry = {"unbounded": False} if args.complement else {}
            entry["points"] = to_jsonable(b)
            blocks.append(entry)
    report["count"] = len(part)
    report["blocks"] = blocks
    _emit(report, args, started)
    return OK


def cmd_check_manifold(args, started) -> int:
    dim, pts = _load(args.file)
    if dim < 2:
        raise UsageError("manifold checks need dim >= 2")
    pair = _pair(args.alpha, args.beta, dim)
    try:
        verdict = is_digital_manifold(pts, pair, _window(args.window, dim))
    except ValueError as err:
        raise UsageError(str(err)) from None
    report = {
        "command": "check-manifold",
        "pair": [str(pair.alpha), str(pair.beta)],
        "verdict": "pass" if verdict.holds else "fail",
        **_manifold_report(verdict),
    }
    _emit(report, args, started)
    return OK if verdict.holds else FAIL


def cmd_good_pair(args, started) -> int:
    if args.dim < 2:
        raise UsageError("good pairs need dim >= 2")
    pair = _pair(args.alpha, args.beta, args.dim)
    v = is_good_pair(pair)
    report = {
        "command": "good-pair",
        "pair": [str(pair.alpha), str(pair.beta)],
        "verdict": "good" if v.holds else "not good",
        "references": to_jsonable(v.references),
    }
    if not v.holds:
        r = v.failed_reference
        report["witness"] = {
            "reference": list(r),
            "set": document(args.dim, neighbors(pair.beta, r)),
            "manifold": _manifold_report(v.manifold),
            "double_points": to_jsonable(v.double_points),
        }
    _emit(report, args, started)
    return OK if v.holds else FAIL


def _alias(n: int, k: int) -> str:
    return str(neighbor_count(AdjacencySpec.cubical(n, k)))


def cmd_good_pair_table(args, started) -> int:
    n = args.dim
    try:
        table = good_pair_table(n, allow_slow=args.allow_slow, workers=args.workers)
    except ValueError as err:
        raise UsageError(str(err)) from None
    good = [key for key, v in table.items() if v.holds]
    if args.json:
        report = {
            "command": "good-pair-table",
            "dim": n,
            "cells": [
                {"l": l, "k": k, "alias": [_alias(n, l), _alias(n, k)], "good": v.holds}
                for (l, k), v in table.items()
            ],
            "good": [list(key) for key in good],
        }
        _emit(report, args, started)
        return OK
    head = [f"k={k} ({_alias(n, k)})" for k in range(n)]
    width = max(len(h) for h in head) + 2
    lines = [
        f"cubical pairs (alpha_l, alpha_k) in Z^{n}: rows l (foreground), columns k (background)",
        " " * 10 + "".join(h.rjust(width) for h in head),
    ]
    for l in range(n):
        cells = ("good" if table[(l, k)].holds else "-" for k in range(n))
        lines.append(f"l={l} ({_alias(n, l)})".ljust(10) + "".join(c.rjust(width) for c in cells))
    named = " ".join(f"({_alias(n, l)},{_alias(n, k)})" for l, k in good)
    lines.append(f"good: {len(good)} of {n * n}: {named}")
    if args.timing:
        lines.append(f"time: {time.perf_counter() - started:.3f} s")
    print("\n".join(lines))
    return OK


def cmd_surface_check(args, started) -> int:
    if args.topology != "khalimsky":
        raise UsageError(f"unsupported topology {args.topology!r}")
    if not 1 <= args.dim <= 4:
        raise UsageError("surface checks support dim 1..4")
    p = _point(args.point, args.dim)
    ring = neighbors(AdjacencySpec.khalimsky(args.dim), p)
    holds = khalimsky_space_on(ring).is_k_surface(args.dim - 1)
    report = {
        "command": "surface-check",
        "topology": args.topology,
        "point": list(p),
        "surface_dim": args.dim - 1,
        "verdict": "pass" if holds else "fail",
        "set": document(args.dim, ring),
    }
    _emit(report, args, started)
    return OK if holds else FAIL


def cmd_jordan(args, started) -> int:
    dim, pts = _load(args.file)
    if dim < 2:
        raise UsageError("the Jordan harness needs dim >= 2")
    pair = _pair(args.alpha, args.beta, dim)
    rep = jordan_check(pts, pair)
    report = {
        "command": "jordan",
        "pair": [str(pair.alpha), str(pair.beta)],
        "verdict": "pass" if rep.separates else "fail",
        "components": rep.count,
        "boundary": rep.boundary_ok,
        "foreground_connected": rep.foreground_connected,
        "not_touching_all": [list(p) for p, ok in rep.touches.items() if not ok],
    }
    _emit(report, args, started)
    return OK if rep.separates else FAIL


def cmd_render(args, started) -> int:
    dim, pts = _load(args.file)
    if dim != 2:
        raise UsageError("render needs a 2-dimensional document")
    w = default_raster_window(pts, _window(args.window, 2))
    try:
        Path(args.out).write_bytes(render_pgm(pts, w))
    except OSError as err:
        raise UsageError(f"cannot write {args.out}: {err.strerror}") from None
    return OK


# -- parser ------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="digitop", description="Digital topology checks on Z^n."
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_):
        p = sub.add_parser(name, help=help_)
        p.set_defaults(func=func)
        p.add_argument("--timing", action="store_true", help="append wall-clock timing")
        return p

    p = add("neighbors", cmd_neighbors, "list the neighbours of a point")
    p.add_argument("--dim", type=int, required=True)
    p.add_argument("--adjacency", required=True, help="proto | omega | cubical:<k> | khalimsky")
    p.add_argument("--point", required=True, help="comma-separated coordinates")

    p = add("components", cmd_components, "connected components of a point set")
    p.add_argument("file")
    p.add_argument("--adjacency", required=True)
    p.add_argument("--complement", action="store_true", help="components of the complement")
    p.add_argument("--window", help="lo,hi (default: bounding box)")

    for name, func, help_ in [
        ("check-manifold", cmd_check_manifold, "check the digital manifold axioms"),
        ("jordan", cmd_jordan, "count complement components and boundary contact"),
    ]:
        p = add(name, func, help_)
        p.add_argument("file")
        p.add_argument("--alpha", required=True, help="foreground adjacency")
        p.add_argument("--beta", required=True, help="background adjacency")
        if name == "check-manifold":
            p.add_argument("--window", help="lo,hi (default: bounding box dilated by 2)")

    p = add("good-pair", cmd_good_pair, "decide whether (alpha, beta) is a good pair")
    p.add_argument("--dim", type=int, required=True)
    p.add_argument("--alpha", required=True)
    p.add_argument("--beta", required=True)

    p = add("good-pair-table", cmd_good_pair_table, "good-pair verdicts for all cubical pairs")
    p.add_argument("--dim", type=int, required=True)
    p.add_argument("--allow-slow", action="store_true", help="permit dim 5")
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--json", action="store_true")

    p = add("surface-check", cmd_surface_check, "is the Khalimsky neighbourhood an (n-1)-surface")
    p.add_argument("--dim", type=int, required=True)
    p.add_argument("--point", required=True)
    p.add_argument("--topology", default="khalimsky")

    p = add("render", cmd_render, "rasterise a 2-D document to binary PGM")
    p.add_argument("file")
    p.add_argument("out")
    p.add_argument("--window", help="lo,hi or x0,y0,x1,y1")
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return USAGE if exc.code else OK
    started = time.perf_counter()
    try:
        return args.func(args, started)
    except UsageError as err:
        print(f"digitop {args.command}: error: {err}", file=sys.stderr)
        return USAGE


if __name__ == "__main__":
    sys.exit(main())
