"""Point-set documents (JSON), witness serialisation and PGM raster export."""

from __future__ import annotations

import dataclasses
import json
from pathlib import Path
from typing import Any, Iterable, Optional, Union

from .lattice import Cube, Point, Window


class DocumentError(ValueError):
    pass


def parse_document(text: str) -> tuple[int, frozenset]:
    """Parse ``{"dim": n, "points": [[...], ...]}``; duplicates are an error."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as err:
        raise DocumentError(f"not valid JSON: {err}") from None
    if not isinstance(doc, dict) or "dim" not in doc or "points" not in doc:
        raise DocumentError("document needs 'dim' and 'points' fields")
    dim, raw = doc["dim"], doc["points"]
    if not isinstance(dim, int) or isinstance(dim, bool) or not 1 <= dim <= 6:
        raise DocumentError(f"'dim' must be an integer in 1..6, got {dim!r}")
    if not isinstance(raw, list):
        raise DocumentError("'points' must be a list")
    points = []
    for v in raw:
        if (
            not isinstance(v, list)
            or len(v) != dim
            or not all(isinstance(c, int) and not isinstance(c, bool) for c in v)
        ):
            raise DocumentError(f"point {v!r} is not an integer vector of length {dim}")
        points.append(tuple(v))
    pts = frozenset(points)
    if len(pts) != len(points):
        dup = sorted(p for p in pts if points.count(p) > 1)[0]
        raise DocumentError(f"duplicate point {list(dup)}")
    return dim, pts


def load_document(path: Union[str, Path]) -> tuple[int, frozenset]:
    try:
        text = Path(path).read_text()
    except OSError as err:
        raise DocumentError(f"cannot read {path}: {err.strerror}") from None
    return parse_document(text)


def document(dim: int, points: Iterable[Point]) -> dict:
    return {"dim": dim, "points": [list(p) for p in sorted(points)]}


def dump_document(dim: int, points: Iterable[Point]) -> str:
    return json.dumps(document(dim, points))


def to_jsonable(obj: Any) -> Any:
    """Convert verdicts and witnesses to plain JSON values with stable ordering."""
    if isinstance(obj, Cube):
        return {"anchor": list(obj.anchor), "axes": list(obj.axes)}
    if dataclasses.is_dataclass(obj) and not isinstance(obj, type):
        return {
            f.name: to_jsonable(getattr(obj, f.name))
            for f in dataclasses.fields(obj)
            if not f.name.startswith("_")
        }
    if isinstance(obj, (set, frozenset)):
        return [to_jsonable(x) for x in sorted(obj)]
    if isinstance(obj, (tuple, list)):
        return [to_jsonable(x) for x in obj]
    if isinstance(obj, dict):
        return {str(k): to_jsonable(v) for k, v in obj.items()}
    return obj


def render_pgm(points: Iterable[Point], window: Window) -> bytes:
    """Binary PGM: one pixel per lattice point, foreground 0, background 255.

    Row 0 is the largest y, so the picture has the usual mathematical orientation.
    """
    if window.n != 2:
        raise ValueError("rasters are two-dimensional")
    pts = set(points)
    (x0, y0), (x1, y1) = window.lo, window.hi
    width, height = x1 - x0 + 1, y1 - y0 + 1
    pixels = bytearray()
    for y in range(y1, y0 - 1, -1):
        for x in range(x0, x1 + 1):
            pixels.append(0 if (x, y) in pts else 255)
    return f"P5\n{width} {height}\n255\n".encode("ascii") + bytes(pixels)


def read_pgm(data: bytes) -> tuple[int, int, bytes]:
    """Parse a P5 file written by :func:`render_pgm` into (width, height, pixels)."""
    magic, dims, maxval, rest = data.split(b"\n", 3)
    if magic != b"P5" or maxval != b"255":
        raise ValueError("not an 8-bit binary PGM")
    width, height = map(int, dims.split())
    return width, height, rest


def default_raster_window(points: frozenset, window: Optional[Window] = None) -> Window:
    if window is not None:
        return window
    if not points:
        return Window((0, 0), (0, 0))
    return Window.bounding(points).dilate(1)
