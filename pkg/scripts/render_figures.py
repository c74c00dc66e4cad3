"""Render small 2D examples as PGM rasters with their Jordan verdicts.

    python3 scripts/render_figures.py --out figures
"""

import argparse
import itertools
from dataclasses import dataclass
from pathlib import Path

from digitop import AdjacencyPair, AdjacencySpec, Window, jordan_check, neighbors
from digitop.documents import render_pgm


@dataclass
class FigureConfig:
    out: str = "figures"
    margin: int = 2


def shapes() -> dict:
    ring = frozenset(itertools.product((-1, 0, 1), repeat=2)) - {(0, 0)}
    return {
        "diamond": frozenset({(1, 0), (-1, 0), (0, 1), (0, -1)}),
        "ring": ring,
        "khalimsky_circle": neighbors(AdjacencySpec.khalimsky(2), (0, 0)),
        "big_diamond": frozenset((x, y) for x in range(-3, 4) for y in range(-3, 4) if abs(x) + abs(y) == 3),
    }


PAIRS = {
    "8/4": AdjacencyPair.cubical(2, 0, 1),
    "4/8": AdjacencyPair.cubical(2, 1, 0),
    "khalimsky": AdjacencyPair(AdjacencySpec.khalimsky(2), AdjacencySpec.khalimsky(2)),
}


def run(cfg: FigureConfig) -> None:
    out = Path(cfg.out)
    out.mkdir(parents=True, exist_ok=True)
    for name, pts in shapes().items():
        w = Window.bounding(pts).dilate(cfg.margin)
        (out / f"{name}.pgm").write_bytes(render_pgm(pts, w))
        verdicts = []
        for label, pair in PAIRS.items():
            rep = jordan_check(pts, pair)
            verdicts.append(f"{label}: {rep.count} complement components, separates={rep.separates}")
        print(f"{name}: " + "; ".join(verdicts))


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--out", default="figures")
    ap.add_argument("--margin", type=int, default=2)
    a = ap.parse_args()
    run(FigureConfig(a.out, a.margin))


if __name__ == "__main__":
    main()
