"""Recompute the cubical good-pair tables and the Khalimsky verdicts.

    python3 scripts/good_pair_tables.py --max-dim 4 --out results/tables.json
"""

import argparse
import json
import time
from dataclasses import asdict, dataclass
from pathlib import Path

from digitop import AdjacencyPair, AdjacencySpec, good_pair_table, is_good_pair, neighbor_count
from digitop.documents import to_jsonable


@dataclass
class TableConfig:
    min_dim: int = 2
    max_dim: int = 4
    khalimsky_dims: tuple = (2, 3)
    workers: int = 1
    out: str = ""


def run(cfg: TableConfig) -> dict:
    results = {"config": asdict(cfg), "cubical": {}, "khalimsky": {}}
    for n in range(cfg.min_dim, cfg.max_dim + 1):
        start = time.perf_counter()
        table = good_pair_table(n, allow_slow=n > 4, workers=cfg.workers)
        secs = time.perf_counter() - start
        good = sorted(key for key, v in table.items() if v.holds)
        alias = [
            (neighbor_count(AdjacencySpec.cubical(n, l)), neighbor_count(AdjacencySpec.cubical(n, k)))
            for l, k in good
        ]
        results["cubical"][n] = {"good": good, "alias": alias, "seconds": round(secs, 3)}
        print(f"n={n}: good {good}  neighbourhoods {alias}  ({secs:.2f} s)")
        for key, v in sorted(table.items()):
            if not v.holds:
                why = v.manifold.reason if not v.manifold.holds else f"{len(v.double_points)} double points"
                print(f"    {key}: {why}")
    for n in cfg.khalimsky_dims:
        a = AdjacencySpec.khalimsky(n)
        start = time.perf_counter()
        v = is_good_pair(AdjacencyPair(a, a))
        secs = time.perf_counter() - start
        results["khalimsky"][n] = {"good": v.holds, "references": len(v.references), "seconds": round(secs, 3)}
        print(f"khalimsky n={n}: {'good' if v.holds else 'not good'} over {len(v.references)} parities ({secs:.2f} s)")
    return results


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--min-dim", type=int, default=2)
    ap.add_argument("--max-dim", type=int, default=4)
    ap.add_argument("--khalimsky", type=int, nargs="*", default=[2, 3])
    ap.add_argument("--workers", type=int, default=1)
    ap.add_argument("--out", default="")
    a = ap.parse_args()
    cfg = TableConfig(a.min_dim, a.max_dim, tuple(a.khalimsky), a.workers, a.out)
    results = run(cfg)
    if cfg.out:
        path = Path(cfg.out)
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(json.dumps(to_jsonable(results), indent=2) + "\n")


if __name__ == "__main__":
    main()
