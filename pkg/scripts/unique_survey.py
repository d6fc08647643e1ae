"""Share of grid points with a unique expansion, per base tuple.

For each tuple the points x = i/N * m/(beta_m - 1), i = 0..N, are classified
as unique, not unique, or undecided at the working depth. Writes a JSON table.
"""
import argparse
import json
from collections import Counter
from dataclasses import asdict, dataclass, field
from pathlib import Path

from multibase import is_unique_expansion, parse_bases
from multibase.numerics import format_scalar


@dataclass
class Config:
    tuples: list = field(default_factory=lambda: [
        "2", "3/2", "5/4", "2,3/2", "3/2,2", "2,7/4", "3,3,3", "3/2,7/4,2",
    ])
    grid: int = 60
    depth: int = 200
    out: str = "results/unique_survey.json"


def survey(bases: str, grid: int, depth: int) -> dict:
    bt = parse_bases(bases).require_dm()
    counts = Counter()
    unique_points = []
    for i in range(grid + 1):
        x = bt.upper * i / grid
        status = is_unique_expansion(bt, x, depth).status.value
        counts[status] += 1
        if status == "unique":
            unique_points.append(format_scalar(x))
    return {"bases": bases, "m": bt.m, "counts": dict(counts), "unique_points": unique_points}


def run(cfg: Config) -> list:
    rows = [survey(b, cfg.grid, cfg.depth) for b in cfg.tuples]
    path = Path(cfg.out)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(json.dumps({"config": asdict(cfg), "rows": rows}, indent=2) + "\n")
    return rows


def main():
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--tuples", nargs="+", default=Config().tuples,
                   help='base strings; a single value like "3/2" means m = 1')
    p.add_argument("--grid", type=int, default=Config.grid)
    p.add_argument("--depth", type=int, default=Config.depth)
    p.add_argument("--out", default=Config.out)
    cfg = Config(**vars(p.parse_args()))
    for row in run(cfg):
        c = row["counts"]
        print(f"{row['bases']:>14}  unique {c.get('unique', 0):3d}  "
              f"not-unique {c.get('not-unique', 0):3d}  undecided {c.get('undecided', 0):3d}")


if __name__ == "__main__":
    main()
