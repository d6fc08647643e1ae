"""Branch data for the four canonical maps of a D_3 tuple, plus an optional PNG.

The default tuple (20/3, 12/5, 8/3, 19/10) spreads the marks a_k, b_k over
[0, 10/3] with a short first branch and a long last one, so all four
branches and their overlaps are easy to see.
"""
import argparse
import json
from dataclasses import asdict, dataclass
from fractions import Fraction
from pathlib import Path

from multibase import BaseTuple, canonical_spec, parse_bases, plot_data
from multibase.numerics import format_scalar


@dataclass
class Config:
    bases: str = "20/3,12/5,8/3,19/10"
    samples: int = 2
    out_dir: str = "results/transform_graph"
    png: bool = False


def run(cfg: Config) -> dict:
    bt = parse_bases(cfg.bases).require_dm()
    result = {
        "config": asdict(cfg),
        "a": [format_scalar(v) for v in bt.marks.a],
        "b": [format_scalar(v) for v in bt.marks.b],
        "upper": format_scalar(bt.upper),
        "maps": {kind: plot_data(canonical_spec(bt, kind), cfg.samples).to_dict()
                 for kind in ("greedy", "quasi-greedy", "lazy", "quasi-lazy")},
    }
    out = Path(cfg.out_dir)
    out.mkdir(parents=True, exist_ok=True)
    (out / "branches.json").write_text(json.dumps(result, indent=2, sort_keys=True) + "\n")
    if cfg.png:
        _draw(bt, result["maps"]["greedy"], out / "greedy.png")
    return result


def _draw(bt: BaseTuple, series: dict, path: Path) -> None:
    import matplotlib
    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    up = float(bt.upper)
    fig, ax = plt.subplots(figsize=(5, 5))
    for br in series["branches"]:
        xs = [float(Fraction(br["x0"])), float(Fraction(br["x1"]))]
        ys = [float(Fraction(br["y0"])), float(Fraction(br["y1"]))]
        ax.plot(xs, ys, label=f"T_{br['k']}")
    ax.plot([0, up], [0, up], "k--", lw=0.8)
    ax.set_xlim(0, up)
    ax.set_ylim(0, up)
    ax.legend()
    fig.savefig(path, dpi=120)
    plt.close(fig)


def main():
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    for name, default in asdict(Config()).items():
        if isinstance(default, bool):
            p.add_argument(f"--{name.replace('_', '-')}", action="store_true")
        else:
            p.add_argument(f"--{name.replace('_', '-')}", type=type(default), default=default)
    cfg = Config(**vars(p.parse_args()))
    result = run(cfg)
    print(f"wrote {cfg.out_dir}/branches.json; a = {result['a']}, b = {result['b']}")


if __name__ == "__main__":
    main()
