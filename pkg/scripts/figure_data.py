"""Emit the grids behind the four figures as CSV files.

    python scripts/figure_data.py --out-dir figures/
"""
import argparse
import pathlib
import sys

from circlestates.cli import main

SWEEPS = {
    "circle_norm.csv": ["--quantity", "circle-norm", "--omega-min", "0", "--omega-max", "0.99",
                        "--omega-count", "200", "--phi-count", "64"],
    "cylinder_norm.csv": ["--quantity", "cylinder-norm", "--omega-min", "0", "--omega-max", "0.99",
                          "--omega-count", "200", "--phi-count", "64"],
    "wigner_mm.csv": ["--quantity", "wigner-mm", "--omega-min", "0.05", "--omega-max", "1",
                      "--omega-count", "1000"],
    "sector_split.csv": ["--quantity", "sector-split", "--omega-min", "0.005", "--omega-max", "0.95",
                         "--omega-count", "200", "--phi-count", "64"],
}


def run(out_dir: pathlib.Path) -> int:
    out_dir.mkdir(parents=True, exist_ok=True)
    for name, args in SWEEPS.items():
        code = main(["sweep", *args, "--out", str(out_dir / name)])
        if code:
            return code
        print(f"wrote {out_dir / name}")
    return 0


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--out-dir", type=pathlib.Path, default=pathlib.Path("figures"))
    sys.exit(run(ap.parse_args().out_dir))
