"""Time classify against canonical length in B_n and fit a log-log slope.

Writes a tab-separated table (length, braid, seconds, verdict) suitable for plotting.

    python scripts/scaling.py --n 4 --max-len 60 --out bench.tsv
"""

from __future__ import annotations

import argparse
import csv
import sys
from dataclasses import dataclass

from braidclass.cli import bench_rows, loglog_slope, random_by_length
from braidclass.reducibility import ClassifierConfig


@dataclass
class ScalingConfig:
    seed: int = 10
    n: int = 4
    min_len: int = 5
    max_len: int = 40
    step: int = 5
    per_length: int = 3


def run(cfg: ScalingConfig, out) -> float:
    lengths = range(cfg.min_len, cfg.max_len + 1, cfg.step)
    entries = random_by_length(cfg.seed, cfg.n, list(lengths), cfg.per_length)
    rows = bench_rows(entries, ClassifierConfig())
    writer = csv.writer(out, delimiter="\t", lineterminator="\n")
    writer.writerow(["length", "braid", "seconds", "verdict"])
    for e, r in zip(entries, rows):
        writer.writerow([r["length"], str(e.word), f"{r['seconds']:.6f}", r["verdict"]])
    return loglog_slope(rows)


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    for field, default in vars(ScalingConfig()).items():
        ap.add_argument(f"--{field.replace('_', '-')}", type=int, default=default)
    ap.add_argument("--out", default="-")
    a = ap.parse_args()
    cfg = ScalingConfig(**{k: getattr(a, k) for k in vars(ScalingConfig())})
    if a.out == "-":
        slope = run(cfg, sys.stdout)
    else:
        with open(a.out, "w") as fh:
            slope = run(cfg, fh)
    print(f"# log-log slope {slope:.3f}", file=sys.stderr)


if __name__ == "__main__":
    main()
