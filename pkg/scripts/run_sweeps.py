"""Run every theorem sweep at desk scale and write one CSV per theorem.

Usage:
    python scripts/run_sweeps.py [--out results/] [--jobs N] [--no-timing]
"""

import argparse
import sys
import time
from pathlib import Path

from metricdim.verify import run_sweep, summarize, write_csv

SWEEPS = {
    "cycle-vertex": dict(sizes=range(3, 9), max_n=3),
    "cycle-edge": dict(sizes=range(3, 9), max_n=3),
    "complete-vertex": dict(sizes=range(2, 7), max_n=4, max_vertices=16),
    "complete-edge": dict(sizes=range(3, 7), max_n=3, max_vertices=16),
    "prism-vertex": dict(sizes=range(3, 7), max_n=3),
    "prism-edge": dict(sizes=range(3, 7), max_n=3),
}


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--out", default="results")
    ap.add_argument("--jobs", type=int, default=1)
    ap.add_argument("--no-timing", action="store_true")
    args = ap.parse_args()

    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    worst = 0
    for key, cfg in SWEEPS.items():
        t0 = time.perf_counter()
        rows = run_sweep(key, jobs=args.jobs, **cfg)
        with open(out / f"{key}.csv", "w", newline="") as fh:
            write_csv(rows, fh, timing=not args.no_timing)
        code, lines = summarize(rows)
        worst = max(worst, code)
        print(f"== {key} ({time.perf_counter() - t0:.1f}s) -> {out / f'{key}.csv'}")
        for line in lines:
            print("   " + line)
    return worst


if __name__ == "__main__":
    sys.exit(main())
