"""Interval counts over the (n, eps) grid, checked against 16 n^2/eps and doubling growth.

    python3 scripts/bench_scaling.py --seeds 3 --out results/bench.csv
"""
import argparse
import csv
import sys
from pathlib import Path
from statistics import mean

from paramknap.cli import BENCH_EPS, BENCH_FIELDS, BENCH_NS, bench_rows, parse_eps
from paramknap.schedule import EXACT_INNER, MODES

GROWTH_LIMIT = 4.5
DOUBLINGS = ((10, 20), (50, 100))


def growth_table(rows, seeds):
    counts = {(r["n"], r["eps"], r["seed"]): r["intervals"] for r in rows}
    table = {}
    for small, big in DOUBLINGS:
        for eps in sorted({r["eps"] for r in rows}):
            try:
                table[(small, big, eps)] = mean(counts[(big, eps, s)] / counts[(small, eps, s)] for s in seeds)
            except KeyError:
                pass  # pair not on this grid
    return table


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--ns", default=",".join(map(str, BENCH_NS)))
    ap.add_argument("--eps", default=",".join(map(str, BENCH_EPS)))
    ap.add_argument("--seeds", type=int, default=3)
    ap.add_argument("--mode", choices=MODES, default=EXACT_INNER)
    ap.add_argument("--out", default="results/bench.csv")
    args = ap.parse_args(argv)

    ns = [int(x) for x in args.ns.split(",")]
    epsilons = [parse_eps(x) for x in args.eps.split(",")]
    seeds = range(args.seeds)
    rows = []
    for row in bench_rows(ns, epsilons, seeds, args.mode):
        rows.append(row)
        print(f"n={row['n']:>4} eps={row['eps']:>5} seed={row['seed']} "
              f"intervals={row['intervals']:>6} bound={row['bound']:>8} {row['seconds']:.2f}s")

    out = Path(args.out)
    out.parent.mkdir(parents=True, exist_ok=True)
    with out.open("w", newline="") as fh:
        w = csv.DictWriter(fh, fieldnames=BENCH_FIELDS)
        w.writeheader()
        w.writerows(rows)

    over = [r for r in rows if r["intervals"] > r["bound"]]
    growth = growth_table(rows, seeds)
    for (small, big, eps), g in sorted(growth.items()):
        print(f"growth n {small}->{big} eps={eps}: {g:.2f}x")
    worst = max(growth.values(), default=0.0)
    print(f"{len(rows)} runs, {len(over)} over bound, worst growth {worst:.2f}x, csv -> {out}")
    return 0 if not over and worst <= GROWTH_LIMIT else 1


if __name__ == "__main__":
    sys.exit(main())
