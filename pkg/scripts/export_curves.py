"""Sample p*, phi and the schedule's profit on a lambda grid for one seeded instance.

The CSV has one row per lambda plus the ratio profit/p*; plotting is left to
whatever tool reads CSV.

    python3 scripts/export_curves.py --n 8 --seed 3 --eps 1/4 --out results/curves.csv
"""
import argparse
import csv
import sys
from fractions import Fraction
from pathlib import Path

from paramknap.cli import parse_eps
from paramknap.core import parse_rational
from paramknap.generate import GeneratorConfig, generate_instance
from paramknap.greedy import compute_phi
from paramknap.oracle import brute_force_parametric
from paramknap.schedule import EXACT_INNER, MODES, certify, query, solve_parametric


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--n", type=int, default=8)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--eps", default="1/4")
    ap.add_argument("--mode", choices=MODES, default=EXACT_INNER)
    ap.add_argument("--lambda-min", dest="lo", default="-5")
    ap.add_argument("--lambda-max", dest="hi", default="5")
    ap.add_argument("--samples", type=int, default=401)
    ap.add_argument("--out", default="results/curves.csv")
    args = ap.parse_args(argv)

    eps = parse_eps(args.eps)
    inst = generate_instance(GeneratorConfig(args.n, args.seed))
    schedule = solve_parametric(inst, eps, args.mode)
    phi = compute_phi(inst).phi
    pstar = brute_force_parametric(inst)
    report = certify(schedule, inst, pstar=pstar)

    lo, hi = parse_rational(args.lo), parse_rational(args.hi)
    step = (hi - lo) / (args.samples - 1)
    out = Path(args.out)
    out.parent.mkdir(parents=True, exist_ok=True)
    with out.open("w", newline="") as fh:
        w = csv.writer(fh)
        w.writerow(["lambda", "schedule_profit", "phi", "p_star", "ratio"])
        for k in range(args.samples):
            lam = lo + k * step
            _, profit = query(schedule, lam)
            opt = pstar(lam)
            ratio = "" if opt == 0 else f"{float(Fraction(profit) / opt):.6f}"
            w.writerow([f"{float(lam):.12g}", f"{float(profit):.12g}", f"{float(phi(lam)):.12g}",
                        f"{float(opt):.12g}", ratio])

    print(f"n={inst.n} intervals={len(schedule.intervals)} phi pieces={len(phi.pieces)} "
          f"p* pieces={len(pstar.pstar.pieces)}")
    worst = "n/a" if report.worst_ratio is None else f"{float(report.worst_ratio):.4f}"
    print(f"certificate: {'OK' if report.ok else 'FAIL'}, worst profit/p* {worst}, csv -> {out}")
    return 0 if report.ok else 1


if __name__ == "__main__":
    sys.exit(main())
