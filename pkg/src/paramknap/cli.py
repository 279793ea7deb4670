"""Command-line entry point: generate, solve, verify, export, bench."""
from __future__ import annotations

import argparse
import csv
import json
import sys
import time
from fractions import Fraction
from pathlib import Path

from .core import InvalidInstance, load_instance, parse_rational
from .generate import GeneratorConfig, generate_instance
from .greedy import compute_phi
from .oracle import ORACLE_LIMIT, OracleLimitError, brute_force_parametric
from .schedule import (
    EXACT_INNER,
    MODES,
    certify,
    query,
    schedule_from_json,
    schedule_to_json,
    solve_parametric,
)

BENCH_NS = (10, 20, 50, 100)
BENCH_EPS = (Fraction(1, 2), Fraction(1, 4), Fraction(1, 10))


class CLIError(Exception):
    pass


def parse_eps(text: str) -> Fraction:
    if "/" not in text:
        raise CLIError(f"epsilon must be given as 'num/den', got {text!r}")
    try:
        eps = parse_rational(text)
    except ValueError as exc:
        raise CLIError(str(exc)) from None
    if not 0 < eps < 1:
        raise CLIError(f"epsilon must lie strictly between 0 and 1, got {eps}")
    return eps


def _write_json(path, data) -> None:
    try:
        Path(path).write_text(json.dumps(data, indent=2) + "\n")
    except OSError as exc:
        raise CLIError(f"cannot write {path}: {exc.strerror}") from None


def _read_json(path):
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise CLIError(f"cannot read {path}: {exc.strerror}") from None
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise CLIError(f"{path}: invalid JSON at line {exc.lineno}: {exc.msg}") from None


def _load_instance(path):
    try:
        return load_instance(path)
    except OSError as exc:
        raise CLIError(f"cannot read {path}: {exc.strerror}") from None
    except json.JSONDecodeError as exc:
        raise CLIError(f"{path}: invalid JSON at line {exc.lineno}: {exc.msg}") from None
    except InvalidInstance as exc:
        raise CLIError(f"{path}: {exc}") from None


def _load_schedule(path):
    data = _read_json(path)
    try:
        return schedule_from_json(data)
    except (KeyError, TypeError, ValueError) as exc:
        raise CLIError(f"{path}: malformed schedule: {exc}") from None


def cmd_generate(args) -> int:
    try:
        config = GeneratorConfig(args.n, args.seed, args.w_max, args.c_max, args.capacity)
    except ValueError as exc:
        raise CLIError(str(exc)) from None
    _write_json(args.out, generate_instance(config).to_json())
    return 0


def cmd_solve(args) -> int:
    inst = _load_instance(args.instance)
    eps = parse_eps(args.eps)
    schedule = solve_parametric(inst, eps, args.mode)
    _write_json(args.out, schedule_to_json(schedule, inst.n))
    m = schedule.meta
    print(f"n={inst.n} intervals={m['intervals']} time={m['seconds']:.3f}s mode={args.mode}")
    return 0


def cmd_verify(args) -> int:
    inst = _load_instance(args.instance)
    schedule = _load_schedule(args.schedule)
    eps = parse_eps(args.eps) if args.eps else schedule.epsilon
    if "n" in schedule.meta and schedule.meta["n"] != inst.n:
        raise CLIError(f"schedule was built for n={schedule.meta['n']}, instance has n={inst.n}")
    try:
        report = certify(schedule, inst, eps)
    except OracleLimitError as exc:
        raise CLIError(str(exc)) from None
    except ValueError as exc:
        raise CLIError(f"schedule/instance mismatch: {exc}") from None
    worst = "n/a" if report.worst_ratio is None else f"{float(report.worst_ratio):.6f}"
    if report.ok:
        print(f"OK: {report.points_checked} points checked, worst ratio {worst}, eps={eps}")
        return 0
    print(f"FAIL: {len(report.violations)} violations (eps={eps})")
    print(f"{'lambda':>16} {'profit':>16} {'p_star':>16}  note")
    for v in report.violations:
        print(f"{str(v.lam):>16} {str(v.profit):>16} {str(v.pstar):>16}  {v.note}")
    return 1


def _dec(x) -> str:
    return format(float(x), ".12g")


def cmd_export(args) -> int:
    inst = _load_instance(args.instance)
    schedule = _load_schedule(args.schedule)
    try:
        lo, hi = parse_rational(args.lam_min), parse_rational(args.lam_max)
    except ValueError as exc:
        raise CLIError(str(exc)) from None
    if not lo < hi:
        raise CLIError("lambda-min must be below lambda-max")
    if args.samples < 2:
        raise CLIError("need at least 2 samples")
    phi = compute_phi(inst).phi
    pstar = brute_force_parametric(inst).pstar if inst.n <= ORACLE_LIMIT else None
    step = (hi - lo) / (args.samples - 1)
    out = sys.stdout if args.out is None else open(args.out, "w", newline="")
    try:
        w = csv.writer(out)
        w.writerow(["lambda", "schedule_profit", "phi", "p_star"])
        for k in range(args.samples):
            lam = lo + k * step
            _, profit = query(schedule, lam)
            w.writerow([_dec(lam), _dec(profit), _dec(phi(lam)), "" if pstar is None else _dec(pstar(lam))])
    finally:
        if out is not sys.stdout:
            out.close()
    return 0


BENCH_FIELDS = ["n", "eps", "seed", "mode", "phi_pieces", "criticals", "intervals", "bound", "seconds"]


def bench_rows(ns=BENCH_NS, epsilons=BENCH_EPS, seeds=(0, 1, 2), mode=EXACT_INNER, w_max=10, c_max=10):
    """One row per (n, eps, seed); ``bound`` is 16 n^2 / eps."""
    for n in ns:
        for eps in epsilons:
            for seed in seeds:
                inst = generate_instance(GeneratorConfig(n, seed, w_max, c_max))
                t0 = time.perf_counter()
                s = solve_parametric(inst, eps, mode)
                yield {
                    "n": n,
                    "eps": str(eps),
                    "seed": seed,
                    "mode": mode,
                    "phi_pieces": s.meta["phi_pieces"],
                    "criticals": s.meta["criticals"],
                    "intervals": s.meta["intervals"],
                    "bound": 16 * n * n * eps.denominator // eps.numerator,
                    "seconds": round(time.perf_counter() - t0, 4),
                }


def cmd_bench(args) -> int:
    ns = tuple(int(x) for x in args.ns.split(",")) if args.ns else BENCH_NS
    epsilons = tuple(parse_eps(x) for x in args.eps.split(",")) if args.eps else BENCH_EPS
    seeds = range(args.seeds)
    out = sys.stdout if args.out is None else open(args.out, "w", newline="")
    try:
        w = csv.DictWriter(out, fieldnames=BENCH_FIELDS)
        w.writeheader()
        for row in bench_rows(ns, epsilons, seeds, args.mode):
            w.writerow(row)
            out.flush()
    finally:
        if out is not sys.stdout:
            out.close()
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="paramknap", description=__doc__)
    sub = p.add_subparsers(dest="command", required=True)

    g = sub.add_parser("generate", help="write a seeded random instance")
    g.add_argument("--n", type=int, required=True)
    g.add_argument("--seed", type=int, default=0)
    g.add_argument("--w-max", type=int, default=10)
    g.add_argument("--c-max", type=int, default=10, help="a_i, b_i drawn from [-c_max, c_max]")
    g.add_argument("--capacity", type=int, default=None, help="fixed W (default: half the total weight)")
    g.add_argument("--out", required=True)
    g.set_defaults(func=cmd_generate)

    s = sub.add_parser("solve", help="compute a (1-eps)-approximate solution schedule")
    s.add_argument("instance")
    s.add_argument("--eps", required=True, help="as num/den, e.g. 1/4")
    s.add_argument("--mode", choices=MODES, default=EXACT_INNER)
    s.add_argument("--out", required=True)
    s.set_defaults(func=cmd_solve)

    v = sub.add_parser("verify", help="certify a schedule against the brute-force oracle")
    v.add_argument("instance")
    v.add_argument("schedule")
    v.add_argument("--eps", default=None, help="defaults to the schedule's epsilon")
    v.set_defaults(func=cmd_verify)

    e = sub.add_parser("export", help="CSV of schedule profit, phi and p* over a lambda grid")
    e.add_argument("instance")
    e.add_argument("schedule")
    e.add_argument("--lambda-min", dest="lam_min", required=True)
    e.add_argument("--lambda-max", dest="lam_max", required=True)
    e.add_argument("--samples", type=int, default=101)
    e.add_argument("--out", default=None)
    e.set_defaults(func=cmd_export)

    b = sub.add_parser("bench", help="interval counts and wall times over an (n, eps) grid")
    b.add_argument("--ns", default=None, help="comma list, default 10,20,50,100")
    b.add_argument("--eps", default=None, help="comma list of num/den, default 1/2,1/4,1/10")
    b.add_argument("--seeds", type=int, default=3)
    b.add_argument("--mode", choices=MODES, default=EXACT_INNER)
    b.add_argument("--out", default=None)
    b.set_defaults(func=cmd_bench)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except CLIError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
