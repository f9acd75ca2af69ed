"""Command line front end: ``detfactor factor`` / ``detfactor bench`` / ``detfactor report``."""

from __future__ import annotations

import argparse
import csv
import json
import logging
import random
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path
from typing import Optional, Sequence

from detfactor import stats
from detfactor.factorizer import Factorisation, factorise
from detfactor.search import SearchLimitExceeded, SearchTrace
from detfactor.znum import is_prime

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_BAD_INPUT = 2
EXIT_RESOURCE = 3

BENCH_COUNTERS = ("modmul", "modpow", "gcd", "poly_mul", "max_poly_degree", "multipoint_points")
BENCH_FIELDS = ("kind", "bits", "index", "n", "p", "q", "path", "verified", "elapsed_ms") + BENCH_COUNTERS


class InputError(ValueError):
    pass


def parse_int(text: str) -> int:
    t = text.strip().replace("_", "")
    try:
        n = int(t, 16) if t.lower().startswith("0x") else int(t, 10)
    except ValueError:
        raise InputError(f"not an integer: {text!r}") from None
    if n < 1:
        raise InputError(f"expected an integer >= 1, got {text!r}")
    return n


def format_factorisation(n: int, f: Factorisation) -> str:
    return f"{n} = {f}"


def verify(n: int, f: Factorisation) -> bool:
    return f.value() == n and all(is_prime(p) for p, _ in f.factors)


def _run_one(n: int, r: Optional[int], m: Optional[int], max_giant: int) -> tuple[Factorisation, float]:
    t0 = time.perf_counter()
    f = factorise(n, r=r, m=m, max_giant_steps=max_giant, trace=SearchTrace())
    return f, (time.perf_counter() - t0) * 1000.0


def cmd_factor(args) -> int:
    raw = args.numbers
    if not raw:
        raw = [line for line in sys.stdin.read().splitlines() if line.strip()]
    try:
        numbers = [parse_int(x) for x in raw]
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BAD_INPUT
    if not numbers:
        print("error: no input numbers", file=sys.stderr)
        return EXIT_BAD_INPUT

    work = [(n, args.r, args.m, args.max_giant_steps) for n in numbers]
    try:
        if args.jobs > 1:
            with ProcessPoolExecutor(max_workers=args.jobs) as pool:
                results = list(pool.map(_run_one, *zip(*work)))
        else:
            results = [_run_one(*w) for w in work]
    except SearchLimitExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_RESOURCE

    status = EXIT_OK
    for n, (f, ms) in zip(numbers, results):
        if args.verify and not verify(n, f):
            print(f"error: verification failed for {n}", file=sys.stderr)
            status = EXIT_VERIFY_FAILED
            continue
        if args.json:
            rec = {
                "n": str(n),
                "factors": [{"p": str(p), "e": e} for p, e in f.factors],
                "elapsed_ms": round(ms, 3),
                "path": f.path,
            }
            print(json.dumps(rec))
        else:
            print(format_factorisation(n, f))
        if args.verbose:
            for line in trace_lines(n, f):
                print(f"# {line}", file=sys.stderr)
    return status


def trace_lines(n: int, f: Factorisation) -> list[str]:
    out = [f"n = {n}", f"path = {f.path}"]
    tr = f.trace
    if tr is not None and tr.m:
        out += tr.lines()
    return out


def random_prime(rng: random.Random, bits: int) -> int:
    """Smallest prime >= a random odd integer with exactly `bits` bits."""
    x = rng.getrandbits(bits) | (1 << (bits - 1)) | 1
    while not is_prime(x):
        x += 2
    return x


def bench_semiprimes(bits: int, count: int, seed: int) -> list[tuple[int, int]]:
    """Balanced prime pairs near 2^(bits/2) from MT19937 seeded with (seed, bits)."""
    rng = random.Random(f"{seed}:{bits}")
    hi = bits // 2
    lo = bits - hi
    out = []
    while len(out) < count:
        p, q = random_prime(rng, lo), random_prime(rng, hi)
        if p != q:
            out.append((min(p, q), max(p, q)))
    return out


def run_bench(bits_list: Sequence[int], count: int, seed: int) -> list[dict]:
    rows: list[dict] = []
    for bits in bits_list:
        inst = []
        for idx, (p, q) in enumerate(bench_semiprimes(bits, count, seed)):
            n = p * q
            with stats.counting() as ctr:
                t0 = time.perf_counter()
                f = factorise(n)
                ms = (time.perf_counter() - t0) * 1000.0
            ok = f.factors == [(p, 1), (q, 1)] and verify(n, f)
            row = {
                "kind": "instance", "bits": bits, "index": idx, "n": n, "p": p, "q": q,
                "path": f.path, "verified": int(ok), "elapsed_ms": f"{ms:.3f}",
            }
            row.update({k: ctr.get(k, 0) for k in BENCH_COUNTERS})
            inst.append(row)
        rows.extend(inst)
        agg = {
            "kind": "aggregate", "bits": bits, "index": len(inst), "n": "", "p": "", "q": "",
            "path": "", "verified": sum(r["verified"] for r in inst),
            "elapsed_ms": f"{sum(float(r['elapsed_ms']) for r in inst) / max(len(inst), 1):.3f}",
        }
        agg.update({k: sum(r[k] for r in inst) for k in BENCH_COUNTERS})
        rows.append(agg)
    return rows


def cmd_bench(args) -> int:
    rows = run_bench(args.bits, args.count, args.seed)
    w = csv.DictWriter(sys.stdout, fieldnames=BENCH_FIELDS, lineterminator="\n")
    w.writeheader()
    w.writerows(rows)
    if args.plot:
        from detfactor.plotting import plot_bench

        plot_bench(rows, args.plot)
        print(f"wrote {args.plot}", file=sys.stderr)
    failed = [r for r in rows if r["kind"] == "instance" and not r["verified"]]
    return EXIT_VERIFY_FAILED if failed else EXIT_OK


def cmd_report(args) -> int:
    from detfactor.plotting import plot_bench, read_bench_csv

    rows = []
    for path in args.csv:
        rows.extend(read_bench_csv(path))
    if not rows:
        print("error: no benchmark rows found", file=sys.stderr)
        return EXIT_BAD_INPUT
    plot_bench(rows, args.out)
    print(f"wrote {args.out}", file=sys.stderr)
    return EXIT_OK


def _positive(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"invalid integer {text!r}") from None
    if v < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {v}")
    return v


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="detfactor", description="Deterministic integer factorisation.")
    parser.add_argument("--log-level", default="WARNING")
    sub = parser.add_subparsers(dest="command", required=True)

    f = sub.add_parser("factor", help="factor integers given as arguments or on stdin")
    f.add_argument("numbers", nargs="*", help="decimal or 0x-hex integers >= 1")
    f.add_argument("--json", action="store_true", help="one JSON object per input")
    f.add_argument("--verify", action="store_true", help="re-multiply and primality-check before printing")
    f.add_argument("--r", type=_positive, default=None, help="override the Lehman bound r")
    f.add_argument("--m", type=_positive, default=None, help="override the baby-step count m")
    f.add_argument("--verbose", action="store_true", help="print the search trace to stderr")
    f.add_argument("--jobs", type=_positive, default=1)
    f.add_argument("--max-giant-steps", type=_positive, default=10_000_000)
    f.set_defaults(func=cmd_factor)

    b = sub.add_parser("bench", help="time factorisation of seeded random semiprimes (CSV on stdout)")
    b.add_argument("--bits", type=_positive, nargs="+", required=True)
    b.add_argument("--count", type=_positive, required=True)
    b.add_argument("--seed", type=int, default=0)
    b.add_argument("--plot", type=Path, default=None, help="also render a timing figure to this file")
    b.set_defaults(func=cmd_bench)

    r = sub.add_parser("report", help="render a timing figure from bench CSV files")
    r.add_argument("csv", nargs="+", type=Path)
    r.add_argument("--out", type=Path, required=True)
    r.set_defaults(func=cmd_report)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_BAD_INPUT if exc.code else EXIT_OK
    logging.basicConfig(level=args.log_level.upper(), format="%(levelname)s %(name)s: %(message)s")
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
