#!/usr/bin/env python3
"""Compare the two rational-arithmetic backends on the hot kernels.

All polynomial and linear algebra in the package bottoms out in exact
rational scalar arithmetic.  At import time the package selects gmpy2's
compiled rationals when available, falling back to the pure-Python
fractions.Fraction; both produce identical results.  This script runs a
few representative kernels under each backend (in separate interpreter
processes, since the choice is made at import) and prints a table.

Usage: python benchmarks/bench_backends.py [--repeat N]
"""

import argparse
import json
import os
import subprocess
import sys
import time

KERNELS = ("form_products", "bareiss_rank", "factorization", "verify_example")


def run_kernels(repeat):
    import random

    from splitcurves import scalars
    from splitcurves.arith import UPoly, upoly_factor
    from splitcurves.forms import parse_form
    from splitcurves.linalg import rank_bareiss
    from splitcurves.cover import pullback_curve
    from splitcurves.reports import run_verify_example

    results = {"backend": scalars.BACKEND}

    plane = ("x", "y", "z")
    c3 = parse_form("x^3+y^3+z^3", plane)
    c2 = parse_form("x*y+y*z+z*x", plane)
    d2 = parse_form("z^2-4*x*y", plane)
    start = time.perf_counter()
    for _ in range(30 * repeat):
        gamma = c3 * c3 - d2 * c2 * c2
        pullback_curve(gamma)
    results["form_products"] = time.perf_counter() - start

    rng = random.Random(7)
    mats = []
    for _ in range(60):
        mats.append(
            [
                [scalars.QQ(rng.randint(-99, 99), rng.randint(1, 99)) for _ in range(15)]
                for _ in range(12)
            ]
        )
    start = time.perf_counter()
    for _ in range(repeat):
        for m in mats:
            rank_bareiss(m)
    results["bareiss_rank"] = time.perf_counter() - start

    poly = UPoly([1])
    for c in (
        UPoly([-2, 0, 1]),
        UPoly([1, 1, 1]),
        UPoly([3, -1, 0, 1]),
        UPoly([-1, 2, 0, 0, 1]),
    ):
        poly = poly * c
    start = time.perf_counter()
    for _ in range(5 * repeat):
        upoly_factor(poly)
    results["factorization"] = time.perf_counter() - start

    start = time.perf_counter()
    for _ in range(repeat):
        report = run_verify_example("split6")
        assert report.overall
    results["verify_example"] = time.perf_counter() - start
    return results


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--repeat", type=int, default=3)
    parser.add_argument("--run-suite", action="store_true", help=argparse.SUPPRESS)
    args = parser.parse_args()

    if args.run_suite:
        print(json.dumps(run_kernels(args.repeat)))
        return 0

    rows = {}
    for pure in ("0", "1"):
        env = dict(os.environ)
        env["SPLITCURVES_PURE_RATIONALS"] = pure
        out = subprocess.run(
            [sys.executable, os.path.abspath(__file__), "--run-suite",
             "--repeat", str(args.repeat)],
            env=env,
            capture_output=True,
            text=True,
            check=True,
        )
        data = json.loads(out.stdout.strip().splitlines()[-1])
        rows[data["backend"]] = data

    backends = list(rows)
    print("rational-arithmetic backend comparison (seconds, lower is better)")
    print("%-16s" % "kernel" + "".join("%14s" % b for b in backends) + "%10s" % "speedup")
    for kernel in KERNELS:
        times = [rows[b][kernel] for b in backends]
        speedup = times[-1] / times[0] if times[0] else float("inf")
        print(
            "%-16s" % kernel
            + "".join("%14.3f" % t for t in times)
            + "%9.1fx" % speedup
        )
    return 0


if __name__ == "__main__":
    sys.exit(main())
