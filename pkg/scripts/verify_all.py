#!/usr/bin/env python3
"""Run the full verification suite and print a one-line summary per sequence.

Equivalent to `seqc verify --suite all` but with a human-oriented table
instead of the JSON report.
"""

import argparse
import sys
import time

from seqc import theory


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--n-max", type=int, default=4096)
    ap.add_argument("--kmax", type=int, default=4)
    args = ap.parse_args()

    start = time.perf_counter()
    reports = theory.verify_suite(args.n_max, k_max=args.kmax)
    elapsed = time.perf_counter() - start

    width = max(len(r.spec_name) for r in reports)
    failures = 0
    for r in reports:
        status = "ok"
        if not r.ok:
            failures += 1
            fail = r.first_failure
            status = f"FAIL {fail.name} (first N={fail.first_fail_n})"
        print(f"{r.spec_name:<{width}}  checks={len(r.checks)}  {status}")
    print(f"\n{len(reports)} sequences, n_max={args.n_max}, {elapsed:.2f}s")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
