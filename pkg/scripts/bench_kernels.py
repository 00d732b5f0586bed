#!/usr/bin/env python3
"""Time the two O(N^2) kernels (Berlekamp-Massey, CF Euclid) over F_2.

Prints a CSV table; the budget column reflects the contract sizes
(bm at 2^14 under 10 s, cf at 2^16 under 30 s).
"""

import argparse
import sys
import time

from seqc import autoseq, contfrac, lincomp
from seqc.algebra import LaurentSeries

BUDGETS = {("bm", 1 << 14): 10.0, ("cf", 1 << 16): 30.0}


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--sizes", type=int, nargs="*",
                    default=[1 << 12, 1 << 14, 1 << 16])
    ap.add_argument("--seq", default="thue-morse",
                    help="built-in sequence name to generate the input")
    args = ap.parse_args()

    by_name = {s.canonical_name: s for s in autoseq.builtin_specs()}
    spec = by_name[args.seq]
    field = spec.field

    print("kernel,N,seconds,budget,within_budget")
    over = False
    for n in args.sizes:
        pref = autoseq.prefix(spec, n)
        for kernel in ("bm", "cf"):
            start = time.perf_counter()
            if kernel == "bm":
                lincomp.bm_profile(pref, field)
            else:
                contfrac.cf_expand(LaurentSeries.from_prefix(pref, field))
            elapsed = time.perf_counter() - start
            budget = BUDGETS.get((kernel, n))
            flag = ""
            if budget is not None:
                flag = str(elapsed < budget).lower()
                over = over or elapsed >= budget
            print(f"{kernel},{n},{elapsed:.3f},{budget or ''},{flag}")
    return 1 if over else 0


if __name__ == "__main__":
    sys.exit(main())
