#!/usr/bin/env python3
"""Export linear and expansion complexity profiles for every built-in.

Writes one CSV per sequence into the output directory: the linear
complexity profile with its rational bounds, and (for modest N) the
expansion complexity stream.  Intended for downstream plotting.
"""

import argparse
import pathlib
import sys

from seqc import autoseq, expcomp, lincomp, theory


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--n-max", type=int, default=1024)
    ap.add_argument("--expansion-n", type=int, default=128,
                    help="length of the expansion-complexity stream")
    ap.add_argument("--out-dir", default="profiles")
    args = ap.parse_args()

    out_dir = pathlib.Path(args.out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)

    for spec in autoseq.builtin_specs():
        name = spec.canonical_name.replace("(", "_").replace(")", "").replace(",", "_").replace("=", "")
        pref = autoseq.prefix(spec, args.n_max)
        prof = lincomp.bm_profile(pref, spec.field)
        w = autoseq.witness(spec)
        formula = theory.exact_formula_for(spec)

        lines = ["N,L,L_formula,lower_num,lower_den,upper_num,upper_den"]
        for n in range(1, args.n_max + 1):
            b = theory.general_bounds(w.d, w.m, n)
            f = formula(n) if formula else ""
            lines.append(f"{n},{prof.at(n)},{f},{b.lower.numerator},"
                         f"{b.lower.denominator},{b.upper.numerator},{b.upper.denominator}")
        (out_dir / f"{name}_linear.csv").write_text("\n".join(lines) + "\n")

        stream = expcomp.expansion_profile(pref[: args.expansion_n], spec.field)
        lines = ["N,E_N,capped"]
        for res in stream:
            lines.append(f"{res.n},{res.value},{int(res.capped)}")
        (out_dir / f"{name}_expansion.csv").write_text("\n".join(lines) + "\n")
        print(f"wrote {name}_linear.csv and {name}_expansion.csv")
    return 0


if __name__ == "__main__":
    sys.exit(main())
