"""Command-line front-end.

Subcommands: generate, profile, expansion, verify, bench.  Output is
deterministic for a fixed configuration and seed; rationals are emitted
as integer numerator/denominator pairs, never decimals.  Exit codes:
0 ok, 1 verification failure / method disagreement, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
import time

from . import autoseq, contfrac, expcomp, lincomp, theory
from .algebra import LaurentSeries
from .autoseq import SequenceSpec

CSV_HEADER = "N,L_bm,L_cf,L_formula,lower_num,lower_den,upper_num,upper_den"

SEQ_NAMES = (
    "thue-morse", "rudin-shapiro", "pattern", "sum-of-digits",
    "baum-sweet", "paper-folding", "perfect-profile",
)


class UsageError(Exception):
    pass


def spec_from_args(args) -> SequenceSpec:
    name = args.seq
    if name == "thue-morse":
        return autoseq.thue_morse()
    if name == "rudin-shapiro":
        return autoseq.rudin_shapiro()
    if name == "pattern":
        if args.p is None or args.k is None or args.a is None:
            raise UsageError("pattern requires --p, --k and --a")
        return autoseq.pattern(args.p, args.k, args.a)
    if name == "sum-of-digits":
        if args.p is None:
            raise UsageError("sum-of-digits requires --p")
        return autoseq.sum_of_digits(args.p)
    if name == "baum-sweet":
        return autoseq.baum_sweet()
    if name == "paper-folding":
        return autoseq.paper_folding(args.v0 if args.v0 is not None else 1)
    if name == "perfect-profile":
        return autoseq.perfect_profile()
    raise UsageError(f"unknown sequence name: {name}")


def _open_out(path):
    if path in (None, "-"):
        return sys.stdout, False
    return open(path, "w"), True


def _emit(path, text):
    out, close = _open_out(path)
    try:
        out.write(text)
    finally:
        if close:
            out.close()


def cmd_generate(args) -> int:
    spec = spec_from_args(args)
    p = spec.p if spec.kind in (autoseq.PATTERN, autoseq.SUM_OF_DIGITS) else 2
    if p > 10:
        raise UsageError("sequence text format supports p <= 10 (one digit per symbol)")
    pref = autoseq.prefix(spec, args.n)
    body = "".join(str(u) for u in pref)
    _emit(args.out, f"# p={p} spec={spec.canonical_name}\n{body}\n")
    return 0


def _profile_rows(spec, n_max, method):
    field = spec.field
    pref = autoseq.prefix(spec, n_max)
    prof_bm = prof_cf = None
    if method in ("bm", "both"):
        prof_bm = lincomp.bm_profile(pref, field)
    if method in ("cf", "both"):
        r = LaurentSeries.from_prefix(pref, field)
        prof_cf = contfrac.profile_from_cf(r, n_max)
    if method == "both":
        for n in range(1, n_max + 1):
            if prof_bm.at(n) != prof_cf.at(n):
                raise RuntimeError(
                    f"method disagreement at N={n}: bm={prof_bm.at(n)} cf={prof_cf.at(n)}")
    formula = theory.exact_formula_for(spec)
    w = autoseq.witness(spec)
    rows = []
    for n in range(1, n_max + 1):
        b = theory.general_bounds(w.d, w.m, n)
        rows.append({
            "N": n,
            "L_bm": prof_bm.at(n) if prof_bm else None,
            "L_cf": prof_cf.at(n) if prof_cf else None,
            "L_formula": formula(n) if formula else None,
            "lower_num": b.lower.numerator,
            "lower_den": b.lower.denominator,
            "upper_num": b.upper.numerator,
            "upper_den": b.upper.denominator,
        })
    return rows


def cmd_profile(args) -> int:
    spec = spec_from_args(args)
    method = args.method
    if method == "cf" and args.n_max < 4:
        raise UsageError("method=cf requires --n-max >= 4")
    try:
        rows = _profile_rows(spec, args.n_max, method)
    except RuntimeError as exc:
        print(str(exc), file=sys.stderr)
        return 1
    if args.format == "json":
        _emit(args.out, json.dumps(rows, sort_keys=True) + "\n")
        return 0
    lines = [CSV_HEADER]
    for row in rows:
        cells = [row["N"], row["L_bm"], row["L_cf"], row["L_formula"],
                 row["lower_num"], row["lower_den"], row["upper_num"], row["upper_den"]]
        lines.append(",".join("" if c is None else str(c) for c in cells))
    _emit(args.out, "\n".join(lines) + "\n")
    return 0


def cmd_expansion(args) -> int:
    spec = spec_from_args(args)
    pref = autoseq.prefix(spec, args.n)
    results = expcomp.expansion_profile(pref, spec.field, d_max=args.d_max)
    out_lines = []
    for res in results:
        out_lines.append(json.dumps({
            "N": res.n,
            "E_N": res.value,
            "witness": None if res.witness is None else [list(m) for m in res.witness],
            "capped": res.capped,
        }, sort_keys=True))
    _emit(args.out, "\n".join(out_lines) + "\n")
    return 0


def cmd_verify(args) -> int:
    mutate = None
    if args.corrupt_index is not None:
        idx = args.corrupt_index

        def mutate(pref, _idx=idx):
            # test fixture: additively corrupt one generator output symbol
            pref[_idx] = (pref[_idx] + 1) % (max(pref) + 1 if max(pref) else 2)
            return pref

    if args.suite == "all":
        reports = theory.verify_suite(args.n_max, k_max=args.kmax, mutate=mutate)
    else:
        spec = spec_from_args(args)
        reports = [theory.verify(spec, args.n_max, mutate=mutate)]
    payload = [r.to_dict() for r in reports]
    _emit(args.out, json.dumps(payload, indent=2, sort_keys=True) + "\n")
    ok = all(r.ok for r in reports)
    if not ok:
        for r in reports:
            fail = r.first_failure
            if fail is not None:
                print(f"FAIL {r.spec_name}: check {fail.name} "
                      f"first failing N={fail.first_fail_n}", file=sys.stderr)
    return 0 if ok else 1


BENCH_BUDGETS = {("bm", 16384): 10.0, ("cf", 65536): 30.0}


def cmd_bench(args) -> int:
    sizes = args.n or [4096, 16384, 65536]
    spec = autoseq.thue_morse()
    field = spec.field
    print("kernel,N,seconds,budget,ok")
    for n in sizes:
        pref = autoseq.prefix(spec, n)
        for kernel in (args.kernel,) if args.kernel else ("bm", "cf"):
            start = time.perf_counter()
            if kernel == "bm":
                lincomp.bm_profile(pref, field)
            else:
                contfrac.cf_expand(LaurentSeries.from_prefix(pref, field))
            elapsed = time.perf_counter() - start
            budget = BENCH_BUDGETS.get((kernel, n))
            ok = "" if budget is None else str(elapsed < budget).lower()
            print(f"{kernel},{n},{elapsed:.3f},{budget if budget else ''},{ok}")
    return 0


def _load_config(path):
    """key=value lines mirroring the long flag names."""
    conf = {}
    with open(path) as fh:
        for line in fh:
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            if "=" not in line:
                raise UsageError(f"bad config line: {line!r}")
            key, val = line.split("=", 1)
            conf[key.strip().replace("-", "_")] = val.strip()
    return conf


_INT_KEYS = {"n", "n_max", "p", "k", "a", "v0", "d_max", "kmax", "seed", "corrupt_index"}


def _apply_config(args, conf):
    for key, val in conf.items():
        if getattr(args, key, None) is None:
            setattr(args, key, int(val) if key in _INT_KEYS else val)


def build_parser():
    parser = argparse.ArgumentParser(
        prog="seqc",
        description="Exact complexity analysis of automatic sequences over prime fields")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_spec_args(sp):
        sp.add_argument("--seq", choices=SEQ_NAMES, help="sequence name")
        sp.add_argument("--p", type=int, default=None)
        sp.add_argument("--k", type=int, default=None)
        sp.add_argument("--a", type=int, default=None)
        sp.add_argument("--v0", type=int, default=None, choices=(0, 1))

    def add_common(sp):
        sp.add_argument("--out", default=None, help="output path (default stdout)")
        sp.add_argument("--config", default=None, help="key=value config file")
        sp.add_argument("--seed", type=int, default=None)

    sp = sub.add_parser("generate", help="write a sequence prefix in text form")
    add_spec_args(sp)
    sp.add_argument("--n", type=int, default=None, help="prefix length")
    add_common(sp)
    sp.set_defaults(func=cmd_generate, required_args=("seq", "n"))

    sp = sub.add_parser("profile", help="linear complexity profile with bounds")
    add_spec_args(sp)
    sp.add_argument("--n-max", dest="n_max", type=int, default=None)
    sp.add_argument("--method", choices=("bm", "cf", "both"), default=None)
    sp.add_argument("--format", choices=("csv", "json"), default=None)
    add_common(sp)
    sp.set_defaults(func=cmd_profile, required_args=("seq", "n_max"))

    sp = sub.add_parser("expansion", help="Nth expansion complexity stream")
    add_spec_args(sp)
    sp.add_argument("--n", type=int, default=None)
    sp.add_argument("--d-max", dest="d_max", type=int, default=None)
    add_common(sp)
    sp.set_defaults(func=cmd_expansion, required_args=("seq", "n"))

    sp = sub.add_parser("verify", help="run the verification suite")
    add_spec_args(sp)
    sp.add_argument("--suite", choices=("all",), default=None)
    sp.add_argument("--n-max", "--nmax", dest="n_max", type=int, default=None)
    sp.add_argument("--kmax", type=int, default=None)
    sp.add_argument("--corrupt-index", dest="corrupt_index", type=int, default=None,
                    help="test fixture: corrupt the generator at this index")
    add_common(sp)
    sp.set_defaults(func=cmd_verify, required_args=())

    sp = sub.add_parser("bench", help="time the O(N^2) kernels")
    sp.add_argument("--kernel", choices=("bm", "cf"), default=None)
    sp.add_argument("--n", type=int, nargs="*", default=None)
    add_common(sp)
    sp.set_defaults(func=cmd_bench, required_args=())

    return parser


_DEFAULTS = {"method": "both", "format": "csv", "d_max": 8, "kmax": 4, "n_max": 1024}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if getattr(args, "config", None):
            _apply_config(args, _load_config(args.config))
        for key, val in _DEFAULTS.items():
            if getattr(args, key, "missing") is None:
                setattr(args, key, val)
        if args.command == "verify" and args.suite is None and args.seq is None:
            raise UsageError("verify needs --suite all or --seq NAME")
        for key in args.required_args:
            if getattr(args, key) is None:
                raise UsageError(f"missing required option --{key.replace('_', '-')}")
        return args.func(args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 2
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
