"""Command line front end.

Exit codes: 0 pass, 1 verification failure, 2 usage or input error,
3 solver failure, 4 resource cap exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys

from ._numeric import as_scalar
from .bounds import compute_breakpoints, poa_formula, spoa_formula
from .certificates import SegmentError, bad_ne_example, poa_certificate, spoa_certificate, verify
from .equilibria import analyze, improving_coalition
from .io import InstanceFormatError, curve_rows, load_instance, write_curve_csv
from .lpverify import Mode, max_l1
from .model import CapExceeded
from .simplex import SolverError
from .stress import run_search

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_SOLVER, EXIT_CAP = 0, 1, 2, 3, 4
LP_TOL = 1e-9


def _scalar(text):
    try:
        return as_scalar(text)
    except (ValueError, TypeError) as exc:
        raise argparse.ArgumentTypeError(str(exc)) from exc


def _show(value) -> str:
    return f"{value} (~{float(value):.12g})"


def _alloc(x) -> str:
    return " ".join(m.name for m in x) or "(empty)"


def cmd_curve(args) -> int:
    try:
        rows = curve_rows(args.s_min, args.s_max, args.step)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if args.out in (None, "-"):
        write_curve_csv(rows, sys.stdout)
        return EXIT_OK
    try:
        with open(args.out, "w", encoding="utf-8", newline="") as fh:
            write_curve_csv(rows, fh)
    except OSError as exc:
        print(f"error: cannot write {args.out}: {exc}", file=sys.stderr)
        return EXIT_USAGE
    print(f"wrote {len(rows)} rows to {args.out}", file=sys.stderr)
    return EXIT_OK


def cmd_breakpoints(args) -> int:
    for i, value in enumerate(compute_breakpoints().as_tuple(), start=1):
        print(f"s{i} = {float(value):.12f}")
    return EXIT_OK


def cmd_certify(args) -> int:
    try:
        if args.kind == "spoa":
            if args.segment is None:
                print("error: --segment is required for --kind spoa", file=sys.stderr)
                return EXIT_USAGE
            cert = spoa_certificate(args.segment, args.s)
        elif args.kind == "poa":
            cert = poa_certificate(args.s)
        else:
            cert = bad_ne_example(args.s)
    except (SegmentError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    try:
        report = verify(cert)
    except CapExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAP
    print(report.details)
    print("PASS" if report.passed else "FAIL")
    print("--- report")
    print(report.to_json())
    return EXIT_OK if report.passed else EXIT_FAIL


def cmd_lp_check(args) -> int:
    s = float(args.s) if args.float else args.s
    formula = spoa_formula(s) if args.mode == "se" else poa_formula(s)
    try:
        value = max_l1(s, Mode(args.mode))
    except SolverError as exc:
        print(f"solver failure: {exc}", file=sys.stderr)
        return EXIT_SOLVER
    diff = value - formula
    print(f"mode    = {args.mode}")
    print(f"s       = {_show(s)}")
    print(f"max_l1  = {_show(value)}")
    print(f"formula = {_show(formula)}")
    print(f"diff    = {_show(diff)}")
    return EXIT_OK if abs(float(diff)) <= LP_TOL else EXIT_FAIL


def cmd_analyze(args) -> int:
    try:
        inst = load_instance(args.file)
    except (OSError, InstanceFormatError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    try:
        rep = analyze(inst, require_strong=False)
    except CapExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAP
    print(f"s = {inst.s}, jobs = {len(inst.jobs)}")
    print(f"opt = {_show(rep.opt)}  [{_alloc(rep.opt_allocation)}]")
    print(f"Nash equilibria ({len(rep.nash_allocations)}):")
    for x in rep.nash_allocations:
        print(f"  {_alloc(x)}")
    print(f"strong equilibria ({len(rep.strong_allocations)}):")
    for x in rep.strong_allocations:
        print(f"  {_alloc(x)}")
    if rep.opt == 0:
        print("ratios undefined (opt = 0)")
    else:
        print(f"poa  = {_show(rep.poa)}")
        if rep.worst_se_makespan is not None:
            print(f"spoa = {_show(rep.spoa)}")
    if args.coalitions:
        strong = set(rep.strong_allocations)
        for x in rep.nash_allocations:
            if x not in strong:
                members = improving_coalition(inst, x)
                print(f"coalition against [{_alloc(x)}]: {list(members)}")
    if not rep.strong_allocations:
        print("no SE found")
        return EXIT_FAIL
    return EXIT_OK


def cmd_search(args) -> int:
    if args.trials < 0 or args.jobs < 0:
        print("error: --trials and --jobs must be nonnegative", file=sys.stderr)
        return EXIT_USAGE
    if args.trials == 0:
        print("no trials")
        return EXIT_OK
    try:
        summary = run_search(args.s, args.jobs, args.trials, args.seed, args.size_dist)
    except CapExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAP
    print(f"s = {_show(summary.s)}, jobs = {args.jobs}, trials = {summary.trials}, seed = {args.seed}")
    if summary.max_poa is not None:
        print(f"max poa  = {_show(summary.max_poa)}  (bound {float(poa_formula(summary.s)):.12g})")
    if summary.max_spoa is not None:
        print(f"max spoa = {_show(summary.max_spoa)}  (bound {float(spoa_formula(summary.s)):.12g})")
    if summary.no_strong:
        print(f"instances without a strong equilibrium: {summary.no_strong}")
    if summary.counterexamples:
        print(f"COUNTEREXAMPLES: {len(summary.counterexamples)}")
        for kind, inst, ratio in summary.counterexamples[:5]:
            print(f"  {kind} ratio {float(ratio):.12g}: {json.dumps([[str(j.size), int(j.favorite)] for j in inst.jobs])}")
        return EXIT_FAIL
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="favgame", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("curve", help="write PoA/SPoA curves as CSV")
    p.add_argument("--s-min", type=_scalar, default=_scalar("1"))
    p.add_argument("--s-max", type=_scalar, default=_scalar("3"))
    p.add_argument("--step", type=_scalar, default=_scalar("0.01"))
    p.add_argument("--out", default="-", help="output path ('-' for stdout)")
    p.set_defaults(func=cmd_curve)

    p = sub.add_parser("breakpoints", help="print the segment breakpoints s1..s7")
    p.set_defaults(func=cmd_breakpoints)

    p = sub.add_parser("certify", help="verify a lower-bound certificate")
    p.add_argument("--kind", choices=("spoa", "poa", "example1"), required=True)
    p.add_argument("--segment", type=int)
    p.add_argument("--s", type=_scalar, required=True)
    p.set_defaults(func=cmd_certify)

    p = sub.add_parser("lp-check", help="compare the LP maximum with the closed form")
    p.add_argument("--s", type=_scalar, required=True)
    p.add_argument("--mode", choices=("se", "ne"), default="se")
    p.add_argument("--float", action="store_true", help="solve in floating point")
    p.set_defaults(func=cmd_lp_check)

    p = sub.add_parser("analyze", help="enumerate the equilibria of an instance file")
    p.add_argument("--file", required=True)
    p.add_argument("--coalitions", action="store_true")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("search", help="random search for ratios above the bounds")
    p.add_argument("--s", type=_scalar, required=True)
    p.add_argument("--jobs", type=int, default=6)
    p.add_argument("--trials", type=int, default=1000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--size-dist", choices=("uniform", "exp"), default="uniform")
    p.set_defaults(func=cmd_search)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if getattr(args, "s", None) is not None and args.s < 1:
        print("error: s must be >= 1", file=sys.stderr)
        return EXIT_USAGE
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
