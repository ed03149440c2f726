"""Command line surface.

Exit codes: 0 success, 1 bad arguments or invalid input, 2 when a
computation contradicts a structural guarantee (the most important signal
the tool can emit).  Output is deterministic; identical invocations
produce byte-identical output.  LENS_THREADS caps the worker count used
by sweeps.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ThreadPoolExecutor
from math import comb, gcd

from .cfrac import enumerate_zero_cf, hj_expand
from .errors import LensfillError, TheoremViolation
from .fillings import make_params, zset
from .homology import gamma_filling, gamma_standard, rotation_numbers, spin_structures
from .lattice import (
    build_string,
    complement_homology,
    minimal_si_counts,
    orthogonal_minus_one_classes,
    validate_hom_classes,
    validate_string_lemma,
)
from .report import build_report, render_csv, render_table
from .suites import SUITES, run_suite

_SUITE_CHOICES = sorted(SUITES) + ["corollary-c", "all"]


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # argparse defaults to exit code 2; we keep 2
        self.exit(1, f"{self.prog}: error: {message}\n")


def _emit(text: str, out: str | None) -> None:
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _dump_json(payload) -> str:
    return json.dumps(payload, indent=2) + "\n"


def _workers() -> int:
    try:
        return max(1, int(os.environ.get("LENS_THREADS", "1")))
    except ValueError:
        return 1


def cmd_expand(args) -> int:
    params = make_params(args.p, args.q)
    payload = {
        "p": args.p,
        "q": args.q,
        "a": list(hj_expand(args.p, args.q)),
        "b": list(params.b),
        "qbar": params.qbar,
    }
    if args.json:
        _emit(_dump_json(payload), args.out)
    else:
        _emit(
            f"p/q = {args.p}/{args.q} = {payload['a']}\n"
            f"p/(p-q) = {args.p}/{args.p - args.q} = {payload['b']}\n"
            f"qbar = {params.qbar}\n",
            args.out,
        )
    return 0


def cmd_zeroseq(args) -> int:
    if args.k < 1:
        raise LensfillError(f"length must be >= 1, got {args.k}")
    tuples = sorted(enumerate_zero_cf(args.k))
    catalan = comb(2 * (args.k - 1), args.k - 1) // args.k if args.k >= 2 else 1
    payload = {
        "k": args.k,
        "count": len(tuples),
        "catalan": catalan,
        "tuples": [list(t) for t in tuples],
    }
    if args.json:
        _emit(_dump_json(payload), args.out)
    else:
        body = "\n".join(" ".join(map(str, t)) for t in tuples)
        _emit(f"# {len(tuples)} zero tuples of length {args.k}\n{body}\n", args.out)
    return 0


def cmd_fillings(args) -> int:
    report = build_report(args.p, args.q)
    if args.json:
        _emit(_dump_json(report), args.out)
    elif args.csv:
        _emit(render_csv([report]), args.out)
    else:
        _emit(render_table(report), args.out)
    return 0


def cmd_classify(args) -> int:
    report = build_report(args.p, args.q)
    payload = {k: report[k] for k in ("p", "q", "z_set", "classes")}
    if args.json:
        _emit(_dump_json(payload), args.out)
    else:
        lines = [f"L({args.p},{args.q}): {len(report['classes'])} classes"]
        for i, c in enumerate(report["classes"]):
            members = " ".join(str(tuple(report["z_set"][j])) for j in c)
            lines.append(f"  class {i}: {members}")
        _emit("\n".join(lines) + "\n", args.out)
    return 0


def cmd_gamma(args) -> int:
    params = make_params(args.p, args.q)
    rows = []
    for s in spin_structures(params.b, args.p):
        rows.append(
            {
                "s": list(s),
                "gamma_filling": gamma_filling(params.b, s),
                "gamma_standard": gamma_standard(params.b, s),
            }
        )
    payload = {"p": args.p, "q": args.q, "b": list(params.b), "spin": rows}
    if args.json:
        _emit(_dump_json(payload), args.out)
    else:
        lines = [f"L({args.p},{args.q}) spin structures and invariants:"]
        for r in rows:
            lines.append(
                f"  s={tuple(r['s'])}: filling formula {r['gamma_filling']}, "
                f"standard formula {r['gamma_standard']}"
            )
        _emit("\n".join(lines) + "\n", args.out)
    mismatched = [r for r in rows if r["gamma_filling"] != r["gamma_standard"]]
    if mismatched:
        negated = all(
            r["gamma_filling"] == (-r["gamma_standard"]) % args.p for r in rows
        )
        if not negated:
            raise TheoremViolation(f"invariant formulas disagree at {mismatched[0]['s']}")
    return 0


def cmd_rot(args) -> int:
    params = make_params(args.p, args.q)
    zs = zset(params)
    payload = {
        "p": args.p,
        "q": args.q,
        "z_set": [list(n) for n in zs],
        "rot": [list(rotation_numbers(n)) for n in zs],
    }
    if args.json:
        _emit(_dump_json(payload), args.out)
    else:
        lines = [f"L({args.p},{args.q}) rotation numbers:"]
        for n, r in zip(payload["z_set"], payload["rot"]):
            lines.append(f"  n={tuple(n)}: rot={tuple(r)}")
        _emit("\n".join(lines) + "\n", args.out)
    return 0


def cmd_lattice_check(args) -> int:
    params = make_params(args.p, args.q)
    rows = []
    for n in zset(params):
        cfg = build_string(params.b, n)
        shapes = validate_hom_classes(cfg)
        nesting = validate_string_lemma(cfg)
        b2, divisors = complement_homology(cfg)
        counts = minimal_si_counts(cfg)
        minimal = not orthogonal_minus_one_classes(cfg)
        if not (shapes and nesting and minimal):
            raise TheoremViolation(f"lattice validation failed for n={n}")
        rows.append(
            {
                "n": list(n),
                "m_total": cfg.m_total,
                "hom_classes": shapes,
                "string_lemma": nesting,
                "b2": b2,
                "h1_divisors": divisors,
                "si_counts": list(counts),
                "minimal": minimal,
            }
        )
    payload = {"p": args.p, "q": args.q, "fillings": rows}
    if args.json:
        _emit(_dump_json(payload), args.out)
    else:
        lines = [f"L({args.p},{args.q}) lattice checks:"]
        for r in rows:
            lines.append(
                f"  n={tuple(r['n'])}: M={r['m_total']} b2={r['b2']} "
                f"H1 divisors={r['h1_divisors']} counts={tuple(r['si_counts'])} ok"
            )
        _emit("\n".join(lines) + "\n", args.out)
    return 0


def cmd_sweep(args) -> int:
    if args.p_max is None:
        raise LensfillError("sweep needs a bound: positional p_max or --pmax")
    if args.p_max < 2:
        raise LensfillError(f"sweep bound must be >= 2, got {args.p_max}")
    pairs = [
        (p, q)
        for p in range(2, args.p_max + 1)
        for q in range(1, p)
        if gcd(p, q) == 1
    ]
    workers = _workers()
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            reports = list(pool.map(lambda pq: build_report(*pq), pairs))
    else:
        reports = [build_report(p, q) for p, q in pairs]

    def keep(r) -> bool:
        if args.rational_ball and not r["flags"]["rational_ball"]:
            return False
        if args.unique and not r["flags"]["unique_filling_certified"]:
            return False
        if args.min_fillings is not None and len(r["z_set"]) < args.min_fillings:
            return False
        return True

    reports = [r for r in reports if keep(r)]
    if args.json:
        _emit(_dump_json(reports), args.out)
    elif args.csv:
        _emit(render_csv(reports), args.out)
    else:
        lines = []
        for r in reports:
            fl = r["flags"]
            tags = []
            if fl["rational_ball"]:
                tags.append("ball(m={},h={})".format(*fl["rational_ball_witness"]))
            if fl["unique_filling_certified"]:
                tags.append("unique")
            lines.append(
                f"L({r['p']},{r['q']}): |Z|={len(r['z_set'])} "
                f"classes={len(r['classes'])}" + ("  " + " ".join(tags) if tags else "")
            )
        _emit("\n".join(lines) + "\n" if lines else "", args.out)
    return 0


def cmd_verify(args) -> int:
    names = sorted(SUITES) if args.suite == "all" else [args.suite]
    lines = []
    failed = False
    for name in names:
        kwargs = {}
        if args.pmax is not None and name in (
            "duality",
            "gamma",
            "lattice",
            "mcduff",
            "rational-ball",
            "corollary-c",
        ):
            kwargs["pmax"] = args.pmax
        if args.kmax is not None and name in ("catalan", "rotation"):
            kwargs["kmax"] = args.kmax
        res = run_suite(name, **kwargs)
        status = "pass" if res.ok else "FAIL"
        line = f"{res.name}: {status} ({res.cases} cases; {res.detail})"
        if not res.ok:
            line += f"\n  first counterexample: {res.counterexample}"
            failed = True
        lines.append(line)
    _emit("\n".join(lines) + "\n", args.out)
    return 2 if failed else 0


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="lensfill", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    def add_pair(sp, csv_flag=False):
        sp.add_argument("p", type=int)
        sp.add_argument("q", type=int)
        sp.add_argument("--json", action="store_true")
        if csv_flag:
            sp.add_argument("--csv", action="store_true")
        sp.add_argument("--out", metavar="FILE")

    sp = sub.add_parser("expand", help="continued-fraction expansions of p/q and p/(p-q)")
    add_pair(sp)
    sp.set_defaults(func=cmd_expand)

    sp = sub.add_parser("zeroseq", help="all zero continued fractions of a given length")
    sp.add_argument("k", type=int)
    sp.add_argument("--json", action="store_true")
    sp.add_argument("--out", metavar="FILE")
    sp.set_defaults(func=cmd_zeroseq)

    sp = sub.add_parser("fillings", help="full report for one lens space")
    add_pair(sp, csv_flag=True)
    sp.set_defaults(func=cmd_fillings)

    sp = sub.add_parser("classify", help="diffeomorphism classes of the fillings")
    add_pair(sp)
    sp.set_defaults(func=cmd_classify)

    sp = sub.add_parser("gamma", help="spin structures and plane-field invariants")
    add_pair(sp)
    sp.set_defaults(func=cmd_gamma)

    sp = sub.add_parser("rot", help="rotation numbers of the attaching circles")
    add_pair(sp)
    sp.set_defaults(func=cmd_rot)

    sp = sub.add_parser("lattice-check", help="lattice cross-checks for every filling")
    add_pair(sp)
    sp.set_defaults(func=cmd_lattice_check)

    sp = sub.add_parser("sweep", help="reports for every pair up to a bound")
    sp.add_argument("p_max", type=int, nargs="?", default=None)
    sp.add_argument("--pmax", dest="p_max_flag", type=int, default=None,
                    help="alternative spelling of the positional bound")
    sp.add_argument("--rational-ball", action="store_true")
    sp.add_argument("--unique", action="store_true")
    sp.add_argument("--min-fillings", type=int, default=None, metavar="N")
    sp.add_argument("--json", action="store_true")
    sp.add_argument("--csv", action="store_true")
    sp.add_argument("--out", metavar="FILE")
    sp.set_defaults(func=cmd_sweep)

    sp = sub.add_parser("verify", help="run a named verification suite")
    sp.add_argument("suite", choices=_SUITE_CHOICES)
    sp.add_argument("--pmax", type=int, default=None)
    sp.add_argument("--kmax", type=int, default=None)
    sp.add_argument("--out", metavar="FILE")
    sp.set_defaults(func=cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code in (0, None) else 1
    if getattr(args, "p_max_flag", None) is not None:
        args.p_max = args.p_max_flag
    try:
        return args.func(args)
    except TheoremViolation as exc:
        print(f"lensfill: theorem violation: {exc}", file=sys.stderr)
        return 2
    except LensfillError as exc:
        print(f"lensfill: error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
