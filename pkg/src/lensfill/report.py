"""Assemble per-pair reports and render them as text, JSON or CSV.

The JSON layout is fixed and published as schema/report.schema.json at the
repository root; identical inputs produce byte-identical output (no
timestamps, fully deterministic ordering).
"""

from __future__ import annotations

import csv
import io
import json
from typing import Any

from .fillings import (
    classify,
    invariants,
    make_params,
    rational_ball_criterion,
    uniqueness_predicate,
    zset,
)
from .homology import gamma_filling, gamma_standard, mu_basis, rotation_numbers, spin_structures
from .cfrac import dual_expansion

__all__ = ["build_report", "render_table", "csv_rows", "render_csv", "CSV_HEADER"]

CSV_HEADER = ["p", "q", "b", "n", "chi", "b2", "handles", "rot", "class_index"]


def build_report(p: int, q: int) -> dict[str, Any]:
    """Everything the tool knows about L(p, q), as a JSON-ready dict."""
    params = make_params(p, q)
    zs = zset(params)
    index = {n: i for i, n in enumerate(zs)}
    classes = [[index[d.n] for d in c.representatives] for c in classify(params)]
    fillings = []
    for n in zs:
        d = invariants(params, n)
        fillings.append(
            {
                "n": list(n),
                "chi": d.chi,
                "b2": d.b2,
                "handles": list(d.handle_counts),
                "rot": list(rotation_numbers(n)),
            }
        )
    spin = []
    for s in spin_structures(params.b, p):
        spin.append(
            {
                "s": list(s),
                "gamma_filling": gamma_filling(params.b, s),
                "gamma_standard": gamma_standard(params.b, s),
            }
        )
    witness = rational_ball_criterion(p, q)
    return {
        "p": p,
        "q": q,
        "b": list(params.b),
        "a": list(dual_expansion(params.b)),
        "qbar": params.qbar,
        "z_set": [list(n) for n in zs],
        "classes": classes,
        "fillings": fillings,
        "spin": spin,
        "flags": {
            "rational_ball": witness is not None,
            "rational_ball_witness": list(witness) if witness else None,
            "unique_filling_certified": uniqueness_predicate(p, q),
        },
    }


def _fmt_tuple(xs) -> str:
    return "(" + ",".join(str(x) for x in xs) + ")"


def render_table(report: dict[str, Any]) -> str:
    """Human-readable report, ASCII only."""
    p, q = report["p"], report["q"]
    lines = [f"L({p},{q})   qbar = {report['qbar']}"]
    lines.append(f"  p/(p-q) = {_fmt_tuple(report['b'])}    p/q = {_fmt_tuple(report['a'])}")
    fl = report["flags"]
    ball = (
        "yes (m={}, h={})".format(*fl["rational_ball_witness"])
        if fl["rational_ball"]
        else "no"
    )
    lines.append(
        f"  rational-ball filling: {ball}    unique filling certified: "
        f"{'yes' if fl['unique_filling_certified'] else 'no'}"
    )
    mb = mu_basis(tuple(report["b"]), p)
    lines.append(f"  meridian scale: mu_k = {mb.coeffs[-1]} mu_1 (mod {p})")
    lines.append(f"  fillings ({len(report['z_set'])}):")
    for i, f in enumerate(report["fillings"]):
        lines.append(
            f"    [{i}] n={_fmt_tuple(f['n'])} chi={f['chi']} b2={f['b2']} "
            f"handles={_fmt_tuple(f['handles'])} rot={_fmt_tuple(f['rot'])}"
        )
    rel = "reversal identified (q^2 = 1 mod p)" if (q * q) % p == 1 else "no identification"
    lines.append(f"  diffeomorphism classes ({len(report['classes'])}; {rel}):")
    for i, c in enumerate(report["classes"]):
        members = " ".join(_fmt_tuple(report["z_set"][j]) for j in c)
        lines.append(f"    class {i}: {members}")
    lines.append(f"  spin structures ({len(report['spin'])}):")
    for s in report["spin"]:
        lines.append(
            f"    s={_fmt_tuple(s['s'])} gamma_filling={s['gamma_filling']} "
            f"gamma_standard={s['gamma_standard']}"
        )
    return "\n".join(lines) + "\n"


def csv_rows(report: dict[str, Any]) -> list[list[str]]:
    """One row per filling; tuple-valued fields are space-joined."""
    rows = []
    class_of = {}
    for ci, c in enumerate(report["classes"]):
        for j in c:
            class_of[j] = ci
    for i, f in enumerate(report["fillings"]):
        rows.append(
            [
                str(report["p"]),
                str(report["q"]),
                " ".join(map(str, report["b"])),
                " ".join(map(str, f["n"])),
                str(f["chi"]),
                str(f["b2"]),
                " ".join(map(str, f["handles"])),
                " ".join(map(str, f["rot"])),
                str(class_of[i]),
            ]
        )
    return rows


def render_csv(reports) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_HEADER)
    for report in reports:
        writer.writerows(csv_rows(report))
    return buf.getvalue()
