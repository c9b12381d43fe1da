"""Command-line front end.

Exit codes: 0 success / all checks pass, 1 verification mismatch,
2 usage error.  Data goes to stdout (or ``--out``), diagnostics to stderr.
"""
from __future__ import annotations

import argparse
import json
import math
import os
import sys
import time
from typing import Optional, Sequence

from .core import EVALUATORS, Form, SequenceKind, SequenceParams, term_stream
from .identities import IdentityId, IdentityReport, sweep
from .series import match_report

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


# -- argument types -----------------------------------------------------------

def _nonneg_int(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if v < 0:
        raise argparse.ArgumentTypeError(f"must be >= 0, got {v}")
    return v


def _kind(text: str) -> SequenceKind:
    try:
        return SequenceKind.parse(text)
    except ValueError as e:
        raise argparse.ArgumentTypeError(str(e)) from None


def _k_range(text: str) -> tuple[int, int]:
    lo_s, sep, hi_s = text.partition("..")
    try:
        lo = int(lo_s)
        hi = int(hi_s) if sep else lo
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad k range {text!r} (use K or LO..HI)") from None
    if lo < 2 or hi < lo:
        raise argparse.ArgumentTypeError(f"k range must satisfy 2 <= LO <= HI, got {text!r}")
    return lo, hi


def _int_list(text: str) -> list[int]:
    return [_nonneg_int(part) for part in text.split(",") if part.strip()]


def _identities(text: str) -> list[IdentityId]:
    out = []
    for part in text.split(","):
        part = part.strip().lower()
        if part == "all":
            out.extend(IdentityId)
            continue
        try:
            out.append(IdentityId(part))
        except ValueError:
            names = ", ".join(i.value for i in IdentityId)
            raise argparse.ArgumentTypeError(f"unknown identity {part!r}; choose from all, {names}") from None
    return out


FORM_CHOICES = {
    "paper": (Form.PAPER_LITERAL,),
    "corrected": (Form.CORRECTED,),
    "both": (Form.PAPER_LITERAL, Form.CORRECTED),
}


# -- rendering helpers --------------------------------------------------------

def dump_json(obj) -> str:
    """Canonical JSON: sorted keys, two-space indent, trailing newline."""
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"


def decimal_digits(x: int) -> int:
    """Number of decimal digits of |x| without a full int-to-str conversion."""
    x = abs(x)
    if x < 10**18:
        return len(str(x))
    est = max(0, int((x.bit_length() - 1) * math.log10(2)) - 1)
    p = 10**est
    digits = est + 1
    while x >= p * 10:
        p *= 10
        digits += 1
    return digits


def _value_json(v):
    if isinstance(v, tuple):
        return [str(x) for x in v]
    return str(v)


def _failure_json(rep: IdentityReport) -> dict:
    return {
        "identity": rep.instance.id.value,
        "form": rep.form.value,
        "k": rep.instance.k,
        "indices": rep.instance.index_map(),
        "lhs": _value_json(rep.lhs),
        "rhs": _value_json(rep.rhs),
    }


def _instance_text(rep: IdentityReport) -> str:
    parts = [f"k={rep.instance.k}"] + [f"{n}={v}" for n, v in rep.instance.indices]
    return f"{' '.join(parts)}: lhs={rep.lhs} rhs={rep.rhs}"


def _emit(text: str, out: Optional[str]) -> None:
    if out:
        with open(out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _label(params: SequenceParams) -> str:
    return f"{params.symbol}({params.k},n)"


# -- subcommands --------------------------------------------------------------

def cmd_gen(args) -> int:
    params = SequenceParams(args.kind, args.k)
    if args.start > args.stop:
        raise UsageError(f"--from {args.start} is greater than --to {args.stop}")
    rows = list(term_stream(params, args.start, args.stop))
    fmt = args.format
    if fmt == "csv":
        text = ",".join(str(v) for _, v in rows) + "\n"
    elif fmt == "bfile":
        text = "".join(f"{n} {v}\n" for n, v in rows)
    elif fmt == "json":
        text = dump_json({
            "kind": params.symbol,
            "k": params.k,
            "from": args.start,
            "to": args.stop,
            "terms": [str(v) for _, v in rows],
        })
    else:
        values = [str(v) for _, v in rows]
        nw = max(1, len(str(args.stop)))
        vw = max(len(_label(params)), *(len(s) for s in values))
        lines = [f"{'n':>{nw}}  {_label(params):>{vw}}"]
        lines += [f"{n:>{nw}}  {s:>{vw}}" for (n, _), s in zip(rows, values)]
        text = "\n".join(lines) + "\n"
    _emit(text, args.out)
    return EXIT_OK


def cmd_eval(args) -> int:
    params = SequenceParams(args.kind, args.k)
    if args.method != "all":
        _emit(f"{EVALUATORS[args.method](params, args.n)}\n", args.out)
        return EXIT_OK
    values = {name: fn(params, args.n) for name, fn in EVALUATORS.items()}
    agree = len(set(values.values())) == 1
    text = "".join(f"{name} {v}\n" for name, v in values.items())
    text += f"agreement={'true' if agree else 'false'}\n"
    _emit(text, args.out)
    if not agree:
        print(f"error: evaluators disagree for {params} at n={args.n}", file=sys.stderr)
        return EXIT_MISMATCH
    return EXIT_OK


def cmd_verify(args) -> int:
    lo, hi = args.k
    forms = FORM_CHOICES[args.form]
    report = sweep(args.identity, range(lo, hi + 1), args.n_max, forms)
    if args.format == "json":
        ids = [i.value for i in report.ids]
        doc = {
            "identity": "all" if len(ids) == len(IdentityId) else ",".join(ids),
            "form": args.form,
            "k_range": [lo, hi],
            "index_bound": args.n_max,
            "checks": report.checks,
            "passed": report.passed,
            "failures": [_failure_json(f) for f in report.failures],
            "results": [
                {
                    "identity": e.id.value,
                    "form": e.form.value,
                    "checks": e.checks,
                    "failures": len(e.failures),
                    "first_counterexample": (
                        _failure_json(e.first_counterexample) if e.failures else None
                    ),
                }
                for e in report.entries
            ],
        }
        text = dump_json(doc)
    else:
        lines = [f"{'identity':<18} {'form':<10} {'checks':>7} {'failures':>8}  first counterexample"]
        for e in report.entries:
            first = _instance_text(e.first_counterexample) if e.failures else "-"
            lines.append(
                f"{e.id.value:<18} {e.form.value:<10} {e.checks:>7} {len(e.failures):>8}  {first}"
            )
        status = "PASS" if report.passed else "FAIL"
        lines.append(f"total checks={report.checks} failures={len(report.failures)} result={status}")
        text = "\n".join(lines) + "\n"
    _emit(text, args.out)
    return EXIT_OK if report.passed else EXIT_MISMATCH


def cmd_series(args) -> int:
    params = SequenceParams(args.kind, args.k)
    forms = FORM_CHOICES[args.form]
    rep = match_report(params, args.count, forms)
    if args.format == "json":
        text = dump_json({
            "kind": params.symbol,
            "k": params.k,
            "count": args.count,
            "expected": [str(v) for v in rep.expected],
            "forms": [
                {
                    "form": f.value,
                    "gf": str(rep.forms[f].gf),
                    "coefficients": [str(v) for v in rep.forms[f].coefficients],
                    "match": rep.forms[f].matches,
                    "first_mismatch": rep.forms[f].first_mismatch,
                }
                for f in forms
            ],
        })
    else:
        lines = []
        for f in forms:
            fm = rep.forms[f]
            lines += [
                f"{params} generating function ({f.value}): {fm.gf}",
                f"  series:     {','.join(map(str, fm.coefficients))}",
                f"  recurrence: {','.join(map(str, rep.expected))}",
                f"  status:     {rep.describe(f)}",
            ]
        text = "\n".join(lines) + "\n"
    _emit(text, args.out)
    return EXIT_OK if all(rep.forms[f].matches for f in forms) else EXIT_MISMATCH


def cmd_bench(args) -> int:
    params = SequenceParams(args.kind, args.k)
    methods = [m.strip() for m in args.methods.split(",") if m.strip()]
    unknown = [m for m in methods if m not in EVALUATORS]
    if unknown or not methods:
        raise UsageError(f"unknown method(s) {unknown}; choose from {', '.join(EVALUATORS)}")
    if not args.n:
        raise UsageError("--n needs at least one index")
    rows = ["method,k,n,seconds,digits"]
    ok = True
    for n in args.n:
        values = []
        for m in methods:
            t0 = time.perf_counter()
            v = EVALUATORS[m](params, n)
            dt = time.perf_counter() - t0
            values.append(v)
            rows.append(f"{m},{params.k},{n},{dt:.6f},{decimal_digits(v)}")
        if any(v != values[0] for v in values):
            print(f"error: methods disagree for {params} at n={n}", file=sys.stderr)
            ok = False
    _emit("\n".join(rows) + "\n", args.out)
    return EXIT_OK if ok else EXIT_MISMATCH


# -- parser -------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="jacobsthal",
        description="Generalized Jacobsthal / Jacobsthal-Lucas numbers: "
        "generation, evaluation, identity checks, generating functions, benchmarks.",
    )
    sub = p.add_subparsers(dest="command", required=True)

    def seq_args(sp):
        sp.add_argument("kind", type=_kind, help="J (Jacobsthal) or j (Jacobsthal-Lucas)")
        sp.add_argument("--k", type=int, required=True, help="parameter k >= 2")

    def out_arg(sp):
        sp.add_argument("--out", metavar="PATH", help="write output to PATH instead of stdout")

    g = sub.add_parser("gen", help="print a range of terms")
    seq_args(g)
    g.add_argument("--from", dest="start", type=_nonneg_int, default=0)
    g.add_argument("--to", dest="stop", type=_nonneg_int, required=True)
    g.add_argument("--format", choices=["table", "csv", "json", "bfile"], default="table")
    out_arg(g)
    g.set_defaults(func=cmd_gen)

    e = sub.add_parser("eval", help="evaluate one term")
    seq_args(e)
    e.add_argument("--n", type=_nonneg_int, required=True)
    e.add_argument("--method", choices=[*EVALUATORS, "all"], default="matrix")
    out_arg(e)
    e.set_defaults(func=cmd_eval)

    v = sub.add_parser("verify", help="sweep identities over a grid")
    v.add_argument("--identity", type=_identities, default=list(IdentityId),
                   help="identity name, comma list, or 'all'")
    v.add_argument("--k", type=_k_range, required=True, help="K or LO..HI")
    v.add_argument("--n-max", type=_nonneg_int, required=True, help="bound on every index")
    v.add_argument("--form", choices=list(FORM_CHOICES), default="corrected")
    v.add_argument("--format", choices=["table", "json"], default="table")
    out_arg(v)
    v.set_defaults(func=cmd_verify)

    s = sub.add_parser("series", help="expand a generating function and compare")
    seq_args(s)
    s.add_argument("--count", type=_nonneg_int, required=True)
    s.add_argument("--form", choices=list(FORM_CHOICES), default="corrected")
    s.add_argument("--format", choices=["table", "json"], default="table")
    out_arg(s)
    s.set_defaults(func=cmd_series)

    b = sub.add_parser("bench", help="time evaluators, CSV rows")
    seq_args(b)
    b.add_argument("--n", type=_int_list, action="extend", default=[],
                   help="index or comma list; may repeat")
    b.add_argument("--methods", default="iter,binet,matrix")
    out_arg(b)
    b.set_defaults(func=cmd_bench)
    return p


def main(argv: Optional[Sequence[str]] = None) -> int:
    if hasattr(sys, "set_int_max_str_digits"):
        sys.set_int_max_str_digits(0)
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except (UsageError, ValueError, TypeError) as exc:
        print(f"{parser.prog} {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except BrokenPipeError:
        # reader went away (e.g. piped into head); silence the flush at exit
        devnull = os.open(os.devnull, os.O_WRONLY)
        os.dup2(devnull, sys.stdout.fileno())
        return EXIT_OK
    except OSError as exc:
        print(f"{parser.prog} {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
