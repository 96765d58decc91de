"""agcert command line: verify, list, describe, falsify-pencil, long-run."""

from __future__ import annotations

import argparse
import json
import logging
import sys

from ..ideals import Budget
from . import SCENARIOS
from .certificate import write_atomic
from .registry import ScenarioError, load_builtin, load_file, run_scenario

log = logging.getLogger("agcert")

EXIT_OK, EXIT_FAIL, EXIT_INPUT = 0, 1, 2


def _budget(args) -> Budget | None:
    if args.budget_pairs is None and args.budget_bits is None and args.budget_seconds is None:
        return None
    return Budget(max_pairs=args.budget_pairs, max_bits=args.budget_bits, max_seconds=args.budget_seconds)


def _add_budget_flags(p):
    p.add_argument("--budget-pairs", type=int, default=None, help="cap on Buchberger pair reductions")
    p.add_argument("--budget-bits", type=int, default=None, help="cap on coefficient size in bits")
    p.add_argument("--budget-seconds", type=float, default=None, help="wall-clock cap per Groebner computation")


def _summary_line(cert) -> str:
    n = len(cert.checks)
    ok = sum(c.passed for c in cert.checks)
    ind = sum(c.status == "indeterminate" for c in cert.checks)
    tag = "PASS" if cert.passed else "FAIL"
    extra = f", {ind} indeterminate" if ind else ""
    return f"{tag} {cert.scenario}: {ok}/{n} checks{extra} ({cert.timings.get('total', 0):.2f}s)"


def _emit(certs, out: str | None):
    if out:
        if len(certs) == 1:
            text = certs[0].to_json()
        else:
            text = json.dumps([c.as_dict() for c in certs], sort_keys=True, indent=2, ensure_ascii=False)
        write_atomic(out, text)


def cmd_verify(args) -> int:
    ids = SCENARIOS if args.all else ([args.id] if args.id else [])
    if not ids and not args.file:
        print("verify: give a scenario id, --all or --file", file=sys.stderr)
        return EXIT_INPUT
    certs = []
    try:
        scs = [load_file(args.file)] if args.file else [load_builtin(i) for i in ids]
        for sc in scs:
            cert = run_scenario(sc, _budget(args), optional=args.optional)
            certs.append(cert)
            print(_summary_line(cert))
            for c in cert.checks:
                if not c.passed:
                    print(f"  {c.status}: {c.name} expected={c.expected!r} computed={c.computed!r} {c.note}".rstrip())
    except ScenarioError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    _emit(certs, args.out)
    return EXIT_OK if all(c.passed for c in certs) else EXIT_FAIL


def cmd_list(args) -> int:
    for sid in SCENARIOS:
        print(sid)
    return EXIT_OK


def cmd_describe(args) -> int:
    try:
        sc = load_builtin(args.id)
    except ScenarioError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    print(f"{sc.id}: {sc.statement}")
    if sc.optional_note:
        print(f"optional: {sc.optional_note}")
    for e in sc.expected.values():
        flag = " (optional)" if e.optional else ""
        print(f"  {e.name} = {json.dumps(e.value, ensure_ascii=False)}  [{e.provenance}]{flag}")
    return EXIT_OK


def cmd_falsify(args) -> int:
    sc = load_builtin("falsify-pencil")
    if args.samples:
        sc.inputs["samples"] = args.samples.split(",")
        sc.expected["sample_count"].value = len(sc.inputs["samples"])
    try:
        cert = run_scenario(sc, _budget(args))
    except ScenarioError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    print(_summary_line(cert))
    for n in cert.notes:
        print("  " + n)
    _emit([cert], args.out)
    return EXIT_OK if cert.passed else EXIT_FAIL


def cmd_long_run(args) -> int:
    from .longrun import elimination_proof

    if not args.yes:
        print("long-run needs --yes: the full elimination is expected to exhaust desk-scale budgets", file=sys.stderr)
        return EXIT_INPUT
    budget = _budget(args) or Budget(max_pairs=20000, max_seconds=600)
    cert = elimination_proof(budget, subcase=args.subcase)
    print(_summary_line(cert))
    for n in cert.notes:
        print("  " + n)
    _emit([cert], args.out)
    return EXIT_OK if cert.passed else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="agcert", description="Exact verification of curve, surface and orbifold computations.")
    ap.add_argument("-v", "--verbose", action="store_true")
    sub = ap.add_subparsers(dest="cmd", required=True)
    v = sub.add_parser("verify", help="run scenarios and emit certificates")
    v.add_argument("id", nargs="?")
    v.add_argument("--all", action="store_true")
    v.add_argument("--file", help="scenario JSON file overriding the built-in data")
    v.add_argument("--out", help="write the certificate JSON here")
    v.add_argument("--optional", action="store_true", help="also run stretch checks")
    _add_budget_flags(v)
    v.set_defaults(fn=cmd_verify)
    sub.add_parser("list", help="list scenario ids").set_defaults(fn=cmd_list)
    d = sub.add_parser("describe", help="show a scenario and its expected values")
    d.add_argument("id")
    d.set_defaults(fn=cmd_describe)
    f = sub.add_parser("falsify-pencil", help="sample the pencil parameter")
    f.add_argument("--samples", help="comma separated parameter values")
    f.add_argument("--out")
    _add_budget_flags(f)
    f.set_defaults(fn=cmd_falsify)
    lr = sub.add_parser("long-run", help="attempt the full elimination proof (opt-in)")
    lr.add_argument("--yes", action="store_true")
    lr.add_argument("--subcase", action="store_true", help="only the reduced sub-case")
    lr.add_argument("--out")
    _add_budget_flags(lr)
    lr.set_defaults(fn=cmd_long_run)
    return ap


def main(argv=None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING, format="%(message)s")
    return args.fn(args)


if __name__ == "__main__":
    sys.exit(main())
