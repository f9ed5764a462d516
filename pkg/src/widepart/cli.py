"""Command line entry point: ``wide <command> ...``.

Exit codes: 0 success/true, 1 negative verdict, 2 usage error, 3 budget
exhausted, 4 conjecture counterexample.  WIDE_BUDGET overrides the default
backtracking node budget.
"""
from __future__ import annotations

import argparse
import json
import sys
from typing import Optional, Sequence

from . import campaigns
from .campaigns import EXIT_BUDGET, EXIT_NEGATIVE, EXIT_OK, EXIT_USAGE
from .graphs import check_delta_conjugacy
from .partitions import (
    embed_self_conjugate,
    format_partition,
    is_self_conjugate,
    is_wide,
    parse_partition,
)
from .search import BUDGET, DEFAULT_NODE_BUDGET, default_budget
from .tableau import latin_tableau, validate_latin

SEQ_MAX = 80


class UsageError(Exception):
    pass


def _partition(text: str):
    try:
        return parse_partition(text)
    except ValueError as exc:
        raise UsageError(f"bad partition {text!r}: {exc}") from None


def _box(text: str) -> tuple[int, int]:
    try:
        r, c = text.lower().split("x")
        return int(r), int(c)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected RxC, got {text!r}") from None


def _emit_report(report, args) -> int:
    text = report.dumps(timing=getattr(args, "timing", False))
    if getattr(args, "out", None):
        with open(args.out, "w") as fh:
            fh.write(text + "\n")
    if getattr(args, "json", False):
        print(text)
    return report.exit_code


def cmd_check(args) -> int:
    lam = _partition(args.partition)
    verdict = is_wide(lam)
    if verdict.wide:
        print(f"({format_partition(lam)}) is wide")
        return EXIT_OK
    mu = verdict.witness
    print(
        f"({format_partition(lam)}) is not wide: lower subpartition ({format_partition(mu)}) "
        f"does not dominate its conjugate ({format_partition(mu.conjugate())}) at j={verdict.index}"
    )
    return EXIT_NEGATIVE


def cmd_seq(args) -> int:
    if not 1 <= args.n <= SEQ_MAX:
        raise UsageError(f"n must be between 1 and {SEQ_MAX}")
    report = campaigns.sequence_campaign(args.n)
    if args.json:
        print(report.dumps(timing=args.timing))
        return report.exit_code
    print(f"{'n':>3} {'count':>8} {'expected':>8}")
    for it in report.items:
        exp = "-" if it["expected"] is None else it["expected"]
        mark = "" if it["passed"] else "  MISMATCH"
        print(f"{it['n']:>3} {it['count']:>8} {exp:>8}{mark}")
    return report.exit_code


def cmd_verify(args) -> int:
    report = campaigns.verify_wpc(
        max_cells=args.max_cells,
        box=args.box,
        method=args.method,
        budget=args.budget,
        max_switches=args.switches,
        workers=args.workers,
    )
    if args.json or args.out:
        _emit_report(report, args)
    if not args.json:
        by_method: dict = {}
        for it in report.items:
            by_method[it["method"]] = by_method.get(it["method"], 0) + 1
        summary = ", ".join(f"{m}: {n}" for m, n in sorted(by_method.items()))
        print(f"{len(report.items)} wide shapes checked ({summary}), {len(report.failures())} failed")
        for it in report.failures():
            print(f"  FAILED {it['shape']}: {it['status']} via {it['method']}")
        if report.exit_code == campaigns.EXIT_COUNTEREXAMPLE:
            print("!! exhaustive search found no Latin tableau for a wide shape: counterexample")
    return report.exit_code


def cmd_latin(args) -> int:
    lam = _partition(args.partition)
    res = latin_tableau(lam, method=args.method, budget=args.budget, max_switches=args.switches)
    if res.tableau is not None:
        assert validate_latin(res.tableau)
        if args.json:
            print(json.dumps({"shape": list(lam), "method": res.method, "tableau": res.tableau.to_json()}))
        else:
            print(f"# method: {res.method}")
            sys.stdout.write(res.tableau.to_text())
        return EXIT_OK
    for line in res.trace:
        print(line, file=sys.stderr)
    if res.status == BUDGET:
        print("budget exhausted", file=sys.stderr)
        return EXIT_BUDGET
    print(f"no Latin tableau found ({res.method})")
    return EXIT_NEGATIVE


def _flag(v) -> str:
    return {True: "yes", False: "no", None: "unknown (budget)"}[v]


def cmd_analyze(args) -> int:
    lam = _partition(args.partition)
    report = check_delta_conjugacy(lam, search_budget=args.budget, covers=not args.no_covers)
    if args.json:
        print(json.dumps(report.to_json(), sort_keys=True))
    else:
        f = report.flags
        print(f"shape       {format_partition(lam)}")
        print(f"omega       {report.omega}")
        print(f"alpha       {report.alpha}")
        print(f"d_omega     {report.delta_omega}")
        print(f"d_alpha     {report.delta_alpha}")
        for key in ("delta_omega_is_partition", "delta_alpha_is_partition", "delta_conjugacy"):
            print(f"{key:<28}{_flag(f[key])}")
        for key in ("k_saturated_clique_cover", "k_saturated_stable_cover"):
            missing = [k for k, ok in f[key].items() if not ok]
            print(f"{key:<28}{'all k' if not missing else 'fails at k=' + ','.join(map(str, missing))}")
        for key in ("uniform_clique_cover", "uniform_stable_cover"):
            if key in f:
                print(f"{key:<28}{_flag(f[key])}")
    covers = [report.flags[k] for k in ("uniform_clique_cover", "uniform_stable_cover") if k in report.flags]
    return EXIT_BUDGET if None in covers else EXIT_OK


def cmd_counterexamples(args) -> int:
    report = campaigns.counterexamples_campaign()
    if args.json or args.out:
        _emit_report(report, args)
    if not args.json:
        for it in report.items:
            state = "ok" if it["passed"] else "not found"
            where = it.get("shape") or f"{it.get('outer')}/{it.get('inner')}"
            print(f"{it['id']:<16}{state:<10}{where}")
    return report.exit_code


def cmd_embed(args) -> int:
    lam = _partition(args.partition)
    if not is_wide(lam):
        print(f"refused: ({format_partition(lam)}) is not wide")
        return EXIT_NEGATIVE
    mu = embed_self_conjugate(lam)
    print(format_partition(mu))
    print(f"self-conjugate: {_flag(is_self_conjugate(mu))}")
    print(f"wide: {_flag(bool(is_wide(mu)))}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="wide", description="Wide partitions and Latin tableaux.")
    sub = p.add_subparsers(dest="command", required=True)

    def budget_flags(sp):
        sp.add_argument(
            "--budget",
            type=int,
            default=None,
            help=f"backtracking node cap (default {DEFAULT_NODE_BUDGET}, or WIDE_BUDGET)",
        )
        sp.add_argument(
            "--switches", type=int, default=None, help="path switches per chain level (default |cells|^2)"
        )

    sp = sub.add_parser("check", help="test wideness")
    sp.add_argument("partition", help='comma separated parts, e.g. "3,2,1"')
    sp.set_defaults(func=cmd_check)

    sp = sub.add_parser("seq", help="count wide partitions of 1..n")
    sp.add_argument("n", type=int)
    sp.add_argument("--json", action="store_true")
    sp.add_argument("--timing", action="store_true", help="include wall-clock time in JSON")
    sp.set_defaults(func=cmd_seq)

    sp = sub.add_parser("verify", help="Latin tableaux for all wide shapes in range")
    rng = sp.add_mutually_exclusive_group(required=True)
    rng.add_argument("--max-cells", type=int)
    rng.add_argument("--box", type=_box, help="RxC, e.g. 8x8")
    sp.add_argument("--method", choices=("auto", "chain", "backtrack"), default="auto")
    sp.add_argument("--workers", type=int, default=1)
    sp.add_argument("--json", action="store_true", help="print the JSON report")
    sp.add_argument("--out", help="write the JSON report to a file")
    sp.add_argument("--timing", action="store_true")
    budget_flags(sp)
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("latin", help="build a Latin tableau")
    sp.add_argument("partition")
    sp.add_argument("--method", choices=("auto", "chain", "backtrack"), default="auto")
    sp.add_argument("--json", action="store_true")
    budget_flags(sp)
    sp.set_defaults(func=cmd_latin)

    sp = sub.add_parser("analyze", help="omega/alpha tables and cover findings")
    sp.add_argument("partition")
    sp.add_argument("--json", action="store_true")
    sp.add_argument("--no-covers", action="store_true", help="skip the uniform cover searches")
    sp.add_argument("--budget", type=int, default=None)
    sp.set_defaults(func=cmd_analyze)

    sp = sub.add_parser("counterexamples", help="search and certify the failure examples")
    sp.add_argument("--json", action="store_true")
    sp.add_argument("--out")
    sp.add_argument("--timing", action="store_true")
    sp.set_defaults(func=cmd_counterexamples)

    sp = sub.add_parser("embed", help="embed a wide partition in a self-conjugate one")
    sp.add_argument("partition")
    sp.set_defaults(func=cmd_embed)
    return p


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "budget", None) is None and hasattr(args, "budget"):
        args.budget = default_budget()
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"wide: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
