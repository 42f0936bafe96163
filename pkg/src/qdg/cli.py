"""Command-line front end: run the verification suite, compute normal
forms, and emit graded-dimension tables.

Exit codes: 0 all checks pass, 1 check failure, 2 usage or parse error,
3 resource budget exceeded.  QDG_TERM_BUDGET and QDG_WORD_CAP override the
engine limits.
"""

from __future__ import annotations

import argparse
import fnmatch
import json
import os
import sys
import time
from concurrent.futures import ThreadPoolExecutor
from typing import Callable, Dict, List

from . import __version__
from . import boxtilde as bt
from . import freealg, gradings, identities
from .expr import ParseError, eval_text, render
from .qcoeff import DEFAULT_RING, NotInvertibleError

DEFAULT_SEED = 20260810


def build_checks(seed: int = DEFAULT_SEED) -> Dict[str, Callable[[], identities.CheckResult]]:
    """The full named check registry, in deterministic order."""
    checks: Dict[str, Callable[[], identities.CheckResult]] = {}

    def add_batch(results_fn, names):
        # group functions return full lists; memoize one run per batch
        cache = {}

        def run(name):
            if not cache:
                for r in results_fn():
                    cache[r.name] = r
            return cache[name]

        for name in names:
            checks[name] = lambda name=name: run(name)

    s_names = ["s_commutation.i%d.%s" % (i, side) for i in range(4) for side in ("right", "left")]
    add_batch(identities.check_s_commutation, s_names)

    for table in identities.ALL_TABLES:
        for column in table.columns:
            checks["tables.%s" % column] = (
                lambda table=table, column=column: identities.check_table_column(table, column)
            )

    add_batch(identities.check_qdg_error_terms, ["qdg_error_terms.first", "qdg_error_terms.second"])

    general_names = []
    for label, _, side in identities.GENERAL_QDG_CONFIGS:
        general_names += ["general_qdg.%s.first" % label, "general_qdg.%s.second" % label]
        if side:
            general_names.append("general_qdg.%s.side_condition" % label)
    add_batch(identities.check_general_qdg, general_names)

    pres_names = (
        ["presentation_maps.rho.i%d" % i for i in range(4)]
        + ["presentation_maps.scaling.weyl.i%d" % i for i in range(4)]
        + ["presentation_maps.scaling.serre.i%d" % i for i in range(4)]
        + ["presentation_maps.tet.weyl.i%d" % i for i in range(4)]
        + ["presentation_maps.tet.serre.i%d" % i for i in range(4)]
    )
    add_batch(identities.check_presentation_maps, pres_names)

    for name, thunk in identities.engine_checks(seed):
        checks[name] = thunk
    for name, thunk in gradings.gradings_checks(seed):
        checks[name] = thunk
    for name, thunk in identities.negative_controls():
        checks[name] = thunk
    return checks


def run_checks(names: List[str], registry, jobs: int):
    def run_one(name):
        start = time.perf_counter()
        result = registry[name]()
        elapsed = (time.perf_counter() - start) * 1000.0
        return name, result, elapsed

    if jobs > 1:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            rows = list(pool.map(run_one, names))
    else:
        rows = [run_one(name) for name in names]
    return sorted(rows, key=lambda r: r[0])


def _report(rows, jobs: int, seed: int) -> dict:
    checks = []
    passed = failed = 0
    for name, result, ms in rows:
        entry = {"name": name, "status": result.status, "ms": round(ms, 3)}
        if result.witness is not None:
            entry["witness"] = str(result.witness)
        checks.append(entry)
        if result.ok:
            passed += 1
        else:
            failed += 1
    return {
        "version": __version__,
        "config": {
            "ring": list(DEFAULT_RING.symbols),
            "term_budget": bt.LIMITS.term_budget,
            "word_cap": bt.LIMITS.word_cap,
            "jobs": jobs,
            "seed": seed,
        },
        "checks": checks,
        "summary": {"pass": passed, "fail": failed},
    }


def cmd_verify(args) -> int:
    registry = build_checks(args.seed)
    names = sorted(registry)
    if args.check:
        names = [n for n in names if fnmatch.fnmatchcase(n, args.check)]
        if not names:
            print("no check matches %r" % args.check, file=sys.stderr)
            return 2
    rows = run_checks(names, registry, args.jobs)
    report = _report(rows, args.jobs, args.seed)
    if args.json:
        print(json.dumps(report, indent=2, sort_keys=True))
    else:
        width = max(len(n) for n in names)
        for entry in report["checks"]:
            line = "%-*s  %-4s  %8.1f ms" % (width, entry["name"], entry["status"], entry["ms"])
            print(line)
            if entry["status"] == "fail" and "witness" in entry:
                print("    witness: %s" % entry["witness"])
        print(
            "%d checks: %d pass, %d fail"
            % (len(names), report["summary"]["pass"], report["summary"]["fail"])
        )
    return 0 if report["summary"]["fail"] == 0 else 1


def cmd_nf(args) -> int:
    try:
        value = eval_text(args.expr, mode="box")
    except ParseError as exc:
        print("parse error: %s" % exc, file=sys.stderr)
        return 2
    except NotInvertibleError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2
    except (bt.ReductionBudgetError, bt.TermBudgetError) as exc:
        print("budget exceeded: %s" % exc, file=sys.stderr)
        return 3
    print(render(value))
    return 0


def cmd_dims(args) -> int:
    if args.max > freealg.DEGREE_CAP:
        print(
            "max degree %d exceeds the cap %d" % (args.max, freealg.DEGREE_CAP),
            file=sys.stderr,
        )
        return 2
    import random

    rng = random.Random(args.seed)
    rows = []
    for n in range(args.max + 1):
        span = freealg.relation_span(n)
        rank = freealg.rank_over_fraction_field(span, n)
        spec_rank = freealg.rank_by_specialization(span, n, rng=rng)
        rows.append(
            {
                "n": n,
                "words": 2 ** n,
                "rank": rank,
                "dim": 2 ** n - rank,
                "specialization_agrees": spec_rank == rank,
            }
        )
    if args.json:
        print(
            json.dumps(
                {
                    "version": __version__,
                    "config": {"ring": list(DEFAULT_RING.symbols), "seed": args.seed},
                    "rows": rows,
                },
                indent=2,
                sort_keys=True,
            )
        )
    else:
        print("%4s %8s %6s %6s %s" % ("n", "words", "rank", "dim", "spec-check"))
        for row in rows:
            print(
                "%4d %8d %6d %6d %s"
                % (
                    row["n"],
                    row["words"],
                    row["rank"],
                    row["dim"],
                    "ok" if row["specialization_agrees"] else "MISMATCH",
                )
            )
    if not all(row["specialization_agrees"] for row in rows):
        return 1
    return 0


def _apply_env_limits() -> None:
    term = os.environ.get("QDG_TERM_BUDGET")
    word = os.environ.get("QDG_WORD_CAP")
    if term:
        bt.LIMITS.term_budget = int(term)
    if word:
        bt.LIMITS.word_cap = int(word)


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(
        prog="qdg", description="exact verification kernel for the box-algebra identity suite"
    )
    parser.add_argument("--version", action="version", version="qdg %s" % __version__)
    sub = parser.add_subparsers(dest="command", required=True)

    p_verify = sub.add_parser("verify", help="run the verification suite")
    group = p_verify.add_mutually_exclusive_group()
    group.add_argument("--all", action="store_true", help="run every check (default)")
    group.add_argument("--check", metavar="GLOB", help="run checks matching a name glob")
    p_verify.add_argument("--json", action="store_true", help="emit a JSON report")
    p_verify.add_argument("--jobs", type=int, default=os.cpu_count() or 1)
    p_verify.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p_verify.set_defaults(func=cmd_verify)

    p_nf = sub.add_parser("nf", help="print the normal form of a box-mode expression")
    p_nf.add_argument("expr")
    p_nf.set_defaults(func=cmd_nf)

    p_dims = sub.add_parser("dims", help="graded dimension table")
    p_dims.add_argument("--max", type=int, required=True)
    p_dims.add_argument("--json", action="store_true")
    p_dims.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p_dims.set_defaults(func=cmd_dims)

    args = parser.parse_args(argv)
    _apply_env_limits()
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
