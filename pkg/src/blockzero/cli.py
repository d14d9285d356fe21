"""Command-line surface: evaluation, certification, search, mining,
classification and table reproduction, with deterministic output and
proof artifacts persisted under a cache directory."""

from __future__ import annotations

import argparse
import json
import os
import sys
import time

from .classify import (
    classify,
    NONVANISHING_PROVED,
    VANISHING_PROVED,
    ContradictionError,
    family_hash,
    render_table,
    reproduce_table,
)
from .families import (
    FunctionalFamily,
    elementary_symmetric_family,
    power_sums,
    sum_plus_c_prod,
    transformation_sums,
    eval_family,
    Block,
)
from .ring import ModulusContext, PreconditionError
from .search import EXHAUSTED, longest_avoiding_word, mine_witness, xyr_solve
from .verify import AVOIDING, save_certificate, verify_periodic
from .words import PeriodicWord, Word, parse_symbols

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_REFUTED = 3
EXIT_BUDGET = 4
EXIT_CONTRADICTION = 5

CACHE_ENV = "BLOCKZERO_CACHE_DIR"


def parse_family(spec: str, ctx: ModulusContext) -> FunctionalFamily:
    """Parse the kind:param mini-syntax used on the command line."""
    kind, sep, param = spec.partition(":")
    if kind == "sum_plus_c_prod":
        if not sep:
            raise PreconditionError("sum_plus_c_prod needs :c")
        return sum_plus_c_prod(ctx, int(param))
    if kind == "power_sums":
        return power_sums(ctx, int(param))
    if kind == "elementary_symmetric":
        return elementary_symmetric_family(ctx, int(param))
    if kind == "transformation_sums":
        if param.startswith("@"):
            with open(param[1:]) as fh:
                tables = json.load(fh)
        else:
            tables = json.loads(param)
        return transformation_sums(ctx, tables)
    raise PreconditionError(f"unknown family {spec!r}")


def resolve_cache_dir(flag_value: str | None) -> str:
    d = flag_value or os.environ.get(CACHE_ENV) or ".blockzero_cache"
    os.makedirs(d, exist_ok=True)
    return d


def append_run_record(cache_dir: str, command: str, args: list[str], started: float,
                      outcome: str, artifacts: list[str]) -> None:
    rec = {
        "command": command,
        "arguments": args,
        "started": started,
        "ended": time.time(),
        "outcome": outcome,
        "artifacts": artifacts,
    }
    with open(os.path.join(cache_dir, "runs.jsonl"), "a") as fh:
        fh.write(json.dumps(rec, sort_keys=True) + "\n")


def cmd_eval(args) -> int:
    ctx = ModulusContext(args.n)
    fam = parse_family(args.family, ctx)
    symbols = parse_symbols(args.block, ctx)
    word = Word(ctx, symbols, tables=fam.sum_tables() or None)
    value = eval_family(fam, Block(word, 0, len(symbols)))
    print(",".join(map(str, value)))
    return EXIT_OK


def cmd_verify(args) -> int:
    started = time.time()
    ctx = ModulusContext(args.n)
    fam = parse_family(args.family, ctx)
    pw = PeriodicWord(parse_symbols(args.period, ctx), ctx.n)
    cert = verify_periodic(pw, fam, args.m)
    cache_dir = resolve_cache_dir(args.cache_dir)
    name = f"cert_{ctx.n}_{family_hash(fam)}_{args.m}_" + "-".join(map(str, cert.period)) + ".json"
    path = args.out or os.path.join(cache_dir, name)
    save_certificate(cert, path)
    print(f"verdict: {cert.verdict}")
    print(f"checked_max_l: {cert.checked_max_l}")
    if cert.counter_window is not None:
        s, l = cert.counter_window
        print(f"counter_window: s={s} l={l}")
    print(f"certificate: {path}")
    append_run_record(cache_dir, "verify", sys.argv[2:], started, cert.verdict, [path])
    return EXIT_OK if cert.verdict == AVOIDING else EXIT_REFUTED


def cmd_search(args) -> int:
    started = time.time()
    ctx = ModulusContext(args.n)
    fam = parse_family(args.family, ctx)
    deadline = time.monotonic() + args.budget_ms / 1000.0 if args.budget_ms else None
    out = longest_avoiding_word(
        ctx, fam, args.m, args.cap, max_nodes=args.max_nodes, deadline=deadline
    )
    print(f"status: {out.status}")
    if out.status == EXHAUSTED:
        print(f"threshold: {out.threshold}")
    print("longest_word: " + ",".join(map(str, out.longest_word)))
    print(f"nodes_expanded: {out.nodes_expanded}")
    cache_dir = resolve_cache_dir(args.cache_dir)
    append_run_record(cache_dir, "search", sys.argv[2:], started, out.status, [])
    return EXIT_BUDGET if out.budget_exhausted else EXIT_OK


def cmd_mine(args) -> int:
    started = time.time()
    ctx = ModulusContext(args.n)
    fam = parse_family(args.family, ctx)
    deadline = time.monotonic() + args.budget_ms / 1000.0 if args.budget_ms else None
    alphabet = range(1, ctx.n) if args.nonzero else None
    res = mine_witness(
        ctx, fam, args.m, args.pmax,
        deadline=deadline, alphabet=alphabet, limit=args.limit,
    )
    cache_dir = resolve_cache_dir(args.cache_dir)
    artifacts = []
    for pw, cert in res.witnesses:
        name = f"cert_{ctx.n}_{family_hash(fam)}_{args.m}_" + "-".join(map(str, cert.period)) + ".json"
        path = os.path.join(cache_dir, name)
        save_certificate(cert, path)
        artifacts.append(path)
        print("witness: " + ",".join(map(str, cert.period)))
    print(f"witnesses_found: {len(res.witnesses)}")
    print(f"candidates_checked: {res.candidates_checked}")
    print(f"enumeration_complete: {res.complete}")
    append_run_record(cache_dir, "mine", sys.argv[2:], started,
                      f"{len(res.witnesses)} witnesses", artifacts)
    if not res.complete and (args.limit is None or len(res.witnesses) < args.limit):
        return EXIT_BUDGET
    return EXIT_OK


def cmd_classify(args) -> int:
    started = time.time()
    cache_dir = resolve_cache_dir(args.cache_dir)
    cls = classify(
        args.n, args.c, args.m,
        budget_ms=args.budget_ms, cap=args.cap, p_max=args.pmax,
        max_nodes=args.max_nodes, cache_dir=cache_dir,
    )
    print(f"verdict: {cls.verdict}")
    if cls.verdict == NONVANISHING_PROVED:
        print("witness: " + ",".join(map(str, cls.witness)))
    if cls.verdict == VANISHING_PROVED:
        print(f"threshold: {cls.threshold}")
    print(f"provenance: {cls.provenance}")
    append_run_record(cache_dir, "classify", sys.argv[2:], started, cls.verdict, [])
    return EXIT_OK


def cmd_xyr(args) -> int:
    sol = xyr_solve(args.p, method=args.method)
    print(f"x={sol.x} y={sol.y} r={sol.r}")
    print(f"method: {sol.method}")
    return EXIT_OK


def cmd_report(args) -> int:
    started = time.time()
    cache_dir = resolve_cache_dir(args.cache_dir)
    report = reproduce_table(
        args.n_max,
        m_set=tuple(int(m) for m in args.m_set.split(",")),
        budget_ms=args.budget_ms, cap=args.cap, p_max=args.pmax,
        max_nodes=args.max_nodes, cache_dir=cache_dir, jobs=args.jobs,
    )
    print(render_table(report))
    if args.json_out:
        with open(args.json_out, "w") as fh:
            json.dump(
                {
                    "cells": [
                        {
                            "classification": c.classification.to_dict(),
                            "expected": c.expected,
                            "contradiction": c.contradiction,
                        }
                        for c in report.cells
                    ]
                },
                fh, indent=1, sort_keys=True,
            )
    append_run_record(cache_dir, "report", sys.argv[2:], started,
                      f"{len(report.contradictions)} contradictions",
                      list(report.reproducer_paths) + ([args.json_out] if args.json_out else []))
    return EXIT_CONTRADICTION if report.contradictions else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="blockzero",
        description="Vanishing-window analysis of block functionals over Z_n",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    def common(p, cache=True):
        if cache:
            p.add_argument("--cache-dir", default=None,
                           help=f"proof artifact directory (default ${CACHE_ENV} or .blockzero_cache)")

    p = sub.add_parser("eval", help="evaluate a family on one block")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--family", required=True)
    p.add_argument("--block", required=True)
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("verify", help="certify a periodic word avoiding or refuted")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--family", required=True)
    p.add_argument("--m", type=int, default=1)
    p.add_argument("--period", required=True)
    p.add_argument("--out", default=None, help="certificate file path")
    common(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("search", help="DFS over the avoidance tree")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--family", required=True)
    p.add_argument("--m", type=int, default=1)
    p.add_argument("--cap", type=int, default=32)
    p.add_argument("--max-nodes", type=int, default=None)
    p.add_argument("--budget-ms", type=int, default=None)
    common(p)
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("mine", help="enumerate periodic witnesses")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--family", required=True)
    p.add_argument("--m", type=int, default=1)
    p.add_argument("--pmax", type=int, default=4)
    p.add_argument("--budget-ms", type=int, default=None)
    p.add_argument("--nonzero", action="store_true", help="restrict to nonzero symbols")
    p.add_argument("--limit", type=int, default=None)
    common(p)
    p.set_defaults(func=cmd_mine)

    p = sub.add_parser("classify", help="verdict for one (n, c, m)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--c", type=int, required=True)
    p.add_argument("--m", type=int, default=1)
    p.add_argument("--budget-ms", type=int, default=60_000)
    p.add_argument("--cap", type=int, default=24)
    p.add_argument("--pmax", type=int, default=4)
    p.add_argument("--max-nodes", type=int, default=300_000)
    common(p)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("xyr", help="solve x + r*y = 0, x*y^r = 1 mod p")
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--method", default="constructive",
                   choices=["constructive", "brute-force"])
    p.set_defaults(func=cmd_xyr)

    p = sub.add_parser("report", help="classify a grid and compare with the known table")
    p.add_argument("--n-max", type=int, required=True)
    p.add_argument("--m-set", default="1,2")
    p.add_argument("--budget-ms", type=int, default=60_000)
    p.add_argument("--cap", type=int, default=24)
    p.add_argument("--pmax", type=int, default=4)
    p.add_argument("--max-nodes", type=int, default=300_000)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--json-out", default=None)
    common(p)
    p.set_defaults(func=cmd_report)

    return ap


def main(argv=None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    try:
        return args.func(args)
    except ContradictionError as e:
        print(f"contradiction: {e}", file=sys.stderr)
        return EXIT_CONTRADICTION
    except PreconditionError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except (OSError, json.JSONDecodeError, ValueError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
