#!/usr/bin/env python3
"""Reproduce the classification table for F_c over Z_n on a desk-scale grid.

Writes one proof artifact per cell into the cache directory and prints the
rendered table.  Exits nonzero if any verdict contradicts the known
classification.
"""

import argparse
import json
import sys

from blockzero.classify import render_table, reproduce_table


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--n-max", type=int, default=18)
    ap.add_argument("--m-set", default="1,2")
    ap.add_argument("--budget-ms", type=int, default=60_000)
    ap.add_argument("--cap", type=int, default=24)
    ap.add_argument("--pmax", type=int, default=4)
    ap.add_argument("--max-nodes", type=int, default=300_000)
    ap.add_argument("--jobs", type=int, default=1)
    ap.add_argument("--cache-dir", default=".blockzero_cache")
    ap.add_argument("--json-out", default=None)
    args = ap.parse_args()

    report = reproduce_table(
        args.n_max,
        m_set=tuple(int(m) for m in args.m_set.split(",")),
        budget_ms=args.budget_ms,
        cap=args.cap,
        p_max=args.pmax,
        max_nodes=args.max_nodes,
        cache_dir=args.cache_dir,
        jobs=args.jobs,
    )
    print(render_table(report))
    if args.json_out:
        with open(args.json_out, "w") as fh:
            json.dump(
                [
                    {
                        "classification": c.classification.to_dict(),
                        "expected": c.expected,
                        "contradiction": c.contradiction,
                    }
                    for c in report.cells
                ],
                fh, indent=1, sort_keys=True,
            )
    return 5 if report.contradictions else 0


if __name__ == "__main__":
    sys.exit(main())
