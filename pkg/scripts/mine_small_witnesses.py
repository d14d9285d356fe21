#!/usr/bin/env python3
"""Enumerate short periodic non-vanishing witnesses for F_c over small Z_n.

For each modulus up to --n-max and each c in the requested list, list every
certified witness with period length up to --pmax, in canonical (necklace)
form.  Useful for spotting constructions smaller than the cataloged ones.
"""

import argparse
import sys
import time

from blockzero.families import sum_plus_c_prod
from blockzero.ring import ModulusContext
from blockzero.search import mine_witness


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--n-max", type=int, default=16)
    ap.add_argument("--c", default="1,-1", help="comma-separated c values")
    ap.add_argument("--m", type=int, default=1)
    ap.add_argument("--pmax", type=int, default=4)
    ap.add_argument("--budget-ms", type=int, default=10_000, help="per (n, c) pair")
    args = ap.parse_args()

    cs = [int(x) for x in args.c.split(",")]
    for n in range(2, args.n_max + 1):
        ctx = ModulusContext(n)
        seen = []
        for c in cs:
            if c % n in seen:
                continue
            seen.append(c % n)
            fam = sum_plus_c_prod(ctx, c % n)
            deadline = time.monotonic() + args.budget_ms / 1000.0
            res = mine_witness(ctx, fam, args.m, args.pmax, deadline=deadline)
            if res.witnesses:
                periods = " ".join(
                    "(" + ",".join(map(str, pw.period)) + ")" for pw, _ in res.witnesses
                )
                print(f"n={n:>3} c={c % n:>3} m={args.m}: {periods}")
            else:
                note = "none" if res.complete else "none within budget"
                print(f"n={n:>3} c={c % n:>3} m={args.m}: {note}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
