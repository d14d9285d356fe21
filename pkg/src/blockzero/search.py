"""Decision procedures: avoidance-tree DFS, periodic-witness mining, and
the constructive solver for x + r*y = 0, x*y^r = 1 over a prime field.

The avoidance tree of words with no vanishing m-window is finite exactly
when the family is m-vanishing, so an exhausted DFS is a proof and its
maximal depth plus one is the exact threshold.
"""

from __future__ import annotations

import time
from dataclasses import dataclass

from .families import (
    ELEMENTARY_SYMMETRIC,
    SUM_PLUS_C_PROD,
    FunctionalFamily,
    Block,
    eval_family,
)
from .ring import ModulusContext, PreconditionError, is_cubic_residue, is_prime, sqrt_3mod4
from .verify import AVOIDING, UnsupportedFamilyError, _PeriodicEvaluator, verify_periodic
from .words import PeriodicWord, Word, min_rotation

EXHAUSTED = "exhausted"
CAP_REACHED = "cap_reached"


class InternalInvariantError(AssertionError):
    """A constructive path produced a value failing its defining equations."""


@dataclass(frozen=True)
class SearchOutcome:
    status: str  # EXHAUSTED | CAP_REACHED
    threshold: int | None
    longest_word: tuple[int, ...]
    nodes_expanded: int
    cap: int
    budget_exhausted: bool = False


def _window_checker(word: Word, fam: FunctionalFamily, m: int):
    """Returns f(L) -> True iff some m-window ending at position L vanishes."""
    n = fam.ctx.n
    zero = (0,) * fam.output_dim
    if fam.kind == ELEMENTARY_SYMMETRIC:
        def block_zero(s, l):
            return eval_family(fam, Block(word, s, l)) == zero
    elif fam.kind == SUM_PLUS_C_PROD:
        c = fam.c
        def block_zero(s, l):
            return (word.block_sum(s, l) + c * word.block_product(s, l)) % n == 0
    else:
        dims = range(fam.output_dim)
        def block_zero(s, l):
            return all(word.block_sum(s, l, i) == 0 for i in dims)

    def vanishing_window_ends_at(L):
        for l in range(2, L // m + 1):
            s = L - m * l
            # last block first: most windows die on their final block
            if not block_zero(s + (m - 1) * l, l):
                continue
            if all(block_zero(s + j * l, l) for j in range(m - 1)):
                return True
        return False

    return vanishing_window_ends_at


def longest_avoiding_word(
    ctx: ModulusContext,
    fam: FunctionalFamily,
    m: int,
    cap: int,
    max_nodes: int | None = None,
    deadline: float | None = None,
) -> SearchOutcome:
    """DFS over the avoidance tree in ascending symbol order.

    Exhausted: the tree is finite; threshold is 1 + the maximal depth and
    longest_word is the first word found at that depth.  Cap or budget
    exhaustion yields CapReached with the deepest avoiding frontier found.
    """
    if cap < 2:
        raise PreconditionError(f"cap must be >= 2, got {cap}")
    if m < 1:
        raise PreconditionError(f"m must be >= 1, got {m}")
    tables = fam.sum_tables()
    word = Word(ctx, tables=tables) if tables else Word(ctx)
    bad_ending = _window_checker(word, fam, m)

    state = {"best": 0, "word": (), "nodes": 0, "stop": None}
    check_every = 2048

    def dfs() -> None:
        state["nodes"] += 1
        L = len(word)
        if L > state["best"]:
            state["best"] = L
            state["word"] = tuple(word.symbols)
        if L >= cap:
            state["stop"] = "cap"
            return
        if max_nodes is not None and state["nodes"] >= max_nodes:
            state["stop"] = "budget"
            return
        if (
            deadline is not None
            and state["nodes"] % check_every == 0
            and time.monotonic() > deadline
        ):
            state["stop"] = "budget"
            return
        for a in range(ctx.n):
            word.push(a)
            if not bad_ending(len(word)):
                dfs()
            word.pop()
            if state["stop"]:
                return

    dfs()
    nodes = state["nodes"]
    if state["stop"] is None:
        return SearchOutcome(EXHAUSTED, state["best"] + 1, state["word"], nodes, cap)
    return SearchOutcome(
        CAP_REACHED,
        None,
        state["word"],
        nodes,
        state["best"],
        budget_exhausted=(state["stop"] == "budget"),
    )


@dataclass(frozen=True)
class MineResult:
    witnesses: tuple
    complete: bool  # False when the budget stopped the enumeration early
    candidates_checked: int


def _prefilter_ok(period, fam, m, max_l: int) -> bool:
    """Cheap scan of small block lengths; False means certainly refuted."""
    try:
        ev = _PeriodicEvaluator(period, fam)
    except UnsupportedFamilyError:
        return True
    zero = (0,) * fam.output_dim
    for l in range(2, max_l + 1):
        for s in range(ev.P):
            if all(ev.block_value(s + j * l, l) == zero for j in range(m)):
                return False
    return True


def mine_witness(
    ctx: ModulusContext,
    fam: FunctionalFamily,
    m: int,
    p_max: int,
    deadline: float | None = None,
    alphabet=None,
    limit: int | None = None,
) -> MineResult:
    """Enumerate canonical necklaces of period <= p_max and keep every one
    whose infinite repetition is certified avoiding.

    alphabet restricts the symbols tried (e.g. nonzero residues, or the
    residues below a divisor of n); enumeration order is deterministic.
    """
    if p_max < 1:
        raise PreconditionError(f"p_max must be >= 1, got {p_max}")
    symbols = tuple(alphabet) if alphabet is not None else tuple(range(ctx.n))
    witnesses = []
    checked = 0
    for P in range(1, p_max + 1):
        period = [symbols[0]] * P
        idx = [0] * P
        while True:
            if deadline is not None and time.monotonic() > deadline:
                return MineResult(tuple(witnesses), False, checked)
            t = tuple(period)
            if t == min_rotation(t):
                checked += 1
                if _prefilter_ok(t, fam, m, max_l=max(16, 4 * P)):
                    cert = verify_periodic(PeriodicWord(t, ctx.n), fam, m)
                    if cert.verdict == AVOIDING:
                        witnesses.append((PeriodicWord(t, ctx.n), cert))
                        if limit is not None and len(witnesses) >= limit:
                            return MineResult(tuple(witnesses), False, checked)
            k = P - 1
            while k >= 0 and idx[k] == len(symbols) - 1:
                idx[k] = 0
                period[k] = symbols[0]
                k -= 1
            if k < 0:
                break
            idx[k] += 1
            period[k] = symbols[idx[k]]
    return MineResult(tuple(witnesses), True, checked)


@dataclass(frozen=True)
class XYRSolution:
    p: int
    x: int
    y: int
    r: int
    method: str  # "cubic-residue" | "discriminant" | "brute-force"


def _validate_xyr(p: int, x: int, y: int, r: int) -> bool:
    return x % p != 0 and y % p != 0 and (x + r * y) % p == 0 and x * pow(y, r, p) % p == 1


def xyr_solve(p: int, method: str = "constructive") -> XYRSolution:
    """Nonzero x, y and r in {2, 3} with x + r*y = 0 and x*y^r = 1 mod p.

    Constructive path: a cube root of 4 gives r = 2; otherwise -3 is a
    square and x = (3z)^((p+1)/4) gives r = 3.  The result is always
    validated against the defining equations.
    """
    if not is_prime(p) or p % 4 != 3 or p <= 3:
        raise PreconditionError(f"p must be a prime > 3 with p = 3 mod 4, got {p}")
    if method == "brute-force":
        for r in (2, 3):
            for x in range(1, p):
                y = (-x * pow(r, -1, p)) % p
                if y and x * pow(y, r, p) % p == 1:
                    return XYRSolution(p, x, y, r, "brute-force")
        raise InternalInvariantError(f"no solution found by brute force for p={p}")
    if method != "constructive":
        raise PreconditionError(f"unknown method {method!r}")
    if is_cubic_residue(4, p):
        x = min(t for t in range(1, p) if pow(t, 3, p) == 4)
        y = (-x * pow(2, -1, p)) % p
        r = 2
        how = "cubic-residue"
    else:
        z = sqrt_3mod4(-3 % p, p)
        if z is None:
            raise InternalInvariantError(f"-3 must be a square mod {p} when 4 is not a cube")
        x = pow(3 * z % p, (p + 1) // 4, p)
        y = (-x * pow(3, -1, p)) % p
        r = 3
        how = "discriminant"
    if not _validate_xyr(p, x, y, r):
        raise InternalInvariantError(f"constructive xyr solution failed validation for p={p}")
    return XYRSolution(p, x, y, r, how)


def build_xyr_witness(sol: XYRSolution) -> PeriodicWord:
    """The period (x, y, ..., y) with r copies of y, over Z_p."""
    if not _validate_xyr(sol.p, sol.x, sol.y, sol.r):
        raise PreconditionError("invalid xyr solution")
    return PeriodicWord((sol.x,) + (sol.y,) * sol.r, sol.p)
