"""Independent oracles used to freeze expected values.

Everything here is deliberately naive and self-contained: plain folds,
breadth-first enumeration, subset expansion.  Nothing imports the package
internals whose answers these oracles are checking.
"""

from itertools import combinations
from math import prod


def naive_block_sum(symbols, n, table=None):
    if table is None:
        return sum(symbols) % n
    return sum(table[s] for s in symbols) % n


def naive_block_product(symbols, n):
    return prod(symbols) % n


def naive_f_c(symbols, n, c):
    return (naive_block_sum(symbols, n) + c * naive_block_product(symbols, n)) % n


def naive_elementary_symmetric(symbols, r, n):
    if r > len(symbols):
        return 0
    return sum(prod(sub) for sub in combinations(symbols, r)) % n


def has_vanishing_window(word, n, c, m, ending_at=None):
    """Naive scan for an all-zero m-window of the sum-plus-c-product family."""
    L = len(word)
    positions = [L] if ending_at else range(2 * m, L + 1)
    for end in positions:
        for l in range(2, end // m + 1):
            s = end - m * l
            if s < 0:
                continue
            if all(naive_f_c(word[s + j * l : s + (j + 1) * l], n, c) == 0 for j in range(m)):
                return True
    return False


def bfs_threshold(n, c, m, max_len=64, max_level=2_000_000):
    """Breadth-first search for the minimal L such that every word of
    length L contains a vanishing m-window.  Returns (threshold, one
    maximal avoiding word)."""
    level = [()]
    for L in range(1, max_len + 1):
        nxt = []
        for w in level:
            for a in range(n):
                w2 = w + (a,)
                if not has_vanishing_window(w2, n, c, m, ending_at=True):
                    nxt.append(w2)
        if not nxt:
            return L, level[0]
        if len(nxt) > max_level:
            raise RuntimeError(f"oracle blowup at length {L}")
        level = nxt
    raise RuntimeError(f"no threshold up to length {max_len}")


def bfs_threshold_tables(n, tables, m, max_len=64):
    """Same oracle for vector-valued transformation-sum families."""

    def window_ok(w2):
        L = len(w2)
        for l in range(2, L // m + 1):
            s = L - m * l
            for j in range(m):
                blk = w2[s + j * l : s + (j + 1) * l]
                if all(naive_block_sum(blk, n, t) == 0 for t in tables):
                    continue
                break
            else:
                return False
        return True

    level = [()]
    for L in range(1, max_len + 1):
        nxt = [w + (a,) for w in level for a in range(n) if window_ok(w + (a,))]
        if not nxt:
            return L, level[0]
        level = nxt
    raise RuntimeError(f"no threshold up to length {max_len}")


class Lcg:
    """Tiny deterministic generator: fixed enumeration order, no randomness
    beyond the seed."""

    def __init__(self, seed=0x2545F491):
        self.state = seed & 0xFFFFFFFF

    def next(self) -> int:
        self.state = (1103515245 * self.state + 12345) & 0xFFFFFFFF
        return self.state >> 16

    def below(self, bound: int) -> int:
        return self.next() % bound
