"""Block-functional families over Z_n and their evaluation.

Supported shapes: sum plus c times product, transformation sums (possibly
vector-valued), combined power sums, and elementary symmetric polynomials.
Transformations are stored as explicit n-entry tables so families stay
serializable and user-definable from files.
"""

from __future__ import annotations

from dataclasses import dataclass

from .ring import ModulusContext, PreconditionError
from .words import Word, identity_table

SUM_PLUS_C_PROD = "sum_plus_c_prod"
TRANSFORMATION_SUMS = "transformation_sums"
POWER_SUMS = "power_sums"
ELEMENTARY_SYMMETRIC = "elementary_symmetric"


@dataclass(frozen=True)
class FunctionalFamily:
    ctx: ModulusContext
    kind: str
    c: int | None = None
    tables: tuple[tuple[int, ...], ...] | None = None
    r: int | None = None

    @property
    def output_dim(self) -> int:
        if self.kind == TRANSFORMATION_SUMS:
            return len(self.tables)
        if self.kind == POWER_SUMS:
            return self.r
        return 1

    def sum_tables(self) -> tuple[tuple[int, ...], ...]:
        """Tables whose running sums fully determine this family's block
        values, or () when no such decomposition exists."""
        n = self.ctx.n
        if self.kind == TRANSFORMATION_SUMS:
            return self.tables
        if self.kind == POWER_SUMS:
            return tuple(tuple(pow(x, i, n) for x in range(n)) for i in range(1, self.r + 1))
        if self.kind == SUM_PLUS_C_PROD:
            return (identity_table(self.ctx),)
        return ()

    def to_descriptor(self) -> dict:
        if self.kind == SUM_PLUS_C_PROD:
            return {"kind": self.kind, "c": self.c}
        if self.kind == TRANSFORMATION_SUMS:
            return {"kind": self.kind, "tables": [list(t) for t in self.tables]}
        return {"kind": self.kind, "r": self.r}


def sum_plus_c_prod(ctx: ModulusContext, c: int) -> FunctionalFamily:
    return FunctionalFamily(ctx, SUM_PLUS_C_PROD, c=c % ctx.n)


def transformation_sums(ctx: ModulusContext, tables) -> FunctionalFamily:
    tabs = tuple(tuple(x % ctx.n for x in t) for t in tables)
    if not tabs:
        raise PreconditionError("need at least one transformation table")
    for t in tabs:
        if len(t) != ctx.n:
            raise PreconditionError(f"table has {len(t)} entries, expected n={ctx.n}")
    return FunctionalFamily(ctx, TRANSFORMATION_SUMS, tables=tabs)


def power_sums(ctx: ModulusContext, r: int) -> FunctionalFamily:
    if r < 1:
        raise PreconditionError(f"power sum degree must be >= 1, got {r}")
    return FunctionalFamily(ctx, POWER_SUMS, r=r)


def elementary_symmetric_family(ctx: ModulusContext, r: int) -> FunctionalFamily:
    if r < 1:
        raise PreconditionError(f"elementary symmetric degree must be >= 1, got {r}")
    return FunctionalFamily(ctx, ELEMENTARY_SYMMETRIC, r=r)


def family_from_descriptor(ctx: ModulusContext, desc: dict) -> FunctionalFamily:
    kind = desc.get("kind")
    if kind == SUM_PLUS_C_PROD:
        return sum_plus_c_prod(ctx, int(desc["c"]))
    if kind == TRANSFORMATION_SUMS:
        return transformation_sums(ctx, desc["tables"])
    if kind == POWER_SUMS:
        return power_sums(ctx, int(desc["r"]))
    if kind == ELEMENTARY_SYMMETRIC:
        return elementary_symmetric_family(ctx, int(desc["r"]))
    raise PreconditionError(f"unknown family kind {kind!r}")


@dataclass(frozen=True)
class Block:
    """l >= 2 consecutive symbols of a word, by reference."""

    word: Word
    start: int
    length: int

    def __post_init__(self):
        if self.length < 2:
            raise PreconditionError(f"block length must be >= 2, got {self.length}")
        if self.start < 0 or self.start + self.length > len(self.word):
            raise PreconditionError(
                f"block (start={self.start}, length={self.length}) out of range"
            )

    def values(self) -> tuple[int, ...]:
        return tuple(self.word.symbols[self.start : self.start + self.length])


@dataclass(frozen=True)
class Window:
    """m consecutive blocks of equal length l starting at s."""

    start: int
    length: int
    count: int

    def block_starts(self):
        return [self.start + j * self.length for j in range(self.count)]


def elementary_symmetric(values, r: int, ctx: ModulusContext) -> int:
    """e_r of the values mod n by the O(l*r) incremental DP; 0 when r > l."""
    if r < 1:
        raise PreconditionError(f"degree must be >= 1, got {r}")
    n = ctx.n
    e = [1] + [0] * r
    for x in values:
        x %= n
        for k in range(min(r, len(e) - 1), 0, -1):
            e[k] = (e[k] + x * e[k - 1]) % n
    return e[r] % n


def eval_family(fam: FunctionalFamily, block: Block) -> tuple[int, ...]:
    """Exact value vector of the family's l-variable function on a block."""
    word = block.word
    n = fam.ctx.n
    if word.ctx.n != n:
        raise PreconditionError("family and word moduli differ")
    s, l = block.start, block.length
    if fam.kind == SUM_PLUS_C_PROD:
        total = word.block_sum(s, l) if word.tables and word.tables[0] == identity_table(word.ctx) else word.fold_sum(s, l, identity_table(word.ctx))
        return ((total + fam.c * word.block_product(s, l)) % n,)
    if fam.kind in (TRANSFORMATION_SUMS, POWER_SUMS):
        tabs = fam.sum_tables()
        out = []
        for i, t in enumerate(tabs):
            if i < len(word.tables) and word.tables[i] == t:
                out.append(word.block_sum(s, l, i))
            else:
                out.append(word.fold_sum(s, l, t))
        return tuple(out)
    if fam.kind == ELEMENTARY_SYMMETRIC:
        return (elementary_symmetric(block.values(), fam.r, fam.ctx),)
    raise PreconditionError(f"unknown family kind {fam.kind!r}")


def vanishing_pairs(fam: FunctionalFamily) -> set[tuple[int, int]]:
    """All pairs (a, b) with f^(2)(a, b) == 0, for scalar families."""
    if fam.output_dim != 1:
        raise PreconditionError("vanishing_pairs requires a scalar-valued family")
    ctx = fam.ctx
    out = set()
    for a in range(ctx.n):
        for b in range(ctx.n):
            w = Word(ctx, (a, b))
            if eval_family(fam, Block(w, 0, 2)) == (0,):
                out.add((a, b))
    return out


@dataclass(frozen=True)
class NewtonReport:
    status: str  # "holds" | "counterexample" | "partial"
    counterexample: tuple[int, ...] | None
    blocks_checked: int
    max_len: int


def newton_implication_check(
    ctx: ModulusContext, r: int, max_len: int, budget: int = 2_000_000
) -> NewtonReport:
    """Search for a block whose first r power sums all vanish mod n while
    e_r does not.

    Enumerates all blocks of length 2..max_len in lexicographic order and
    returns the first counterexample, "holds" if none exists, or a partial
    status once the evaluation budget runs out.
    """
    if r < 1 or max_len < r:
        raise PreconditionError(f"need r >= 1 and max_len >= r, got r={r}, max_len={max_len}")
    n = ctx.n
    checked = 0
    for length in range(2, max_len + 1):
        block = [0] * length
        while True:
            checked += 1
            if checked > budget:
                return NewtonReport("partial", None, checked - 1, max_len)
            if all(sum(pow(x, k, n) for x in block) % n == 0 for k in range(1, r + 1)):
                if elementary_symmetric(block, r, ctx) != 0:
                    return NewtonReport("counterexample", tuple(block), checked, max_len)
            # next block in lexicographic order
            i = length - 1
            while i >= 0 and block[i] == n - 1:
                block[i] = 0
                i -= 1
            if i < 0:
                break
            block[i] += 1
    return NewtonReport("holds", None, checked, max_len)
