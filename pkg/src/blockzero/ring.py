"""Exact arithmetic in Z_n with factored representations.

Residues are plain ints in [0, n).  A ModulusContext carries the modulus,
its prime factorization and the lookup tables (unit inverses, factored
forms) that make incremental block products cheap.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache


class PreconditionError(ValueError):
    """An operation was called outside its stated domain."""


def factorize(n: int) -> tuple[tuple[int, int], ...]:
    """Prime factorization of n by trial division, primes ascending."""
    if n < 2:
        raise PreconditionError(f"modulus must be >= 2, got {n}")
    out = []
    m = n
    p = 2
    while p * p <= m:
        if m % p == 0:
            e = 0
            while m % p == 0:
                m //= p
                e += 1
            out.append((p, e))
        p += 1 if p == 2 else 2
    if m > 1:
        out.append((m, 1))
    return tuple(out)


@lru_cache(maxsize=None)
def is_prime(p: int) -> bool:
    if p < 2:
        return False
    return factorize(p) == ((p, 1),)


@dataclass(frozen=True)
class FactoredElement:
    """A residue split as unit * prod(p_i^e_i) over the primes of n.

    is_zero is an absorbing flag: exponent bookkeeping cannot represent 0,
    and prefix-product subtraction relies on never conflating 0 with a
    large power of a prime.
    """

    is_zero: bool
    unit: int
    exponents: tuple[int, ...]

    def reconstruct(self, ctx: "ModulusContext") -> int:
        if self.is_zero:
            return 0
        v = self.unit
        for (p, _), e in zip(ctx.factorization, self.exponents):
            v = v * pow(p, e, ctx.n) % ctx.n
        return v


@dataclass(frozen=True)
class PowerCycle:
    """Minimal (preperiod, cycle_len) of the power sequence g, g^2, g^3, ...

    g^(preperiod + cycle_len + 1) == g^(preperiod + 1) mod n, with both
    values minimal (indices count from the first power g^1).
    """

    base: int
    preperiod: int
    cycle_len: int


class ModulusContext:
    """The ring Z_n: factorization, unit inverses, factored residues."""

    def __init__(self, n: int):
        self.n = n
        self.factorization = factorize(n)
        self.alpha_bound = max(1, math.ceil(math.log2(n)))
        self.primes = tuple(p for p, _ in self.factorization)
        self._inverses: list[int | None] | None = None
        self._factors: list[FactoredElement] | None = None

    def __repr__(self):
        return f"ModulusContext(n={self.n})"

    def __eq__(self, other):
        return isinstance(other, ModulusContext) and other.n == self.n

    def __hash__(self):
        return hash(("ModulusContext", self.n))

    def residue(self, x: int) -> int:
        return x % self.n

    @property
    def inverse_table(self) -> list:
        if self._inverses is None:
            inv: list[int | None] = [None] * self.n
            for u in range(1, self.n):
                if math.gcd(u, self.n) == 1:
                    inv[u] = pow(u, -1, self.n)
            self._inverses = inv
        return self._inverses

    def inv(self, u: int) -> int:
        r = self.inverse_table[u % self.n]
        if r is None:
            raise PreconditionError(f"{u} is not a unit mod {self.n}")
        return r

    @property
    def factor_table(self) -> list:
        if self._factors is None:
            self._factors = [mod_factor(a, self) for a in range(self.n)]
        return self._factors

    def factor(self, a: int) -> FactoredElement:
        return self.factor_table[a % self.n]


def mod_factor(a: int, ctx: ModulusContext) -> FactoredElement:
    """Split residue a into unit * prod(p_i^e_i) over the primes of n."""
    a %= ctx.n
    if a == 0:
        return FactoredElement(True, 1, (0,) * len(ctx.primes))
    exps = []
    rest = a
    for p in ctx.primes:
        e = 0
        while rest % p == 0:
            rest //= p
            e += 1
        exps.append(e)
    # rest is now coprime to n, hence a unit
    return FactoredElement(False, rest % ctx.n, tuple(exps))


def pow_cycle(g: int, ctx: ModulusContext) -> PowerCycle:
    """Detect the eventual cycle of g, g^2, g^3, ... mod n.

    Returns the minimal preperiod alpha and cycle length beta such that
    the sequence indexed from g^1 satisfies term[k + beta] == term[k]
    for all k > alpha.
    """
    g %= ctx.n
    seen: dict[int, int] = {}
    x = g
    k = 0
    while x not in seen:
        seen[x] = k
        x = x * g % ctx.n
        k += 1
    alpha = seen[x]
    beta = k - alpha
    return PowerCycle(g, alpha, beta)


def sqrt_3mod4(a: int, p: int) -> int | None:
    """Square root mod a prime p == 3 (mod 4), or None for a non-residue.

    Uses the exponent shortcut r = a^((p+1)/4), valid exactly for such p.
    """
    if not is_prime(p) or p % 4 != 3:
        raise PreconditionError(f"p must be a prime congruent to 3 mod 4, got {p}")
    a %= p
    r = pow(a, (p + 1) // 4, p)
    if r * r % p == a:
        return r
    return None


def is_cubic_residue(a: int, p: int) -> bool:
    """Whether a has a cube root mod the prime p."""
    if not is_prime(p):
        raise PreconditionError(f"p must be prime, got {p}")
    a %= p
    if a == 0:
        return True
    d = math.gcd(3, p - 1)
    return pow(a, (p - 1) // d, p) == 1
