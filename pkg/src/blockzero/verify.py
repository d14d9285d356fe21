"""Finite certificates for periodic words avoiding vanishing windows.

A periodic word's block values depend on the block length l only through
(l mod P, l div P); the sum part is periodic in l and the product part is
eventually periodic via the power cycle of the one-period product G.
Checking every start residue and every l up to a computable bound
therefore settles the infinite claim.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass

from .families import (
    SUM_PLUS_C_PROD,
    TRANSFORMATION_SUMS,
    FunctionalFamily,
    Window,
    eval_family,
    Block,
    family_from_descriptor,
)
from .ring import ModulusContext, PreconditionError, pow_cycle
from .words import PeriodicWord, Word

CERTIFICATE_VERSION = 1

AVOIDING = "avoiding"
REFUTED = "refuted"


class UnsupportedFamilyError(PreconditionError):
    """The family has no periodic decomposition here; use a bounded scan."""


@dataclass(frozen=True)
class Certificate:
    version: int
    n: int
    family: dict
    m: int
    period: tuple[int, ...]
    G: int
    T: tuple[int, ...]
    alpha: int
    beta: int
    pre: int
    per: int
    checked_max_l: int
    verdict: str
    counter_window: tuple[int, int] | None = None

    def to_dict(self) -> dict:
        d = {
            "version": self.version,
            "n": self.n,
            "family": self.family,
            "m": self.m,
            "period": list(self.period),
            "G": self.G,
            "T": list(self.T),
            "alpha": self.alpha,
            "beta": self.beta,
            "pre": self.pre,
            "per": self.per,
            "checked_max_l": self.checked_max_l,
            "verdict": self.verdict,
        }
        if self.counter_window is not None:
            d["counter_window"] = list(self.counter_window)
        return d

    @classmethod
    def from_dict(cls, d: dict) -> "Certificate":
        if d.get("version") != CERTIFICATE_VERSION:
            raise PreconditionError(f"unsupported certificate version {d.get('version')!r}")
        cw = d.get("counter_window")
        return cls(
            version=d["version"],
            n=d["n"],
            family=d["family"],
            m=d["m"],
            period=tuple(d["period"]),
            G=d["G"],
            T=tuple(d["T"]),
            alpha=d["alpha"],
            beta=d["beta"],
            pre=d["pre"],
            per=d["per"],
            checked_max_l=d["checked_max_l"],
            verdict=d["verdict"],
            counter_window=tuple(cw) if cw is not None else None,
        )


def scan_word(word: Word, fam: FunctionalFamily, m: int) -> list[Window]:
    """All vanishing m-windows of a finite word, ordered by (l, s)."""
    if m < 1:
        raise PreconditionError(f"m must be >= 1, got {m}")
    L = len(word)
    zero = (0,) * fam.output_dim
    found = []
    for l in range(2, L // m + 1):
        for s in range(0, L - m * l + 1):
            if all(
                eval_family(fam, Block(word, s + j * l, l)) == zero
                for j in range(m)
            ):
                found.append(Window(s, l, m))
    return found


class _PeriodicEvaluator:
    """Block values of a periodic word via full-period + wrapped-partial parts."""

    def __init__(self, period: tuple[int, ...], fam: FunctionalFamily):
        ctx = fam.ctx
        n = ctx.n
        self.n = n
        self.fam = fam
        self.period = period
        P = len(period)
        self.P = P
        self.G = 1
        for x in period:
            self.G = self.G * x % n
        if fam.kind == SUM_PLUS_C_PROD:
            tables = fam.sum_tables()
        elif fam.kind == TRANSFORMATION_SUMS:
            tables = fam.tables
        else:
            raise UnsupportedFamilyError(
                f"family kind {fam.kind!r} has no certified periodic check; use a bounded scan instead"
            )
        self.T = tuple(sum(t[x] for x in period) % n for t in tables)
        # partial sums over r symbols starting at index t, per table
        self.psum = [
            [[0] * (P + 1) for _ in range(P)] for _ in tables
        ]
        self.pprod = [[1] * (P + 1) for _ in range(P)]
        for t in range(P):
            for r in range(1, P + 1):
                sym = period[(t + r - 1) % P]
                for i, tab in enumerate(tables):
                    self.psum[i][t][r] = (self.psum[i][t][r - 1] + tab[sym]) % n
                self.pprod[t][r] = self.pprod[t][r - 1] * sym % n

    def block_value(self, start: int, length: int) -> tuple[int, ...]:
        n = self.n
        q, r = divmod(length, self.P)
        t = start % self.P
        sums = tuple(
            (q * T_i + ps[t][r]) % n for T_i, ps in zip(self.T, self.psum)
        )
        if self.fam.kind == SUM_PLUS_C_PROD:
            prod = pow(self.G, q, n) * self.pprod[t][r] % n if q else self.pprod[t][r]
            return ((sums[0] + self.fam.c * prod) % n,)
        return sums


def verify_periodic(pw: PeriodicWord, fam: FunctionalFamily, m: int) -> Certificate:
    """Decide whether the infinite repetition of pw avoids all vanishing
    m-windows, returning a finite re-checkable certificate either way."""
    if m < 1:
        raise PreconditionError(f"m must be >= 1, got {m}")
    ctx = fam.ctx
    if pw.n != ctx.n:
        raise PreconditionError("periodic word and family moduli differ")
    period = pw.canonical()
    ev = _PeriodicEvaluator(period, fam)
    P = ev.P
    n = ctx.n
    cyc = pow_cycle(ev.G, ctx)
    pre = P * (cyc.preperiod + 1)
    per = math.lcm(P * n, P * cyc.cycle_len)
    checked_max_l = pre + per
    zero = (0,) * fam.output_dim
    verdict = AVOIDING
    counter = None
    for l in range(2, checked_max_l + 1):
        for s in range(P):
            if all(ev.block_value(s + j * l, l) == zero for j in range(m)):
                verdict = REFUTED
                counter = (s, l)
                break
        if counter is not None:
            break
    return Certificate(
        version=CERTIFICATE_VERSION,
        n=n,
        family=fam.to_descriptor(),
        m=m,
        period=period,
        G=ev.G,
        T=ev.T,
        alpha=cyc.preperiod,
        beta=cyc.cycle_len,
        pre=pre,
        per=per,
        checked_max_l=checked_max_l,
        verdict=verdict,
        counter_window=counter,
    )


def recheck_certificate(cert: Certificate) -> bool:
    """Re-derive the verdict from scratch; True iff it matches the stored one."""
    ctx = ModulusContext(cert.n)
    fam = family_from_descriptor(ctx, cert.family)
    fresh = verify_periodic(PeriodicWord(cert.period, cert.n), fam, cert.m)
    return fresh.verdict == cert.verdict and fresh.counter_window == cert.counter_window


def recheck_counter_window(cert: Certificate) -> bool:
    """Re-evaluate the embedded refuting window directly on the word."""
    if cert.verdict != REFUTED or cert.counter_window is None:
        return False
    s, l = cert.counter_window
    ctx = ModulusContext(cert.n)
    fam = family_from_descriptor(ctx, cert.family)
    word = PeriodicWord(cert.period, cert.n).unroll(s + cert.m * l, ctx)
    zero = (0,) * fam.output_dim
    return all(
        eval_family(fam, Block(word, s + j * l, l)) == zero for j in range(cert.m)
    )


def save_certificate(cert: Certificate, path) -> None:
    with open(path, "w") as fh:
        json.dump(cert.to_dict(), fh, indent=1, sort_keys=True)
        fh.write("\n")


def load_certificate(path, recheck: bool = True) -> Certificate:
    """Load a certificate; by default re-verify before trusting it."""
    with open(path) as fh:
        cert = Certificate.from_dict(json.load(fh))
    if recheck and not recheck_certificate(cert):
        raise PreconditionError(f"certificate at {path} failed re-verification")
    return cert


def reduce_witness(pw: PeriodicWord, d: int) -> PeriodicWord:
    """Reduce a periodic word over Z_n symbol-wise to Z_d for a divisor d.

    If the reduction is certified avoiding mod d, the original avoids mod n:
    a window vanishing mod n would vanish mod d as well.
    """
    if d < 2 or pw.n % d != 0:
        raise PreconditionError(f"{d} is not a divisor >= 2 of {pw.n}")
    return PeriodicWord(tuple(x % d for x in pw.period), d)
