"""Per-(n, c, m) verdicts for the sum-plus-c-product families.

The pipeline tries, in order: a cataloged witness construction, mined
periodic witnesses (smallest divisor alphabets first), and the
avoidance-tree DFS.  Every returned proof object is independently
re-checkable, and verdicts are compared against the known classification
of these families; a verified disagreement is a hard error, not a result.
"""

from __future__ import annotations

import hashlib
import json
import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from .families import FunctionalFamily, sum_plus_c_prod
from .ring import ModulusContext, PreconditionError, factorize, is_prime
from .search import (
    EXHAUSTED,
    SearchOutcome,
    build_xyr_witness,
    longest_avoiding_word,
    mine_witness,
    xyr_solve,
)
from .verify import AVOIDING, Certificate, recheck_certificate, verify_periodic
from .words import PeriodicWord

VANISHING_PROVED = "vanishing_proved"
NONVANISHING_PROVED = "nonvanishing_proved"
UNKNOWN = "unknown"

VANISHING = "vanishing"
NONVANISHING = "nonvanishing"


class ContradictionError(RuntimeError):
    """A verified verdict disagrees with the known classification."""


def _has_pq2(n: int):
    """Smallest prime q with q^2 | n while n has another prime factor."""
    fac = factorize(n)
    if len(fac) < 2:
        return None
    for p, e in fac:
        if e >= 2:
            return p
    return None


def expected_verdict(n: int, c: int, m: int) -> str | None:
    """The known classification, where it says anything.

    F_0 is vanishing for every n (zero-sum Van der Waerden).  F_1 is
    vanishing exactly for n in {2,3,4,8}, 1-vanishing only for n=6, and
    otherwise non-vanishing.  F_{-1} is vanishing for prime powers and
    non-vanishing when p*q^2 | n; the remaining square-free cases are open
    (except n=6, m>1, which is non-vanishing).  Every other c is
    non-vanishing for every n > 1.
    """
    c %= n
    if c == 0:
        return VANISHING
    if c == 1:
        if n in (2, 3, 4, 8):
            return VANISHING
        if n == 6:
            return VANISHING if m == 1 else NONVANISHING
        return NONVANISHING
    if c == n - 1:
        if len(factorize(n)) == 1:
            return VANISHING
        if _has_pq2(n) is not None:
            return NONVANISHING
        if n == 6 and m > 1:
            return NONVANISHING
        return None
    return NONVANISHING


def catalog_witness(n: int, c: int, m: int) -> PeriodicWord | None:
    """First applicable cataloged witness construction, or None.

    Order: the alternating (-1, 1) period for |c| > 1; the (x, y..y)
    construction (with explicit periods for n = 7, 11) for primes
    n = 3 mod 4, c = 1; (3, -3) for n = 8u, u > 1; (7, 4, 4) when 9 | n;
    (q, -q) when p*q^2 | n and c = +-1; (1, 3, 5, 3) for n = 6, m > 1.
    """
    c %= n
    if c not in (0, 1, n - 1):
        return PeriodicWord((n - 1, 1), n)
    if c == 1:
        if n > 3 and n % 4 == 3 and is_prime(n):
            if n == 7:
                return PeriodicWord((2, 3, 3, 3, 3), n)
            if n == 11:
                return PeriodicWord((5, 3, 3), n)
            return build_xyr_witness(xyr_solve(n))
        if n % 8 == 0 and n // 8 > 1:
            return PeriodicWord((3, n - 3), n)
        if n % 9 == 0:
            return PeriodicWord((7, 4, 4), n)
    if c in (1, n - 1) and c != 0:
        q = _has_pq2(n)
        if q is not None:
            return PeriodicWord((q, n - q), n)
        if n == 6 and m >= 2:
            return PeriodicWord((1, 3, 5, 3), n)
    return None


@dataclass(frozen=True)
class Classification:
    n: int
    c: int
    m: int
    verdict: str  # VANISHING_PROVED | NONVANISHING_PROVED | UNKNOWN
    provenance: str | None  # "catalog" | "miner" | "search"
    threshold: int | None = None
    witness: tuple[int, ...] | None = None
    certificate: Certificate | None = None
    outcome: SearchOutcome | None = None
    nodes_expanded: int = 0
    elapsed_ms: int = 0

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "c": self.c,
            "m": self.m,
            "verdict": self.verdict,
            "provenance": self.provenance,
            "threshold": self.threshold,
            "witness": list(self.witness) if self.witness is not None else None,
            "certificate": self.certificate.to_dict() if self.certificate else None,
            "outcome": (
                {
                    "status": self.outcome.status,
                    "threshold": self.outcome.threshold,
                    "longest_word": list(self.outcome.longest_word),
                    "nodes_expanded": self.outcome.nodes_expanded,
                    "cap": self.outcome.cap,
                    "budget_exhausted": self.outcome.budget_exhausted,
                }
                if self.outcome
                else None
            ),
            "nodes_expanded": self.nodes_expanded,
            "elapsed_ms": self.elapsed_ms,
        }

    @classmethod
    def from_dict(cls, d: dict) -> "Classification":
        cert = Certificate.from_dict(d["certificate"]) if d.get("certificate") else None
        out = None
        if d.get("outcome"):
            o = d["outcome"]
            out = SearchOutcome(
                o["status"],
                o["threshold"],
                tuple(o["longest_word"]),
                o["nodes_expanded"],
                o["cap"],
                o["budget_exhausted"],
            )
        return cls(
            n=d["n"],
            c=d["c"],
            m=d["m"],
            verdict=d["verdict"],
            provenance=d.get("provenance"),
            threshold=d.get("threshold"),
            witness=tuple(d["witness"]) if d.get("witness") is not None else None,
            certificate=cert,
            outcome=out,
            nodes_expanded=d.get("nodes_expanded", 0),
            elapsed_ms=d.get("elapsed_ms", 0),
        )


def family_hash(fam: FunctionalFamily) -> str:
    blob = json.dumps(fam.to_descriptor(), sort_keys=True).encode()
    return hashlib.sha1(blob).hexdigest()[:12]


def _cache_path(cache_dir: str, n: int, fam: FunctionalFamily, m: int) -> str:
    return os.path.join(cache_dir, f"cls_{n}_{family_hash(fam)}_{m}.json")


def _load_cached(path: str) -> Classification | None:
    if not os.path.exists(path):
        return None
    with open(path) as fh:
        cls = Classification.from_dict(json.load(fh))
    if cls.verdict == NONVANISHING_PROVED:
        if cls.certificate is None or not recheck_certificate(cls.certificate):
            return None  # stale or corrupt: recompute
    return cls


def _save_cached(path: str, cls: Classification) -> None:
    existing = None
    if os.path.exists(path):
        with open(path) as fh:
            existing = json.load(fh)
    if existing is not None:
        proved = {VANISHING_PROVED, NONVANISHING_PROVED}
        if (
            existing["verdict"] in proved
            and cls.verdict in proved
            and existing["verdict"] != cls.verdict
        ):
            raise ContradictionError(
                f"cache at {path} holds {existing['verdict']} but new result is {cls.verdict}"
            )
    tmp = path + ".tmp"
    with open(tmp, "w") as fh:
        json.dump(cls.to_dict(), fh, indent=1, sort_keys=True)
        fh.write("\n")
    os.replace(tmp, path)


def _divisors(n: int) -> list[int]:
    return [d for d in range(2, n + 1) if n % d == 0]


def classify(
    n: int,
    c: int,
    m: int,
    budget_ms: int = 60_000,
    cap: int = 24,
    p_max: int = 4,
    max_nodes: int = 300_000,
    cache_dir: str | None = None,
) -> Classification:
    """Catalog, then miner, then DFS; Unknown absorbs budget exhaustion."""
    if n < 2 or m < 1:
        raise PreconditionError(f"need n >= 2 and m >= 1, got n={n}, m={m}")
    c %= n
    ctx = ModulusContext(n)
    fam = sum_plus_c_prod(ctx, c)
    path = _cache_path(cache_dir, n, fam, m) if cache_dir else None
    if path:
        cached = _load_cached(path)
        if cached is not None:
            return cached

    t0 = time.monotonic()

    def finish(cls: Classification) -> Classification:
        if path:
            _save_cached(path, cls)
        return cls

    def elapsed_ms() -> int:
        return int((time.monotonic() - t0) * 1000)

    # 1. cataloged construction for (n, c) itself
    w = catalog_witness(n, c, m)
    if w is not None:
        cert = verify_periodic(w, fam, m)
        if cert.verdict == AVOIDING:
            return finish(
                Classification(
                    n, c, m, NONVANISHING_PROVED, "catalog",
                    witness=cert.period, certificate=cert, elapsed_ms=elapsed_ms(),
                )
            )

    # 2. mining: cataloged constructions for divisor moduli lift to Z_n
    # (a window vanishing mod n vanishes mod every divisor), then necklace
    # enumeration over growing divisor alphabets
    miner_deadline = t0 + 0.3 * budget_ms / 1000.0
    divisors = _divisors(n)
    for d in reversed(divisors[:-1]):
        wd = catalog_witness(d, c % d, m)
        if wd is None:
            continue
        lifted = PeriodicWord(wd.period, n)
        cert = verify_periodic(lifted, fam, m)
        if cert.verdict == AVOIDING:
            return finish(
                Classification(
                    n, c, m, NONVANISHING_PROVED, "miner",
                    witness=cert.period, certificate=cert, elapsed_ms=elapsed_ms(),
                )
            )
    for d in divisors:
        res = mine_witness(
            ctx, fam, m, p_max,
            deadline=miner_deadline,
            alphabet=range(d),
            limit=1,
        )
        if res.witnesses:
            pw, cert = res.witnesses[0]
            return finish(
                Classification(
                    n, c, m, NONVANISHING_PROVED, "miner",
                    witness=cert.period, certificate=cert, elapsed_ms=elapsed_ms(),
                )
            )
        if time.monotonic() > miner_deadline:
            break

    # 3. avoidance-tree DFS
    search_deadline = t0 + budget_ms / 1000.0
    outcome = longest_avoiding_word(
        ctx, fam, m, cap, max_nodes=max_nodes, deadline=search_deadline
    )
    if outcome.status == EXHAUSTED:
        return finish(
            Classification(
                n, c, m, VANISHING_PROVED, "search",
                threshold=outcome.threshold, outcome=outcome,
                nodes_expanded=outcome.nodes_expanded, elapsed_ms=elapsed_ms(),
            )
        )
    return finish(
        Classification(
            n, c, m, UNKNOWN, None, outcome=outcome,
            nodes_expanded=outcome.nodes_expanded, elapsed_ms=elapsed_ms(),
        )
    )


@dataclass(frozen=True)
class CellResult:
    classification: Classification
    expected: str | None
    contradiction: bool


@dataclass(frozen=True)
class TableReport:
    cells: tuple[CellResult, ...]
    contradictions: tuple[CellResult, ...]
    reproducer_paths: tuple[str, ...] = ()


def _is_contradiction(cls: Classification, expected: str | None) -> bool:
    if expected == VANISHING and cls.verdict == NONVANISHING_PROVED:
        return True
    if expected == NONVANISHING and cls.verdict == VANISHING_PROVED:
        return True
    return False


def _cell_args(n_max, c_kinds, m_set):
    for n in range(2, n_max + 1):
        cs = []
        for kind in c_kinds:
            c = {"0": 0, "1": 1, "-1": n - 1}[kind] % n
            if c not in cs:
                cs.append(c)
        for c in cs:
            for m in m_set:
                yield n, c, m


def _classify_cell(args) -> dict:
    n, c, m, budget_ms, cap, p_max, max_nodes = args
    return classify(n, c, m, budget_ms=budget_ms, cap=cap, p_max=p_max, max_nodes=max_nodes).to_dict()


def reproduce_table(
    n_max: int,
    c_kinds=("0", "1", "-1"),
    m_set=(1, 2),
    budget_ms: int = 60_000,
    cap: int = 24,
    p_max: int = 4,
    max_nodes: int = 300_000,
    cache_dir: str | None = None,
    jobs: int = 1,
) -> TableReport:
    """Classify the whole grid and flag verdicts contradicting the known
    classification; Unknown never contradicts."""
    argses = [
        (n, c, m, budget_ms, cap, p_max, max_nodes)
        for n, c, m in _cell_args(n_max, c_kinds, m_set)
    ]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            dicts = list(pool.map(_classify_cell, argses))
        results = [Classification.from_dict(d) for d in dicts]
    else:
        results = []
        for a in argses:
            n, c, m = a[0], a[1], a[2]
            results.append(
                classify(n, c, m, budget_ms=budget_ms, cap=cap, p_max=p_max,
                         max_nodes=max_nodes, cache_dir=cache_dir)
            )
    cells = []
    contradictions = []
    dumps = []
    for cls in results:
        exp = expected_verdict(cls.n, cls.c, cls.m)
        bad = _is_contradiction(cls, exp)
        cell = CellResult(cls, exp, bad)
        cells.append(cell)
        if bad:
            contradictions.append(cell)
            if cache_dir:
                os.makedirs(cache_dir, exist_ok=True)
                dump = os.path.join(
                    cache_dir, f"contradiction_{cls.n}_{cls.c}_{cls.m}.json"
                )
                with open(dump, "w") as fh:
                    json.dump(
                        {"expected": exp, "classification": cls.to_dict()},
                        fh, indent=1, sort_keys=True,
                    )
                dumps.append(dump)
        elif jobs > 1 and cache_dir:
            # cell workers do not touch the cache; single-writer persistence
            fam = sum_plus_c_prod(ModulusContext(cls.n), cls.c)
            _save_cached(_cache_path(cache_dir, cls.n, fam, cls.m), cls)
    return TableReport(tuple(cells), tuple(contradictions), tuple(dumps))


def render_table(report: TableReport) -> str:
    lines = []
    header = f"{'n':>3} {'c':>3} {'m':>2}  {'verdict':22} {'provenance':10} {'detail'}"
    lines.append(header)
    lines.append("-" * len(header))
    for cell in report.cells:
        cls = cell.classification
        if cls.verdict == NONVANISHING_PROVED:
            detail = "witness " + ",".join(map(str, cls.witness))
        elif cls.verdict == VANISHING_PROVED:
            detail = f"threshold {cls.threshold}"
        else:
            detail = "no verdict within budget"
        if cell.contradiction:
            detail += "  ** CONTRADICTS KNOWN CLASSIFICATION **"
        lines.append(
            f"{cls.n:>3} {cls.c:>3} {cls.m:>2}  {cls.verdict:22} {str(cls.provenance):10} {detail}"
        )
    lines.append(f"{len(report.contradictions)} contradiction(s)")
    return "\n".join(lines)
