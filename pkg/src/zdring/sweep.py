"""Range verification: formula vs exact oracle vs (optionally) brute.

One SweepRow per n records the closed-form clique number, the class-graph
search result, the witness check, and both max-degree values. The sweep
parallelizes over chunks of n with a process pool; ZDRING_WORKERS or the
--workers flag picks the width (flag wins), a width of 1 runs inline.
Results are always merged in ascending n, so output is deterministic
regardless of worker count.
"""

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from .brute import omega_brute
from .class_graph import delta_exact, omega_exact
from .errors import DomainError
from .factorization import factorize
from .formulas import clique_number, max_degree_paper
from .graph import build_graph
from .witness import build_witness, verify_clique

_CHUNK = 512

WORKERS_ENV = "ZDRING_WORKERS"


@dataclass(frozen=True)
class SweepRow:
    n: int
    omega_formula: int
    omega_exact: int
    omega_brute: int | None
    witness_ok: bool
    delta_paper: int
    delta_exact: int
    delta_match: bool


@dataclass(frozen=True)
class SweepSummary:
    checked: int
    omega_mismatches: list[int]
    witness_failures: list[int]
    delta_mismatches: int

    @property
    def clean(self) -> bool:
        return not self.omega_mismatches and not self.witness_failures


def analyze_row(n: int, brute_max: int = 0) -> SweepRow:
    """Cross-check one n; brute search included when n <= brute_max."""
    f = factorize(n)
    analysis = clique_number(f)
    w = build_witness(f)
    ok = bool(verify_clique(n, w.elements)) and w.size == analysis.omega
    exact = omega_exact(f, expand_limit=None)
    dp = max_degree_paper(f)
    de, _ = delta_exact(f)
    ob = None
    if brute_max and n <= brute_max:
        ob = omega_brute(build_graph(n))
    return SweepRow(
        n=n,
        omega_formula=analysis.omega,
        omega_exact=exact.omega,
        omega_brute=ob,
        witness_ok=ok,
        delta_paper=dp,
        delta_exact=de,
        delta_match=dp == de,
    )


def resolve_workers(explicit: int | None = None) -> int:
    """--workers flag beats ZDRING_WORKERS beats cpu count."""
    if explicit is not None:
        if explicit < 1:
            raise DomainError(f"workers must be >= 1, got {explicit}")
        return explicit
    env = os.environ.get(WORKERS_ENV, "").strip()
    if env:
        try:
            value = int(env)
        except ValueError:
            raise DomainError(f"{WORKERS_ENV} must be an integer, got {env!r}")
        if value < 1:
            raise DomainError(f"{WORKERS_ENV} must be >= 1, got {value}")
        return value
    return os.cpu_count() or 1


def _chunk_rows(args: tuple[int, int, int]) -> list[SweepRow]:
    lo, hi, brute_max = args
    return [analyze_row(n, brute_max) for n in range(lo, hi)]


def verify_range(
    start: int,
    stop: int,
    brute_max: int = 0,
    workers: int | None = None,
) -> list[SweepRow]:
    """Rows for every n in [start, stop], ascending. stop is inclusive."""
    if start < 2:
        raise DomainError("sweep must start at n >= 2")
    if stop < start:
        raise DomainError(f"empty sweep range [{start}, {stop}]")
    width = resolve_workers(workers)
    chunks = [
        (lo, min(lo + _CHUNK, stop + 1), brute_max)
        for lo in range(start, stop + 1, _CHUNK)
    ]
    if width == 1 or len(chunks) == 1:
        rows: list[SweepRow] = []
        for chunk in chunks:
            rows.extend(_chunk_rows(chunk))
        return rows
    with ProcessPoolExecutor(max_workers=width) as pool:
        out: list[SweepRow] = []
        for part in pool.map(_chunk_rows, chunks):
            out.extend(part)
        return out


def summarize(rows: list[SweepRow]) -> SweepSummary:
    omega_bad = [
        r.n
        for r in rows
        if r.omega_exact != r.omega_formula
        or (r.omega_brute is not None and r.omega_brute != r.omega_formula)
    ]
    witness_bad = [r.n for r in rows if not r.witness_ok]
    return SweepSummary(
        checked=len(rows),
        omega_mismatches=omega_bad,
        witness_failures=witness_bad,
        delta_mismatches=sum(1 for r in rows if not r.delta_match),
    )
