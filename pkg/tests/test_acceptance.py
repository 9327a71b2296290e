"""Acceptance gate: eight go/no-go criteria, each timed and reported.

Every test prints exactly one line, ACCEPTANCE <k>: PASS|FAIL (<secs>),
straight to the terminal so the verdicts survive output capture. Runtime
budgets are asserted where the criterion states one; the session-level
kernel warmup fixture keeps JIT compilation out of all of these clocks.
"""

import time

import pytest

from zdring import (
    build_graph,
    build_witness,
    chi1_brute,
    chi_brute,
    clique_number,
    compression_mismatch,
    delta_brute,
    delta_exact,
    factorize,
    kernels,
    max_degree_paper,
    omega_brute,
    omega_exact,
    verify_clique,
    verify_range,
)
from zdring.sweep import analyze_row

PAPER_OMEGAS = {60: 3, 420: 4, 108: 6, 196000: 141, 231525: 106}


def _verdict(capsys, idx: int, ok: bool, secs: float) -> None:
    with capsys.disabled():
        print(f"ACCEPTANCE {idx}: {'PASS' if ok else 'FAIL'} ({secs:.1f}s)", flush=True)


def test_criterion_1_paper_examples(capsys):
    t0 = time.perf_counter()
    got = {n: clique_number(factorize(n)).omega for n in PAPER_OMEGAS}
    secs = time.perf_counter() - t0
    ok = got == PAPER_OMEGAS and secs < 1.0
    _verdict(capsys, 1, ok, secs)
    assert got == PAPER_OMEGAS
    assert secs < 1.0


def test_criterion_2_triple_agreement(capsys):
    t0 = time.perf_counter()
    bad = []
    for n in range(2, 501):
        f = factorize(n)
        formula = clique_number(f).omega
        exact = omega_exact(f, expand_limit=None).omega
        brute = omega_brute(build_graph(n))
        if not (formula == exact == brute):
            bad.append((n, formula, exact, brute))
    secs = time.perf_counter() - t0
    ok = not bad and secs < 180.0
    _verdict(capsys, 2, ok, secs)
    assert bad == [], f"triple disagreement at {bad[:10]}"
    assert secs < 180.0


def test_criterion_3_sweep_to_50000(capsys):
    t0 = time.perf_counter()
    rows = verify_range(2, 50000)  # default parallelism
    offenders = [r.n for r in rows if r.omega_formula != r.omega_exact]
    bad_witness = [r.n for r in rows if not r.witness_ok]
    secs = time.perf_counter() - t0
    ok = not offenders and not bad_witness and len(rows) == 49999 and secs < 600.0
    _verdict(capsys, 3, ok, secs)
    assert offenders == [], f"omega mismatch at n={offenders[:10]}"
    assert bad_witness == [], f"invalid witness at n={bad_witness[:10]}"
    assert len(rows) == 49999
    assert secs < 600.0


def test_criterion_4_degree_correctness(capsys):
    t0 = time.perf_counter()
    bad = []
    for n in range(2, 2001):
        f = factorize(n)
        exact = delta_exact(f)[0]
        brute = int(kernels.exhaustive_degrees(n).max())
        predicted = max_degree_paper(f)
        p1 = f.smallest_prime
        if exact != brute:
            bad.append((n, "exact-vs-brute", exact, brute))
        if (n % (p1 * p1) != 0) != (predicted == exact):
            bad.append((n, "prediction", predicted, exact))
    row12 = analyze_row(12)
    pins = (
        row12.delta_exact == 4
        and row12.delta_paper == 5
        and row12.delta_match is False
    )
    secs = time.perf_counter() - t0
    ok = not bad and pins
    _verdict(capsys, 4, ok, secs)
    assert bad == [], bad[:10]
    assert pins


def test_criterion_5_beck_identity(capsys):
    t0 = time.perf_counter()
    bad = []
    for n in range(2, 101):
        g = build_graph(n)
        if chi_brute(g) != omega_brute(g):
            bad.append(n)
    secs = time.perf_counter() - t0
    ok = not bad and secs < 120.0
    _verdict(capsys, 5, ok, secs)
    assert bad == [], f"chi != omega at n={bad}"
    assert secs < 120.0


def test_criterion_6_edge_chromatic_identity(capsys):
    t0 = time.perf_counter()
    bad = []
    for n in range(2, 41):
        g = build_graph(n)
        chi1 = chi1_brute(g)
        delta = delta_brute(g)
        if not chi1 <= delta + 1:
            bad.append((n, "vizing", chi1, delta))
        if delta > 0 and chi1 != delta:
            bad.append((n, "identity", chi1, delta))
    secs = time.perf_counter() - t0
    ok = not bad and secs < 120.0
    _verdict(capsys, 6, ok, secs)
    assert bad == [], bad
    assert secs < 120.0


def test_criterion_7_witness_erratum_n32(capsys):
    t0 = time.perf_counter()
    w = build_witness(32)
    check = verify_clique(32, w.elements)
    secs = time.perf_counter() - t0
    ok = (
        len(set(w.elements)) == 4
        and set(w.elements) == {4, 8, 16, 24}
        and bool(check)
        and w.size == clique_number(32).omega
    )
    _verdict(capsys, 7, ok, secs)
    assert ok, (w.elements, check.reason)


def test_criterion_8_compression_soundness(capsys):
    t0 = time.perf_counter()
    bad = []
    for n in range(2, 2001):
        mismatch = compression_mismatch(factorize(n))
        if mismatch is not None:
            bad.append((n, mismatch))
    secs = time.perf_counter() - t0
    ok = not bad and secs < 180.0
    _verdict(capsys, 8, ok, secs)
    assert bad == [], f"class adjacency disagrees with elements: {bad[:10]}"
    assert secs < 180.0
