"""Closed-form clique number, degree prediction, chromatic identities."""

import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from zdring import (
    CliqueCase,
    chromatic_identities,
    classify,
    clique_number,
    delta_exact,
    factorize,
    has_zero_divisor_pair,
    kernels,
    max_degree_paper,
    omega_exact,
)

PAPER_OMEGAS = {60: 3, 420: 4, 108: 6, 196000: 141, 231525: 106}


def test_classify():
    assert classify(factorize(420)) is CliqueCase.MIXED
    assert classify(factorize(30)) is CliqueCase.SQUARE_FREE
    assert classify(factorize(36)) is CliqueCase.ALL_EVEN


def test_clique_number_worked_examples():
    for n, omega in PAPER_OMEGAS.items():
        assert clique_number(factorize(n)).omega == omega


def test_clique_number_prime():
    a = clique_number(factorize(31))
    assert a.omega == 1
    assert a.k == 1 and a.t == 1


def test_clique_number_36():
    a = clique_number(factorize(36))
    assert a.omega == 5
    assert a.case is CliqueCase.ALL_EVEN
    assert a.k == 6 and a.t == 0


def test_decomposition_fields():
    a = clique_number(factorize(420))
    assert a.even_part == ((2, 2),)
    assert a.odd_part == ((3, 1), (5, 1), (7, 1))
    assert a.k == 2 and a.t == 3
    assert a.squarefree_part == 105
    assert a.squarefree_part * a.k**2 == 420


def test_square_free_case_is_prime_count():
    # square-free n: k = 1, so omega = number of prime factors
    for n in (6, 30, 210, 2310, 97, 5 * 7 * 11 * 13):
        f = factorize(n)
        if classify(f) is CliqueCase.SQUARE_FREE:
            assert clique_number(f).omega == len(f.factors)


@settings(max_examples=150, deadline=None)
@given(st.integers(min_value=2, max_value=10**4))
def test_perfect_square_case(m):
    # all exponents even <=> n is a perfect square; then omega = sqrt(n) - 1
    a = clique_number(factorize(m * m))
    assert a.case is CliqueCase.ALL_EVEN
    assert a.omega == m - 1


@settings(max_examples=200, deadline=None)
@given(st.integers(min_value=2, max_value=10**9))
def test_squarefree_part_decomposition(n):
    a = clique_number(factorize(n))
    c = a.squarefree_part
    assert c * a.k**2 == n
    if c > 1:
        assert all(e == 1 for _, e in factorize(c).factors)
    else:
        assert a.t == 0
    assert a.omega == a.k + a.t - 1 >= 1


def test_formula_equals_exact_oracle_to_10k():
    bad = [
        n
        for n in range(2, 10001)
        if clique_number(factorize(n)).omega != omega_exact(n).omega
    ]
    assert bad == []


def test_omega_ge_2_iff_edge_exists():
    # omega >= 2 exactly when some distinct pair multiplies to 0 mod n
    for n in range(2, 2001):
        has_edge = int(kernels.exhaustive_degrees(n).max()) > 0
        omega = clique_number(factorize(n)).omega
        assert has_zero_divisor_pair(n) == has_edge == (omega >= 2), n


@settings(max_examples=30, deadline=None)
@given(st.integers(min_value=2001, max_value=10**4))
def test_omega_ge_2_iff_edge_exists_sampled(n):
    has_edge = int(kernels.exhaustive_degrees(n).max()) > 0
    assert has_zero_divisor_pair(n) == has_edge
    assert (clique_number(factorize(n)).omega >= 2) == has_edge


def test_max_degree_paper_pins():
    assert max_degree_paper(factorize(30)) == 14
    assert max_degree_paper(factorize(12)) == 5  # exact value is 4; kept as stated
    assert max_degree_paper(factorize(31)) == 0


def test_max_degree_prediction_matches_exact_iff_no_square():
    for n in range(2, 10001):
        f = factorize(n)
        predicted = max_degree_paper(f)
        exact, _ = delta_exact(f)
        p1 = f.smallest_prime
        if n % (p1 * p1) != 0:
            assert predicted == exact, n
        else:
            assert predicted == exact + 1, n


def test_chromatic_identities():
    assert chromatic_identities(clique_number(factorize(30)), 14) == (3, 14)
    assert chromatic_identities(clique_number(factorize(31)), 0) == (1, 0)
    assert chromatic_identities(clique_number(factorize(12)), 4) == (2, 4)


def test_omega_monotone_floor():
    for n in (2, 3, 4, 5, 9, 25):
        assert clique_number(factorize(n)).omega >= 1
