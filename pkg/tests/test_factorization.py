"""Factorization, totient and divisor-table checks against slow references."""

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from zdring import (
    DomainError,
    divisor_table,
    divisors,
    euler_phi,
    factorize,
    is_prime,
    vector_totients,
)
from zdring.factorization import N_MAX


def _phi_sieve(limit: int) -> np.ndarray:
    """Independent totient table: sieve, no factorization code shared."""
    phi = np.arange(limit + 1, dtype=np.int64)
    for p in range(2, limit + 1):
        if phi[p] == p:  # untouched so far means p is prime
            phi[p::p] -= phi[p::p] // p
    return phi


def test_factorize_420():
    assert factorize(420).factors == ((2, 2), (3, 1), (5, 1), (7, 1))


def test_factorize_prime():
    assert factorize(97).factors == ((97, 1),)


def test_factorize_196000():
    assert factorize(196000).factors == ((2, 5), (5, 3), (7, 2))


def test_factorize_str_form():
    assert str(factorize(420)) == "2^2 * 3 * 5 * 7"
    assert str(factorize(97)) == "97"


def test_factorize_accessors():
    f = factorize(360)
    assert f.primes == (2, 3, 5)
    assert f.exponents == (3, 2, 1)
    assert f.smallest_prime == 2


def test_factorize_rejects_bad_input():
    with pytest.raises(DomainError, match="no zero-divisor graph"):
        factorize(1)
    with pytest.raises(DomainError):
        factorize(0)
    with pytest.raises(DomainError):
        factorize(-6)
    with pytest.raises(DomainError):
        factorize(N_MAX)
    with pytest.raises(DomainError):
        factorize("12")


def test_round_trip_exhaustive_small():
    for n in range(2, 100001):
        f = factorize(n)
        prod = 1
        for p, a in f.factors:
            prod *= p**a
        assert prod == n
        assert list(f.primes) == sorted(set(f.primes))


@settings(max_examples=200, deadline=None)
@given(st.integers(min_value=2, max_value=N_MAX - 1))
def test_round_trip_full_domain(n):
    f = factorize(n)
    prod = 1
    for p, a in f.factors:
        assert a >= 1
        assert is_prime(p)
        prod *= p**a
    assert prod == n
    assert f.primes == tuple(sorted(f.primes))


def test_is_prime_known_values():
    assert is_prime(2) and is_prime(3) and is_prime(97)
    assert is_prime(2**61 - 1)  # Mersenne prime
    assert not is_prime(0) and not is_prime(1)
    assert not is_prime(341)  # Fermat pseudoprime base 2
    assert not is_prime(561)  # Carmichael number
    assert not is_prime(3215031751)  # strong pseudoprime to bases 2,3,5,7
    sieve = _phi_sieve(2000)
    for n in range(2, 2001):
        assert is_prime(n) == (sieve[n] == n - 1)


def test_euler_phi_pins():
    assert euler_phi(1) == 1
    assert euler_phi(6) == 2
    assert euler_phi(12) == 4
    assert euler_phi(factorize(12)) == 4


def test_euler_phi_rejects_nonpositive():
    with pytest.raises(DomainError):
        euler_phi(0)


def test_euler_phi_matches_sieve():
    sieve = _phi_sieve(10000)
    for n in range(1, 10001):
        assert euler_phi(n) == int(sieve[n])


def test_totient_sum_over_divisors():
    # sum over d | n of phi(n/d) = n
    for n in range(2, 10001):
        f = factorize(n)
        divs, vecs = divisor_table(f)
        total = int(vector_totients(f.primes, vecs).sum())
        assert total == n


def test_divisors_pins():
    assert divisors(factorize(12)) == [1, 2, 3, 4, 6, 12]
    assert divisors(factorize(8)) == [1, 2, 4, 8]
    assert divisors(factorize(31)) == [1, 31]


@settings(max_examples=200, deadline=None)
@given(st.integers(min_value=2, max_value=10**6))
def test_divisor_count_formula(n):
    f = factorize(n)
    expect = 1
    for _, a in f.factors:
        expect *= a + 1
    assert len(divisors(f)) == expect


@settings(max_examples=100, deadline=None)
@given(st.integers(min_value=2, max_value=10**6))
def test_divisor_table_alignment(n):
    f = factorize(n)
    divs, vecs = divisor_table(f)
    primes = np.array(f.primes, dtype=np.int64)
    rebuilt = (primes[None, :] ** vecs).prod(axis=1)
    assert (rebuilt == divs).all()
    assert (np.diff(divs) > 0).all()
    assert divs[0] == 1 and divs[-1] == n


def test_vector_totients_rows():
    f = factorize(360)
    divs, vecs = divisor_table(f)
    tot = vector_totients(f.primes, vecs)
    for d, t in zip(divs, tot):
        assert euler_phi(int(d)) == int(t)
