"""Witness construction and clique verification."""

import math
from collections import Counter

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from zdring import (
    ResourceLimitError,
    build_class_graph,
    build_witness,
    class_elements,
    clique_number,
    euler_phi,
    factorize,
    omega_exact,
    verify_clique,
)


def test_witness_30():
    assert build_witness(30).elements == (6, 10, 15)


def test_witness_36():
    assert build_witness(36).elements == (6, 12, 18, 24, 30)


def test_witness_60():
    assert build_witness(60).elements == (6, 10, 30)


def test_witness_32():
    # the k^2 member of the textbook set would collide here; the witness
    # substitutes k and keeps all four elements distinct
    w = build_witness(32)
    assert w.elements == (4, 8, 16, 24)
    assert len(set(w.elements)) == 4
    assert verify_clique(32, w.elements)


def test_witness_420():
    assert set(build_witness(420).elements) == {30, 42, 70, 210}


def test_witness_fields():
    w = build_witness(420)
    assert w.n == 420
    assert w.k == 2
    assert w.squarefree_part == 105
    assert w.n == w.squarefree_part * w.k**2
    assert w.size == clique_number(420).omega


def test_witness_tiny_n():
    assert build_witness(2).elements == (1,)
    assert build_witness(4).elements == (2,)


def test_witness_prime_power_single_is_k():
    # t = 1 reduces the q-part to the single element k
    for n, k in ((32, 4), (243, 9)):
        w = build_witness(n)
        assert k in w.elements
        assert w.k == k


def test_witness_element_limit():
    with pytest.raises(ResourceLimitError, match="element_limit"):
        build_witness(2**42)
    # same n passes with a raised limit
    w = build_witness(2**42, element_limit=2**21)
    assert w.size == 2**21 - 1


def test_verify_clique_accepts():
    assert verify_clique(420, [30, 42, 70, 210])
    assert verify_clique(6, [2, 3])
    assert verify_clique(12, [6])  # single vertex
    assert verify_clique(12, [])


def test_verify_clique_failing_pair():
    check = verify_clique(12, [3, 6])
    assert not check
    assert check.failing_pair == (3, 6)
    assert "3 * 6" in check.reason


def test_verify_clique_reports_first_sorted_pair():
    check = verify_clique(12, [8, 6, 2])
    assert not check
    assert check.failing_pair == (2, 8)


def test_verify_clique_bad_members():
    assert not verify_clique(12, [0, 6])
    assert not verify_clique(12, [12, 6])
    assert not verify_clique(12, [6, 6])
    assert "twice" in verify_clique(12, [6, 6]).reason
    assert "range" in verify_clique(12, [0, 6]).reason


def test_verify_clique_large_n_python_path():
    # above the int64-safe product threshold the check runs on python ints
    n = 2**62
    members = [i * 2**31 for i in (1, 2, 3, 5, 1000, 2**31 - 1)]
    assert verify_clique(n, members)
    bad = verify_clique(n, [2**31, 2**31 + 2])
    assert not bad and bad.failing_pair == (2**31, 2**31 + 2)


def test_witness_validates_exhaustively():
    for n in range(2, 100001):
        w = build_witness(n)
        assert w.size == clique_number(n).omega, n
        assert verify_clique(n, w.elements), n


@settings(max_examples=150, deadline=None)
@given(st.integers(min_value=2, max_value=10**9))
def test_witness_validates_sampled(n):
    w = build_witness(n)
    assert w.size == clique_number(n).omega
    assert verify_clique(n, w.elements)


def test_witness_is_an_optimal_class_solution():
    # the witness fills every self-adjacent class and adds one element per
    # remaining class; its class multiset must therefore weigh omega
    for n in range(2, 1001):
        g = build_class_graph(factorize(n))
        counts = Counter(math.gcd(x, n) for x in build_witness(n).elements)
        total = 0
        for d, mult in counts.items():
            idx = int((g.divisors == d).nonzero()[0][0])
            if g.self_adjacent[idx]:
                assert mult == int(g.sizes[idx]), (n, d)
                total += mult
            else:
                assert mult == 1, (n, d)
                total += 1
        assert total == omega_exact(n).omega, n
