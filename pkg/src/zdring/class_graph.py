"""Exact oracle via divisor-class compression.

Vertices of G(Z_n) collapse by gcd: the class of x is d = gcd(x, n), one
class per divisor d < n, holding phi(n/d) elements. Because
min(v_p(x), v_p(n)) = v_p(d) for every prime p, a pairwise product test
only ever sees the class labels:

    n | x*y  <=>  n | d*e      (x in class d, y in class e, x != y)

so the graph compresses exactly (this is re-verified pair-by-pair in the
test suite, not assumed). A class is self-adjacent when n | d^2; its
members are then mutually adjacent and a clique can take all phi(n/d) of
them, otherwise at most one. Maximum cliques of G(Z_n) are therefore
maximum-weight cliques of the class graph with weights

    w(d) = phi(n/d) if n | d^2 else 1,

found here by branch and bound over classes sorted by descending weight
(bound: accumulated + remaining weight, seeded by a greedy pass). The
remaining-weight term exploits one structural fact: call d deficient at
p when 2*v_p(d) < v_p(n). Two classes deficient at the same prime can
never be adjacent, so a clique holds at most one deficient class per
prime and the weight-1 classes left in a candidate set contribute at
most the number of distinct primes they are deficient at. Without that
cap the search degenerates on highly composite n, where thousands of
weight-1 classes form a near-flat plateau. The exact maximum degree
also reads off the classes: vertex x of class d has d - 1 - [n | d^2]
neighbours, so delta is an honest scan over divisors, ties resolved
toward the larger divisor.
"""

from dataclasses import dataclass

import numpy as np

from . import kernels
from .errors import ResourceLimitError
from .factorization import Factorization, divisor_table, factorize, vector_totients

DEFAULT_CLASS_LIMIT = 20_000
DEFAULT_ELEMENT_LIMIT = 1_000_000


@dataclass(frozen=True)
class DivisorClassGraph:
    """Compressed form of G(Z_n): one node per divisor d < n."""

    n: int
    divisors: np.ndarray  # int64[m], ascending, excludes n itself
    vectors: np.ndarray  # int64[m, s] exponent vectors
    alphas: np.ndarray  # int64[s] exponents of n
    self_adjacent: np.ndarray  # bool[m], n | d^2
    sizes: np.ndarray  # int64[m], phi(n/d) = #elements in the class
    weights: np.ndarray  # int64[m], phi(n/d) or 1
    adjacency: np.ndarray  # bool[m, m], n | d*e (diagonal == self_adjacent)

    @property
    def class_count(self) -> int:
        return int(self.divisors.shape[0])

    def element_class_indices(self) -> np.ndarray:
        """Class index of every vertex 1..n-1 (int64[n-1])."""
        gcds = np.gcd(np.arange(1, self.n, dtype=np.int64), self.n)
        return np.searchsorted(self.divisors, gcds)


@dataclass(frozen=True)
class OmegaExact:
    """Result of the exact clique search on the class graph."""

    omega: int
    classes: tuple[int, ...]  # divisors of one optimal solution, ascending
    elements: tuple[int, ...] | None  # expansion to vertices, if materialized


def _as_factorization(f) -> Factorization:
    return f if isinstance(f, Factorization) else factorize(f)


def build_class_graph(f, max_classes: int = DEFAULT_CLASS_LIMIT) -> DivisorClassGraph:
    """Build the weighted divisor-class graph of G(Z_n)."""
    f = _as_factorization(f)
    divs, vecs = divisor_table(f)
    divs, vecs = divs[:-1], vecs[:-1]  # drop d = n: that class is {0}, not a vertex
    m = divs.shape[0]
    if m > max_classes:
        raise ResourceLimitError(
            f"n={f.n} has {m} divisor classes; max_classes={max_classes}"
        )
    primes = np.array(f.primes, dtype=np.int64)
    alphas = np.array(f.exponents, dtype=np.int64)
    self_adjacent = (2 * vecs >= alphas[None, :]).all(axis=1)
    sizes = vector_totients(primes, alphas[None, :] - vecs)  # phi(n/d)
    weights = np.where(self_adjacent, sizes, np.int64(1))
    adjacency = kernels.class_adjacency(vecs, alphas).astype(bool)
    # structural sanity: classes partition the vertices, diagonal is self
    assert int(sizes.sum()) == f.n - 1
    assert (np.diagonal(adjacency) == self_adjacent).all()
    return DivisorClassGraph(
        n=f.n,
        divisors=divs,
        vectors=vecs,
        alphas=alphas,
        self_adjacent=self_adjacent,
        sizes=sizes,
        weights=weights,
        adjacency=adjacency,
    )


def class_elements(g: DivisorClassGraph, class_index: int) -> np.ndarray:
    """All vertices whose gcd with n is g.divisors[class_index]."""
    d = int(g.divisors[class_index])
    q = g.n // d
    a = np.arange(1, q, dtype=np.int64)
    return d * a[np.gcd(a, q) == 1]


def omega_exact(
    f,
    max_classes: int = DEFAULT_CLASS_LIMIT,
    expand_limit: int | None = DEFAULT_ELEMENT_LIMIT,
) -> OmegaExact:
    """Exact clique number by search, independent of the closed formula.

    Returns one optimal class multiset and, when its size is within
    expand_limit (None/0 skips expansion entirely), an explicit vertex
    set realizing it: every element of a self-adjacent class, the
    smallest element (the divisor itself) of weight-1 classes.
    """
    f = _as_factorization(f)
    g = build_class_graph(f, max_classes=max_classes)
    order = np.lexsort((g.divisors, -g.weights))  # weight desc, divisor asc
    adj = g.adjacency[np.ix_(order, order)]
    np.fill_diagonal(adj, False)  # searches never reuse a class node
    # bit j of the conflict mask: class is deficient at prime j, meaning
    # 2*v_j(d) < v_j(n); two such classes can never be adjacent at j
    bits = np.uint64(1) << np.arange(g.alphas.shape[0], dtype=np.uint64)
    conflict = ((2 * g.vectors < g.alphas[None, :]) * bits).sum(
        axis=1, dtype=np.uint64
    )
    total, picked = kernels.max_weight_clique(
        adj, g.weights[order], conflict[order]
    )
    chosen = sorted(int(g.divisors[order[i]]) for i in picked)
    assert total == sum(
        int(g.weights[np.searchsorted(g.divisors, d)]) for d in chosen
    )

    elements: tuple[int, ...] | None = None
    if expand_limit and total <= expand_limit:
        out: list[int] = []
        for d in chosen:
            idx = int(np.searchsorted(g.divisors, d))
            if g.self_adjacent[idx]:
                out.extend(int(x) for x in class_elements(g, idx))
            else:
                out.append(d)
        out.sort()
        assert len(out) == total, f"class expansion miscounted for n={f.n}"
        elements = tuple(out)
    return OmegaExact(omega=int(total), classes=tuple(chosen), elements=elements)


def delta_exact(f) -> tuple[int, int]:
    """Exact maximum degree and the divisor class realizing it.

    deg(class d) = d - 1 - [n | d^2]; ties go to the larger divisor.
    Returns (delta, divisor).
    """
    f = _as_factorization(f)
    divs, vecs = divisor_table(f)
    divs, vecs = divs[:-1], vecs[:-1]
    alphas = np.array(f.exponents, dtype=np.int64)
    self_adjacent = (2 * vecs >= alphas[None, :]).all(axis=1)
    degs = divs - 1 - self_adjacent.astype(np.int64)
    top = int(degs.max())
    # divisors ascend, so the last maximum is the largest tied divisor
    best = int(np.nonzero(degs == top)[0][-1])
    return top, int(divs[best])


def compression_mismatch(f) -> tuple[int, int] | None:
    """First vertex pair where class adjacency disagrees with n | x*y.

    None means the compression is sound for this n (every pair checked).
    """
    f = _as_factorization(f)
    g = build_class_graph(f)
    cls_idx = g.element_class_indices()
    return kernels.pair_soundness_mismatch(
        f.n, cls_idx, g.adjacency.astype(np.uint8)
    )