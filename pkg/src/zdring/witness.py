"""Construction and verification of maximum-clique witnesses.

For n = c * k**2 (c the squarefree part, k as in the clique formula) the
set

    {i * (n//k) : 1 <= i <= k-1}  u  {n // (k * q) : q odd-exponent prime}

is a clique of size k + t - 1 in G(Z_n):

  * two multiples i*(n/k), j*(n/k) multiply to i*j*c*n == 0 (mod n);
  * n/(k*q) times i*(n/k) is i*n*(c/q), and c/q is an integer;
  * n/(k*q) times n/(k*q') is n * c/(q*q'), again integral for q != q'.

The two parts never collide: i*(n/k) = n/(k*q) would force i*q = 1. The
q-elements are pairwise distinct, and for t = 1 the single q-element is
just k itself. So the witness always has exactly omega distinct members;
a size assertion guards that invariant at runtime anyway.

verify_clique trusts nothing: it re-checks membership, distinctness and
every pairwise product, in exact integer arithmetic for any n < 2**63.
"""

from dataclasses import dataclass

import numpy as np

from . import kernels
from .errors import ResourceLimitError
from .factorization import Factorization, factorize
from .formulas import clique_number

DEFAULT_ELEMENT_LIMIT = 1_000_000


@dataclass(frozen=True)
class CliqueWitness:
    """A constructed clique of G(Z_n) of the formula's size."""

    n: int
    k: int
    squarefree_part: int
    elements: tuple[int, ...]

    @property
    def size(self) -> int:
        return len(self.elements)


@dataclass(frozen=True)
class CliqueCheck:
    """Outcome of verify_clique; falsy when the candidate is not a clique."""

    ok: bool
    failing_pair: tuple[int, int] | None = None
    reason: str | None = None

    def __bool__(self) -> bool:
        return self.ok


def build_witness(f, element_limit: int = DEFAULT_ELEMENT_LIMIT) -> CliqueWitness:
    """Deterministic maximum-clique witness for G(Z_n).

    element_limit caps how many elements get materialized; the witness
    size is k + t - 1 which grows like sqrt(n), so arbitrary 64-bit n can
    demand billions of elements. Exceeding the cap raises
    ResourceLimitError naming it.
    """
    f = f if isinstance(f, Factorization) else factorize(f)
    analysis = clique_number(f)
    k, t, n = analysis.k, analysis.t, f.n
    if analysis.omega > element_limit:
        raise ResourceLimitError(
            f"witness for n={n} has {analysis.omega} elements; "
            f"element_limit={element_limit}"
        )
    step = n // k
    elements = [i * step for i in range(1, k)]
    for q, _ in analysis.odd_part:
        elements.append(n // (k * q))
    elements.sort()
    witness = CliqueWitness(
        n=n,
        k=k,
        squarefree_part=analysis.squarefree_part,
        elements=tuple(elements),
    )
    # provably collision-free; cheap enough to enforce every time
    assert len(set(witness.elements)) == analysis.omega, (
        f"witness parts collided for n={n}"
    )
    return witness


def verify_clique(n: int, candidate) -> CliqueCheck:
    """Check that `candidate` is a set of vertices of G(Z_n) forming a clique.

    Never raises on bad candidates; out-of-range or duplicated elements
    come back as a falsy CliqueCheck with a reason. The first offending
    pair (in sorted order) is reported for product failures.
    """
    elems = sorted(int(x) for x in candidate)
    for x in elems:
        if x < 1 or x >= n:
            return CliqueCheck(
                ok=False, reason=f"element {x} outside vertex range 1..{n - 1}"
            )
    for a, b in zip(elems, elems[1:]):
        if a == b:
            return CliqueCheck(ok=False, reason=f"element {a} appears twice")
    if len(elems) <= 1:
        return CliqueCheck(ok=True)

    if n <= kernels.INT64_SAFE_N:
        arr = np.asarray(elems, dtype=np.int64)
        bad = kernels.first_failing_pair(n, arr)
        if bad is not None:
            i, j = bad
            return CliqueCheck(
                ok=False,
                failing_pair=(elems[i], elems[j]),
                reason=f"{elems[i]} * {elems[j]} % {n} != 0",
            )
        return CliqueCheck(ok=True)

    # python ints: exact for any n < 2**63
    for i, x in enumerate(elems):
        for y in elems[i + 1 :]:
            if (x * y) % n != 0:
                return CliqueCheck(
                    ok=False,
                    failing_pair=(x, y),
                    reason=f"{x} * {y} % {n} != 0",
                )
    return CliqueCheck(ok=True)
