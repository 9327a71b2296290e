"""Closed-form invariants of the zero-divisor graph G(Z_n).

G(Z_n) has vertex set {1, ..., n-1} and an edge between distinct x, y
exactly when n divides x*y. The clique number comes from splitting the
factorization by exponent parity: with n = prod(p_i^d_i) * prod(q_j^b_j)
(d_i even, b_j odd),

    k = prod(p_i^(d_i/2)) * prod(q_j^((b_j-1)/2)),   t = #odd-exponent primes,

the clique number is k + t - 1. The square-free (all exponents 1) and
perfect-square (all exponents even) shapes are the two boundary cases of
the same expression, so one formula serves all three.

The classical max-degree prediction n/p_1 - 1 (p_1 the smallest prime
factor) counts the neighbours of n/p_1 but forgets that a vertex is not
its own neighbour: whenever p_1^2 | n the vertex n/p_1 is self-adjacent
and the true maximum degree is one less. We expose the prediction as-is
(max_degree_paper) and let the divisor oracle report the exact value;
analyses carry an explicit match flag instead of a silent correction.
"""

import enum
import math
from dataclasses import dataclass

from .factorization import Factorization, factorize


class CliqueCase(enum.Enum):
    """Which parity shape the factorization of n falls into."""

    SQUARE_FREE = "square-free"
    ALL_EVEN = "all-even"
    MIXED = "mixed"


@dataclass(frozen=True)
class CliqueAnalysis:
    """Clique-number decomposition of n.

    even_part / odd_part split f.factors by exponent parity; k and t are
    the quantities defined in the module docstring; omega = k + t - 1.
    """

    n: int
    case: CliqueCase
    even_part: tuple[tuple[int, int], ...]
    odd_part: tuple[tuple[int, int], ...]
    k: int
    t: int
    omega: int

    @property
    def squarefree_part(self) -> int:
        """Product of the odd-exponent primes; n == squarefree_part * k**2."""
        out = 1
        for q, _ in self.odd_part:
            out *= q
        return out


def _as_factorization(f) -> Factorization:
    return f if isinstance(f, Factorization) else factorize(f)


def classify(f) -> CliqueCase:
    """Parity shape of n's factorization."""
    f = _as_factorization(f)
    if all(a == 1 for _, a in f.factors):
        return CliqueCase.SQUARE_FREE
    if all(a % 2 == 0 for _, a in f.factors):
        return CliqueCase.ALL_EVEN
    return CliqueCase.MIXED


def clique_number(f) -> CliqueAnalysis:
    """Closed-form clique number of G(Z_n) with its decomposition."""
    f = _as_factorization(f)
    even = tuple((p, a) for p, a in f.factors if a % 2 == 0)
    odd = tuple((q, b) for q, b in f.factors if b % 2 == 1)
    k = 1
    for p, a in even:
        k *= p ** (a // 2)
    for q, b in odd:
        k *= q ** ((b - 1) // 2)
    t = len(odd)
    omega = k + t - 1
    analysis = CliqueAnalysis(
        n=f.n,
        case=classify(f),
        even_part=even,
        odd_part=odd,
        k=k,
        t=t,
        omega=omega,
    )
    # n = c * k^2 with c the squarefree part; cheap structural self-check.
    assert analysis.squarefree_part * k * k == f.n
    return analysis


def max_degree_paper(f) -> int:
    """Predicted maximum degree n/p_1 - 1 (see module docstring caveat)."""
    f = _as_factorization(f)
    return f.n // f.smallest_prime - 1


def chromatic_identities(analysis: CliqueAnalysis, delta_exact: int) -> tuple[int, int]:
    """Predicted (chi, chi1) for G(Z_n).

    The chromatic number of G(Z_n) equals its clique number, and for
    graphs with at least one edge the edge chromatic number equals the
    maximum degree; edgeless graphs need 0 edge colours. Both predictions
    are verified against brute search by the test suite.
    """
    chi = analysis.omega
    chi1 = delta_exact if delta_exact > 0 else 0
    return chi, chi1


def has_zero_divisor_pair(n: int) -> bool:
    """True iff some distinct x, y in 1..n-1 satisfy n | x*y.

    Equivalent to "G(Z_n) has an edge", which the formula says happens
    exactly when omega >= 2, i.e. for every n other than the primes and
    n = 4 (where the only candidate partner of 2 is 2 itself). Answered
    from the factorization shape alone so tests can play it against an
    exhaustive pair scan.
    """
    f = factorize(n)
    if len(f.factors) == 1:
        p, a = f.factors[0]
        if a == 1:
            return False
        if a == 2:
            # need two distinct multiples of p below p^2, so p > 2
            return p > 2
        return True
    return True
