"""Integer factorization and totient helpers.

Everything downstream (clique formula, witness construction, the
divisor-class oracle) consumes prime-power decompositions, so this module
is the single entry point for them. Factoring is exact and deterministic
for the whole supported domain 2 <= n < 2**63: trial division by small
primes, then Miller-Rabin with a fixed witness set that is proven
deterministic below 2**64, then Brent's cycle-finding splitter with a
deterministic parameter sweep for whatever survives.
"""

import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError

# Exclusive upper bound of the supported domain. Vertex labels stay below
# this, so pairwise products fit comfortably in 128-bit python ints and
# single labels in int64 arrays.
N_MAX = 2**63

_TRIAL_BOUND = 4096

# Deterministic Miller-Rabin witnesses for all n < 3.3e24 (covers 2**64).
_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


@dataclass(frozen=True)
class Factorization:
    """n together with its prime factorization, primes ascending."""

    n: int
    factors: tuple[tuple[int, int], ...]

    @property
    def primes(self) -> tuple[int, ...]:
        return tuple(p for p, _ in self.factors)

    @property
    def exponents(self) -> tuple[int, ...]:
        return tuple(a for _, a in self.factors)

    @property
    def smallest_prime(self) -> int:
        return self.factors[0][0]

    def __str__(self) -> str:
        return " * ".join(
            f"{p}^{a}" if a > 1 else str(p) for p, a in self.factors
        )


def is_prime(n: int) -> bool:
    """Deterministic primality test for 0 <= n < 2**64."""
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % p == 0:
            return n == p
    d = n - 1
    s = 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_WITNESSES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _brent_split(n: int) -> int:
    """Return a non-trivial factor of composite n.

    Brent's variant of the rho cycle search. The polynomial offset c walks
    a fixed sequence 1, 2, 3, ... so runs are reproducible.
    """
    if n % 2 == 0:
        return 2
    c = 1
    while True:
        y, r, q = 2, 1, 1
        g, x, ys = 1, 0, 0
        while g == 1:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(128, r - k)):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                g = math.gcd(q, n)
                k += 128
            r *= 2
        if g == n:
            # Batch gcd overshot the factor; replay one step at a time.
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = math.gcd(abs(x - ys), n)
        if g != n:
            return g
        c += 1


def factorize(n: int) -> Factorization:
    """Exact prime factorization of n, 2 <= n < 2**63."""
    if not isinstance(n, (int, np.integer)):
        raise DomainError(f"n must be an integer, got {type(n).__name__}")
    n = int(n)
    if n < 2:
        raise DomainError("no zero-divisor graph defined")
    if n >= N_MAX:
        raise DomainError(f"n must be below 2**63, got {n}")

    counts: dict[int, int] = {}
    m = n
    while m % 2 == 0:
        counts[2] = counts.get(2, 0) + 1
        m //= 2
    d = 3
    while d <= _TRIAL_BOUND and d * d <= m:
        while m % d == 0:
            counts[d] = counts.get(d, 0) + 1
            m //= d
        d += 2
    if m > 1:
        stack = [m]
        while stack:
            q = stack.pop()
            if is_prime(q):
                counts[q] = counts.get(q, 0) + 1
            else:
                f = _brent_split(q)
                stack.append(f)
                stack.append(q // f)

    factors = tuple(sorted(counts.items()))
    check = 1
    for p, a in factors:
        check *= p**a
    assert check == n, f"factorization of {n} does not multiply back"
    return Factorization(n=n, factors=factors)


def euler_phi(x) -> int:
    """Euler totient. Accepts an int >= 1 or a Factorization."""
    if isinstance(x, Factorization):
        factors = x.factors
    else:
        x = int(x)
        if x < 1:
            raise DomainError(f"totient undefined for {x}")
        if x == 1:
            return 1
        factors = factorize(x).factors
    out = 1
    for p, a in factors:
        out *= p ** (a - 1) * (p - 1)
    return out


def divisor_table(f: Factorization) -> tuple[np.ndarray, np.ndarray]:
    """All divisors of f.n ascending, plus their exponent vectors.

    Returns (divs, vecs): divs is int64[m], vecs is int64[m, s] aligned
    row-for-row, vecs[i, j] = multiplicity of f.primes[j] in divs[i].
    Every divisor is < 2**63 so int64 never overflows.
    """
    s = len(f.factors)
    divs = np.ones(1, dtype=np.int64)
    vecs = np.zeros((1, s), dtype=np.int64)
    for i, (p, a) in enumerate(f.factors):
        powers = np.int64(p) ** np.arange(a + 1, dtype=np.int64)
        old = divs.shape[0]
        divs = (divs[:, None] * powers[None, :]).ravel()
        vecs = np.repeat(vecs, a + 1, axis=0)
        vecs[:, i] = np.tile(np.arange(a + 1, dtype=np.int64), old)
    order = np.argsort(divs, kind="stable")
    return divs[order], vecs[order]


def divisors(f: Factorization) -> list[int]:
    """All divisors of f.n in increasing order."""
    divs, _ = divisor_table(f)
    return [int(d) for d in divs]


def vector_totients(primes, vecs) -> np.ndarray:
    """Totients of the numbers given by exponent vectors over `primes`.

    vecs is int64[m, s]; row r describes prod(primes[j] ** vecs[r, j]).
    Vectorized so callers can get phi for a whole divisor table at once.
    """
    primes = np.asarray(primes, dtype=np.int64)
    vecs = np.asarray(vecs, dtype=np.int64)
    if vecs.ndim != 2:
        raise ValueError("vecs must be 2-dimensional")
    exp = np.maximum(vecs - 1, 0)
    terms = np.where(vecs > 0, primes**exp * (primes - 1), np.int64(1))
    return terms.prod(axis=1, dtype=np.int64)
