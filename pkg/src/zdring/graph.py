"""Explicit materialization of G(Z_n): adjacency, degrees, exports.

The neighbours of x are exactly the nonzero multiples of n/gcd(x, n),
minus x itself when n | x^2 (no self-loops). That makes the degree of x

    gcd(x, n) - 1 - [n | x^2]

and lets the builder share one multiples array per gcd class instead of
testing n^2 pairs; vertices in self-adjacent classes get a copy with
themselves removed. The O(n^2) pair scan survives in the kernels module
as the test oracle for all of this.
"""

import math

import numpy as np

from .errors import DomainError, ResourceLimitError
from .factorization import factorize

DEFAULT_VERTEX_LIMIT = 1_000_000


class ExplicitGraph:
    """Adjacency lists of G(Z_n), vertices 1..n-1.

    Rows are sorted numpy arrays. Vertices of a self-adjacent class own a
    private row (their own label removed); everyone else in a class
    shares one array, so treat rows as read-only.
    """

    def __init__(self, n: int, rows: dict):
        self.n = n
        self._rows = rows  # vertex -> np.ndarray of neighbours

    @property
    def vertex_count(self) -> int:
        return self.n - 1

    def neighbors(self, x: int) -> np.ndarray:
        if not 1 <= x < self.n:
            raise DomainError(f"vertex {x} outside 1..{self.n - 1}")
        return self._rows[x]

    def degree(self, x: int) -> int:
        return int(self.neighbors(x).shape[0])

    def degrees(self) -> np.ndarray:
        """int64[n-1], degree of vertex i+1 at index i."""
        return np.array(
            [self._rows[x].shape[0] for x in range(1, self.n)], dtype=np.int64
        )

    def edge_count(self) -> int:
        return int(self.degrees().sum()) // 2

    def edges(self):
        """Yield (x, y) with x < y, ascending lexicographically."""
        for x in range(1, self.n):
            row = self._rows[x]
            for y in row[np.searchsorted(row, x + 1) :]:
                yield x, int(y)

    def isolated(self, x: int) -> bool:
        return self.degree(x) == 0


def vertex_degree(n: int, x: int) -> int:
    """Degree of vertex x in G(Z_n), straight from the gcd formula."""
    if n < 2:
        raise DomainError("no zero-divisor graph defined")
    if not 1 <= x < n:
        raise DomainError(f"vertex {x} outside 1..{n - 1}")
    g = math.gcd(x, n)
    return g - 1 - (1 if (x * x) % n == 0 else 0)


def build_graph(n: int, limit: int = DEFAULT_VERTEX_LIMIT) -> ExplicitGraph:
    """Materialize G(Z_n). Refuses n > limit (default 1e6)."""
    if n < 2:
        raise DomainError("no zero-divisor graph defined")
    if n > limit:
        raise ResourceLimitError(
            f"graph for n={n} exceeds materialization limit={limit}"
        )
    dtype = np.int64 if n > 2**31 else np.int32
    gcds = np.gcd(np.arange(1, n, dtype=np.int64), n)
    shared: dict[int, np.ndarray] = {}  # gcd g -> multiples of n//g
    rows: dict[int, np.ndarray] = {}
    for x in range(1, n):
        g = int(gcds[x - 1])
        row = shared.get(g)
        if row is None:
            step = n // g
            row = np.arange(step, n, step, dtype=dtype)
            shared[g] = row
        if (x * x) % n == 0:
            rows[x] = row[row != x]
        else:
            rows[x] = row
    return ExplicitGraph(n, rows)


def render_edge_list(g: ExplicitGraph) -> str:
    """One "x y" line per edge, x < y, sorted. Empty string if edgeless."""
    return "".join(f"{x} {y}\n" for x, y in g.edges())


def render_dot(g: ExplicitGraph, include_isolated: bool = True) -> str:
    """Undirected dot block with numeric node ids.

    include_isolated=False drops vertices of degree zero from the node
    list (edges are unaffected).
    """
    lines = ["graph G {"]
    for x in range(1, g.n):
        if include_isolated or g.degree(x) > 0:
            lines.append(f"  {x};")
    for x, y in g.edges():
        lines.append(f"  {x} -- {y};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def export_graph(
    n: int,
    fmt: str,
    include_isolated: bool = True,
    limit: int = DEFAULT_VERTEX_LIMIT,
) -> str:
    """Render G(Z_n) as 'edge-list' or 'dot' text."""
    factorize(n)  # domain validation, consistent errors with the rest
    g = build_graph(n, limit=limit)
    if fmt == "edge-list":
        return render_edge_list(g)
    if fmt == "dot":
        return render_dot(g, include_isolated=include_isolated)
    raise DomainError(f"unknown export format {fmt!r} (edge-list or dot)")
