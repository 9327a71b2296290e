"""Element-level brute oracle: tiny-scale exact recomputation.

Everything here works from the raw definition (n | x*y), recomputing
adjacency from products instead of trusting the formula-built graph, so
it can referee between the closed forms and the divisor-class oracle.
Clique search uses pivoting enumeration over bitset candidates; vertex
coloring is saturation-ordered backtracking seeded with a maximum clique
and capped by a greedy bound; edge coloring decides delta-colorability
by backtracking and otherwise returns delta + 1, which is always enough.
Each entry point refuses n beyond its (configurable) bound, because
costs are quadratic-to-exponential by design.
"""

from dataclasses import dataclass

import numpy as np

from . import kernels
from .errors import ResourceLimitError
from .graph import ExplicitGraph, build_graph

DEFAULT_OMEGA_BOUND = 500
DEFAULT_CHI_BOUND = 100
DEFAULT_CHI1_BOUND = 40


@dataclass(frozen=True)
class GraphStats:
    """Brute-forced invariants of G(Z_n); chi fields only below their bounds."""

    n: int
    omega_brute: int
    delta_brute: int
    chi_brute: int | None = None
    chi1_brute: int | None = None


def _check_bound(n: int, bound: int, what: str) -> None:
    if n > bound:
        raise ResourceLimitError(f"{what} is limited to n <= {bound}, got {n}")


def _nonisolated_and_adjacency(n: int) -> tuple[np.ndarray, np.ndarray]:
    """Vertices with at least one neighbour and their product adjacency."""
    verts = np.arange(1, n, dtype=np.int64)
    adj = kernels.product_adjacency(n, verts)
    keep = adj.any(axis=1)
    verts = verts[keep]
    return verts, adj[np.ix_(keep, keep)].astype(bool)


def max_clique_vertices(
    g: ExplicitGraph, bound: int = DEFAULT_OMEGA_BOUND
) -> tuple[int, list[int]]:
    """(omega, one maximum clique) by exhaustive pivoting search."""
    _check_bound(g.n, bound, "brute clique search")
    verts, adj = _nonisolated_and_adjacency(g.n)
    if verts.shape[0] == 0:
        return 1, [1]  # every vertex is isolated; any single vertex is maximal
    # order by descending degree: better pivots, earlier pruning
    order = np.lexsort((np.arange(verts.shape[0]), -adj.sum(axis=1)))
    size, picked = kernels.max_clique(adj[np.ix_(order, order)])
    members = sorted(int(verts[order[i]]) for i in picked)
    return size, members


def omega_brute(g: ExplicitGraph, bound: int = DEFAULT_OMEGA_BOUND) -> int:
    """Clique number by exhaustive search (n <= bound, default 500)."""
    size, _ = max_clique_vertices(g, bound=bound)
    return size


def delta_brute(g: ExplicitGraph) -> int:
    """Maximum degree by exhaustively counting product partners."""
    return int(kernels.exhaustive_degrees(g.n).max())


def _greedy_coloring(adj_masks: list[int], order: list[int]) -> int:
    colors: dict[int, int] = {}
    used = 0
    for v in order:
        taken = 0
        for u, cu in colors.items():
            if adj_masks[v] >> u & 1:
                taken |= 1 << cu
        c = 0
        while taken >> c & 1:
            c += 1
        colors[v] = c
        used = max(used, c + 1)
    return used


def _k_colorable(adj_masks: list[int], m: int, k: int, clique: list[int]) -> bool:
    """Backtracking k-colorability, clique preassigned, saturation order."""
    if len(clique) > k:
        return False
    colors = [-1] * m
    neighbor_colors = [0] * m  # bitmask of colors adjacent to each vertex
    uncolored = set(range(m))

    def assign(v: int, c: int) -> list[int]:
        colors[v] = c
        touched = []
        mask = adj_masks[v]
        while mask:
            low = mask & -mask
            u = low.bit_length() - 1
            mask ^= low
            if not neighbor_colors[u] >> c & 1:
                neighbor_colors[u] |= 1 << c
                touched.append(u)
        return touched

    def unassign(v: int, c: int, touched: list[int]) -> None:
        colors[v] = -1
        for u in touched:
            neighbor_colors[u] &= ~(1 << c)

    stack_used = len(clique)
    for i, v in enumerate(clique):
        assign(v, i)
        uncolored.discard(v)

    def solve(used: int) -> bool:
        if not uncolored:
            return True
        # saturation order: most distinct neighbour colors, then degree
        v = max(
            uncolored,
            key=lambda u: (
                neighbor_colors[u].bit_count(),
                adj_masks[u].bit_count(),
                -u,
            ),
        )
        uncolored.discard(v)
        limit = min(k, used + 1)  # at most one brand-new color
        for c in range(limit):
            if neighbor_colors[v] >> c & 1:
                continue
            touched = assign(v, c)
            if solve(max(used, c + 1)):
                return True
            unassign(v, c, touched)
        uncolored.add(v)
        return False

    return solve(stack_used)


def chi_brute(g: ExplicitGraph, bound: int = DEFAULT_CHI_BOUND) -> int:
    """Exact chromatic number (n <= bound, default 100)."""
    _check_bound(g.n, bound, "brute vertex coloring")
    verts, adj = _nonisolated_and_adjacency(g.n)
    m = verts.shape[0]
    if m == 0:
        return 1  # edgeless, at least one vertex since n >= 2
    lower, clique_members = max_clique_vertices(g, bound=max(bound, g.n))
    vert_index = {int(v): i for i, v in enumerate(verts)}
    clique = [vert_index[v] for v in clique_members]
    masks = [
        int.from_bytes(
            np.packbits(adj[i], bitorder="little").tobytes(), "little"
        )
        for i in range(m)
    ]
    order = sorted(range(m), key=lambda v: -masks[v].bit_count())
    upper = _greedy_coloring(masks, order)
    for k in range(lower, upper):
        if _k_colorable(masks, m, k, clique):
            return k
    return upper


def chi1_brute(g: ExplicitGraph, bound: int = DEFAULT_CHI1_BOUND) -> int:
    """Exact edge chromatic number (n <= bound, default 40).

    Tries delta colors by backtracking; when that fails delta + 1 always
    suffices, so no second search is needed. Edgeless graphs report 0.
    """
    _check_bound(g.n, bound, "brute edge coloring")
    verts, adj = _nonisolated_and_adjacency(g.n)
    if verts.shape[0] == 0:
        return 0
    delta = int(adj.sum(axis=1).max())
    edges = [
        (i, j)
        for i in range(verts.shape[0])
        for j in range(i + 1, verts.shape[0])
        if adj[i, j]
    ]
    if _edge_colorable(edges, verts.shape[0], delta):
        return delta
    return delta + 1


def _edge_colorable(edges: list[tuple[int, int]], m: int, k: int) -> bool:
    """Backtracking k-edge-colorability with most-constrained-first order."""
    if k == 0:
        return not edges
    vertex_mask = [0] * m  # colors already used at each vertex
    remaining = set(range(len(edges)))
    full = (1 << k) - 1

    def solve(used: int) -> bool:
        if not remaining:
            return True
        # pick the edge with fewest free colors (MRV), deterministic ties
        best_e, best_free = -1, k + 1
        for e in remaining:
            a, b = edges[e]
            free = k - (vertex_mask[a] | vertex_mask[b]).bit_count()
            if free < best_free:
                best_free, best_e = free, e
                if free == 0:
                    return False
        e = best_e
        a, b = edges[e]
        remaining.discard(e)
        taken = vertex_mask[a] | vertex_mask[b]
        limit = min(k, used + 1)
        for c in range(limit):
            if taken >> c & 1:
                continue
            bit = 1 << c
            vertex_mask[a] |= bit
            vertex_mask[b] |= bit
            if solve(max(used, c + 1)):
                return True
            vertex_mask[a] &= ~bit
            vertex_mask[b] &= ~bit
        remaining.add(e)
        return False

    return solve(0)


def graph_stats(
    n: int,
    omega_bound: int = DEFAULT_OMEGA_BOUND,
    chi_bound: int = DEFAULT_CHI_BOUND,
    chi1_bound: int = DEFAULT_CHI1_BOUND,
) -> GraphStats:
    """All brute invariants for one n; chi fields None above their bounds."""
    _check_bound(n, omega_bound, "brute clique search")
    g = build_graph(n)
    omega = omega_brute(g, bound=omega_bound)
    delta = delta_brute(g)
    chi = chi_brute(g, bound=chi_bound) if n <= chi_bound else None
    chi1 = chi1_brute(g, bound=chi1_bound) if n <= chi1_bound else None
    return GraphStats(
        n=n, omega_brute=omega, delta_brute=delta, chi_brute=chi, chi1_brute=chi1
    )
