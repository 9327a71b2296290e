"""Fallback kernels: vectorized numpy for the pair scans, python-int
bitsets for the clique searches.

Same public signatures as _kernels_numba. This path is what you get with
ZDRING_BACKEND=numpy or when numba is unavailable; it is exact but
slower, so the heavy acceptance sweeps assume the JIT backend.
"""

import numpy as np

_BLOCK = 512


def product_adjacency(n: int, verts) -> np.ndarray:
    verts = np.asarray(verts, dtype=np.int64)
    prods = verts[:, None] * verts[None, :]
    adj = (prods % np.int64(n) == 0).astype(np.uint8)
    np.fill_diagonal(adj, 0)
    return adj


def pair_soundness_mismatch(n, cls_idx, adj):
    cls_idx = np.asarray(cls_idx, dtype=np.int64)
    adj = np.asarray(adj, dtype=bool)
    ys = np.arange(1, n, dtype=np.int64)
    for x0 in range(1, n, _BLOCK):
        xs = np.arange(x0, min(x0 + _BLOCK, n), dtype=np.int64)
        elem = (xs[:, None] * ys[None, :]) % np.int64(n) == 0
        compressed = adj[cls_idx[xs - 1][:, None], cls_idx[None, :]]
        bad = elem != compressed
        # only x < y pairs are meaningful (relation is symmetric anyway)
        bad &= ys[None, :] > xs[:, None]
        if bad.any():
            i, j = np.argwhere(bad)[0]
            return int(xs[i]), int(ys[j])
    return None


def exhaustive_degrees(n: int) -> np.ndarray:
    ys = np.arange(1, n, dtype=np.int64)
    deg = np.empty(n - 1, dtype=np.int64)
    for x0 in range(1, n, _BLOCK):
        xs = np.arange(x0, min(x0 + _BLOCK, n), dtype=np.int64)
        hits = (xs[:, None] * ys[None, :]) % np.int64(n) == 0
        deg[x0 - 1 : x0 - 1 + xs.shape[0]] = hits.sum(axis=1)
        # drop the self pair where x*x % n == 0
        deg[x0 - 1 : x0 - 1 + xs.shape[0]] -= (xs * xs) % np.int64(n) == 0
    return deg


def first_failing_pair(n, elems):
    elems = np.asarray(elems, dtype=np.int64)
    m = elems.shape[0]
    for i in range(m - 1):
        rest = (np.int64(elems[i]) * elems[i + 1 :]) % np.int64(n)
        bad = np.nonzero(rest != 0)[0]
        if bad.size:
            return i, int(i + 1 + bad[0])
    return None


def class_adjacency(vecs, alphas) -> np.ndarray:
    vecs = np.asarray(vecs, dtype=np.int64)
    alphas = np.asarray(alphas, dtype=np.int64)
    m = vecs.shape[0]
    out = np.empty((m, m), dtype=np.uint8)
    step = max(1, min(m, 4096 // max(1, vecs.shape[1])) * 8)
    for r0 in range(0, m, step):
        r1 = min(r0 + step, m)
        sums = vecs[r0:r1, None, :] + vecs[None, :, :]
        out[r0:r1] = (sums >= alphas).all(axis=2)
    return out


def _rows_to_masks(adj) -> list[int]:
    adj = np.ascontiguousarray(np.asarray(adj, dtype=bool), dtype=np.uint8)
    packed = np.packbits(adj, axis=1, bitorder="little")
    return [int.from_bytes(row.tobytes(), "little") for row in packed]


def max_clique(adj) -> tuple[int, list[int]]:
    m = adj.shape[0]
    if m == 0:
        return 0, []
    masks = _rows_to_masks(adj)
    full = (1 << m) - 1
    best = 0
    best_set: list[int] = []
    path: list[int] = []

    def expand(P: int) -> None:
        nonlocal best, best_set
        # pivot: candidate with most candidate neighbours
        pivot, pivot_cnt = -1, -1
        q = P
        while q:
            low = q & -q
            u = low.bit_length() - 1
            c = (P & masks[u]).bit_count()
            if c > pivot_cnt:
                pivot_cnt, pivot = c, u
            q ^= low
        ext = P & ~masks[pivot]
        while ext:
            if len(path) + P.bit_count() <= best:
                return
            low = ext & -ext
            v = low.bit_length() - 1
            ext ^= low
            P &= ~low
            path.append(v)
            if len(path) > best:
                best = len(path)
                best_set = path.copy()
            child = P & masks[v]
            if child:
                expand(child)
            path.pop()

    expand(full)
    return best, sorted(best_set)


def max_weight_clique(adj, weights, conflict_masks=None) -> tuple[int, list[int]]:
    m = adj.shape[0]
    if m == 0:
        return 0, []
    masks = _rows_to_masks(adj)
    wts = [int(w) for w in np.asarray(weights, dtype=np.int64)]
    if conflict_masks is None:
        confs = [0] * m
    else:
        confs = [int(c) for c in np.asarray(conflict_masks, dtype=np.uint64)]
    full = (1 << m) - 1

    def bound(P: int) -> int:
        # remaining weight, except vertices with a conflict mask count
        # through the popcount of the mask union (intersecting masks are
        # never adjacent by contract, so a clique holds one per bit)
        total = 0
        union = 0
        while P:
            low = P & -P
            v = low.bit_length() - 1
            if confs[v]:
                union |= confs[v]
            else:
                total += wts[v]
            P ^= low
        return total + union.bit_count()

    # greedy first-fit seed (vertices assumed sorted by descending weight)
    best_set: list[int] = []
    P = full
    best = 0
    while P:
        v = (P & -P).bit_length() - 1
        best += wts[v]
        best_set.append(v)
        P &= masks[v]

    # explicit-stack branch and bound, mirroring the jitted kernel;
    # path[i] is the vertex chosen when branching from frame i, so the
    # partial clique at the top frame f is path[0:f] + the next choice.
    stack: list[tuple[int, int]] = [(full, 0)]
    path: list[int] = []
    while stack:
        f = len(stack) - 1
        P, cur = stack[f]
        if P == 0 or cur + bound(P) <= best:
            stack.pop()
            continue
        low = P & -P
        v = low.bit_length() - 1
        stack[f] = (P ^ low, cur)
        del path[f:]
        path.append(v)
        nw = cur + wts[v]
        if nw > best:
            best = nw
            best_set = path.copy()
        child = (P ^ low) & masks[v]
        if child:
            stack.append((child, nw))
    return best, sorted(best_set)


def warmup() -> None:
    """No JIT here; present so both backends share a surface."""
