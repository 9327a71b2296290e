"""JIT-compiled hot kernels.

Plain-loop implementations of the quadratic pair scans and the bitset
clique searches, compiled with numba. The pure numpy/python counterparts
live in _kernels_numpy with identical public signatures; zdring.kernels
picks one module per the ZDRING_BACKEND flag.

Bitsets are uint64 words, LSB first. All label/product arithmetic is
int64; callers guarantee n is small enough that x*y fits (the dispatch
layer enforces n <= _INT64_SAFE_N for product scans).
"""

import numpy as np
from numba import njit

_M1 = np.uint64(0x5555555555555555)
_M2 = np.uint64(0x3333333333333333)
_M4 = np.uint64(0x0F0F0F0F0F0F0F0F)
_H01 = np.uint64(0x0101010101010101)
_U1 = np.uint64(1)
_U2 = np.uint64(2)
_U4 = np.uint64(4)
_U56 = np.uint64(56)


@njit(cache=True, inline="always")
def _popcount(x):
    x = x - ((x >> _U1) & _M1)
    x = (x & _M2) + ((x >> _U2) & _M2)
    x = (x + (x >> _U4)) & _M4
    return np.int64((x * _H01) >> _U56)


@njit(cache=True, inline="always")
def _first_set(row, W):
    for w in range(W):
        x = row[w]
        if x != 0:
            low = x & (~x + _U1)
            return np.int64(w * 64 + _popcount(low - _U1))
    return np.int64(-1)


@njit(cache=True)
def _pack_rows(adj):
    m = adj.shape[0]
    W = (m + 63) // 64
    out = np.zeros((m, max(W, 1)), np.uint64)
    for i in range(m):
        for j in range(m):
            if adj[i, j]:
                out[i, j >> 6] |= _U1 << np.uint64(j & 63)
    return out


@njit(cache=True)
def _product_adjacency(n, verts):
    m = verts.shape[0]
    out = np.zeros((m, m), np.uint8)
    for i in range(m):
        for j in range(i + 1, m):
            if (verts[i] * verts[j]) % n == 0:
                out[i, j] = 1
                out[j, i] = 1
    return out


@njit(cache=True)
def _pair_soundness_scan(n, cls_idx, adj):
    for x in range(1, n):
        cx = cls_idx[x - 1]
        for y in range(x + 1, n):
            elem = (x * y) % n == 0
            compressed = adj[cx, cls_idx[y - 1]] != 0
            if elem != compressed:
                return np.int64(x) << 32 | np.int64(y)
    return np.int64(-1)


@njit(cache=True)
def _exhaustive_degrees(n):
    deg = np.zeros(n - 1, np.int64)
    for x in range(1, n):
        for y in range(x + 1, n):
            if (x * y) % n == 0:
                deg[x - 1] += 1
                deg[y - 1] += 1
    return deg


@njit(cache=True)
def _first_failing_pair_scan(n, elems):
    m = elems.shape[0]
    for i in range(m):
        for j in range(i + 1, m):
            if (elems[i] * elems[j]) % n != 0:
                return np.int64(i) << 32 | np.int64(j)
    return np.int64(-1)


@njit(cache=True)
def _class_adjacency(vecs, alphas):
    m, s = vecs.shape
    out = np.zeros((m, m), np.uint8)
    for i in range(m):
        for j in range(i, m):
            ok = True
            for q in range(s):
                if vecs[i, q] + vecs[j, q] < alphas[q]:
                    ok = False
                    break
            if ok:
                out[i, j] = 1
                out[j, i] = 1
    return out


@njit(cache=True)
def _fill_branch(adjw, P, f, branch):
    # Pivot on the candidate with the most candidate neighbours; only
    # candidates outside its neighbourhood start branches at this level.
    m = adjw.shape[0]
    W = adjw.shape[1]
    bestu = -1
    bestc = np.int64(-1)
    for u in range(m):
        if (P[f, u >> 6] >> np.uint64(u & 63)) & _U1:
            c = np.int64(0)
            for w in range(W):
                c += _popcount(P[f, w] & adjw[u, w])
            if c > bestc:
                bestc = c
                bestu = u
    cnt = 0
    for v in range(m):
        if (P[f, v >> 6] >> np.uint64(v & 63)) & _U1:
            if not ((adjw[bestu, v >> 6] >> np.uint64(v & 63)) & _U1):
                branch[f, cnt] = v
                cnt += 1
    return cnt


@njit(cache=True)
def _max_clique_core(adjw, m, sel_out):
    # Iterative pivoting clique search (explicit stack). Frame depth f is
    # the size of the partial clique path[0:f]; P[f] holds its candidate
    # set and shrinks as branch vertices are consumed.
    W = adjw.shape[1]
    best = np.int64(0)
    best_len = 0
    P = np.zeros((m + 1, W), np.uint64)
    branch = np.zeros((m + 1, m), np.int32)
    bcnt = np.zeros(m + 1, np.int32)
    bidx = np.zeros(m + 1, np.int32)
    path = np.zeros(m + 1, np.int32)
    best_path = np.zeros(m + 1, np.int32)
    for j in range(m):
        P[0, j >> 6] |= _U1 << np.uint64(j & 63)
    bcnt[0] = _fill_branch(adjw, P, 0, branch)
    bidx[0] = 0
    f = 0
    while f >= 0:
        if bidx[f] >= bcnt[f]:
            f -= 1
            continue
        pc = np.int64(0)
        for w in range(W):
            pc += _popcount(P[f, w])
        if f + pc <= best:
            f -= 1
            continue
        v = branch[f, bidx[f]]
        bidx[f] += 1
        P[f, v >> 6] &= ~(_U1 << np.uint64(v & 63))
        path[f] = v
        if f + 1 > best:
            best = f + 1
            best_len = f + 1
            for i in range(best_len):
                best_path[i] = path[i]
        cnt = np.int64(0)
        for w in range(W):
            nxt = P[f, w] & adjw[v, w]
            P[f + 1, w] = nxt
            cnt += _popcount(nxt)
        if cnt > 0 and f + 1 + cnt > best:
            bcnt[f + 1] = _fill_branch(adjw, P, f + 1, branch)
            bidx[f + 1] = 0
            f += 1
    for i in range(best_len):
        sel_out[i] = best_path[i]
    return np.int64(best_len)


@njit(cache=True)
def _wclique_core(adjw, wts, masks, sel_out):
    # Branch and bound for a maximum-weight clique. Vertices arrive
    # sorted by descending weight; the branch vertex is always the first
    # set candidate. The bound is current weight + remaining weight,
    # where vertices carrying a conflict mask are capped by the distinct
    # bits of their union: callers guarantee two vertices with
    # intersecting masks are never adjacent, so a clique can only gain
    # one unit per mask bit from them.
    m = wts.shape[0]
    W = adjw.shape[1]
    best = np.int64(0)
    best_len = 0
    best_path = np.zeros(m + 1, np.int32)

    # Greedy first-fit pass seeds the bound.
    gp = np.zeros(W, np.uint64)
    for j in range(m):
        gp[j >> 6] |= _U1 << np.uint64(j & 63)
    gw = np.int64(0)
    while True:
        v = _first_set(gp, W)
        if v < 0:
            break
        gw += wts[v]
        best_path[best_len] = v
        best_len += 1
        for w in range(W):
            gp[w] &= adjw[v, w]
    best = gw

    P = np.zeros((m + 1, W), np.uint64)
    cw = np.zeros(m + 1, np.int64)
    path = np.zeros(m + 1, np.int32)
    for j in range(m):
        P[0, j >> 6] |= _U1 << np.uint64(j & 63)
    f = 0
    while f >= 0:
        rw = np.int64(0)
        conf = np.uint64(0)
        for w in range(W):
            x = P[f, w]
            while x != 0:
                low = x & (~x + _U1)
                j = w * 64 + _popcount(low - _U1)
                dm = masks[j]
                if dm == 0:
                    rw += wts[j]
                else:
                    conf |= dm
                x ^= low
        rw += np.int64(_popcount(conf))
        if rw == 0 or cw[f] + rw <= best:
            f -= 1
            continue
        v = _first_set(P[f], W)
        P[f, v >> 6] &= ~(_U1 << np.uint64(v & 63))
        path[f] = v
        nw = cw[f] + wts[v]
        if nw > best:
            best = nw
            best_len = f + 1
            for i in range(best_len):
                best_path[i] = path[i]
        nonzero = False
        for w in range(W):
            x = P[f, w] & adjw[v, w]
            P[f + 1, w] = x
            if x != 0:
                nonzero = True
        if nonzero:
            cw[f + 1] = nw
            f += 1
    for i in range(best_len):
        sel_out[i] = best_path[i]
    return best, np.int64(best_len)


# ---------------------------------------------------------------------
# Public surface (shared signatures with _kernels_numpy).


def product_adjacency(n: int, verts: np.ndarray) -> np.ndarray:
    """uint8[m, m] adjacency among `verts` in G(Z_n): x*y % n == 0, x != y."""
    return _product_adjacency(np.int64(n), np.ascontiguousarray(verts, np.int64))


def pair_soundness_mismatch(n, cls_idx, adj):
    """First (x, y), x < y, where element and class adjacency disagree, else None."""
    code = _pair_soundness_scan(
        np.int64(n),
        np.ascontiguousarray(cls_idx, np.int64),
        np.ascontiguousarray(adj, np.uint8),
    )
    if code < 0:
        return None
    return int(code >> 32), int(code & 0xFFFFFFFF)


def exhaustive_degrees(n: int) -> np.ndarray:
    """Degrees of 1..n-1 counted pair by pair from the defining product."""
    return _exhaustive_degrees(np.int64(n))


def first_failing_pair(n, elems):
    """First index pair (i, j) with elems[i]*elems[j] % n != 0, else None."""
    e = np.ascontiguousarray(elems, np.int64)
    code = _first_failing_pair_scan(np.int64(n), e)
    if code < 0:
        return None
    return int(code >> 32), int(code & 0xFFFFFFFF)


def class_adjacency(vecs, alphas) -> np.ndarray:
    """uint8[m, m]: classes adjacent iff exponent vectors sum to >= alpha everywhere."""
    return _class_adjacency(
        np.ascontiguousarray(vecs, np.int64), np.ascontiguousarray(alphas, np.int64)
    )


def max_clique(adj) -> tuple[int, list[int]]:
    """Maximum clique of a boolean adjacency matrix: (size, vertex indices)."""
    m = adj.shape[0]
    if m == 0:
        return 0, []
    adjw = _pack_rows(np.ascontiguousarray(adj, np.uint8))
    sel = np.zeros(m + 1, np.int32)
    size = _max_clique_core(adjw, m, sel)
    return int(size), sorted(int(v) for v in sel[: int(size)])


def max_weight_clique(adj, weights, conflict_masks=None) -> tuple[int, list[int]]:
    """Maximum-weight clique: (total weight, vertex indices).

    Callers should pass vertices sorted by descending weight; the search
    is correct regardless, but the bound is tightest that way.

    `conflict_masks` tightens the bound for graphs where it applies: a
    vertex with a nonzero mask is counted through the popcount of the
    mask union instead of its weight. Callers must guarantee that two
    vertices with intersecting masks are never adjacent and that a
    masked vertex's weight does not exceed its mask's bit count.
    """
    m = adj.shape[0]
    if m == 0:
        return 0, []
    adjw = _pack_rows(np.ascontiguousarray(adj, np.uint8))
    wts = np.ascontiguousarray(weights, np.int64)
    if conflict_masks is None:
        masks = np.zeros(m, np.uint64)
    else:
        masks = np.ascontiguousarray(conflict_masks, np.uint64)
    sel = np.zeros(m + 1, np.int32)
    total, cnt = _wclique_core(adjw, wts, masks, sel)
    return int(total), sorted(int(v) for v in sel[: int(cnt)])


def warmup() -> None:
    """Force-compile every kernel on tiny inputs (JIT cache priming)."""
    product_adjacency(6, np.array([2, 3, 4], np.int64))
    pair_soundness_mismatch(
        4,
        np.array([0, 1, 0], np.int64),
        np.array([[0, 0], [0, 1]], np.uint8),
    )
    exhaustive_degrees(6)
    first_failing_pair(6, np.array([2, 3], np.int64))
    class_adjacency(np.array([[0], [1]], np.int64), np.array([2], np.int64))
    adj = np.array([[0, 1], [1, 0]], np.uint8)
    max_clique(adj)
    max_weight_clique(adj, np.array([2, 1], np.int64), np.array([0, 1], np.uint64))
