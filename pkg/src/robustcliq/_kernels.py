"""Hot inner loops over vertex bitmasks and bit-packed GF(2) rows.

Every kernel has two implementations: a numba ``@njit`` version and a pure
numpy one.  The numba version is used when numba imports and
``ROBUSTCLIQ_DISABLE_NUMBA`` is unset; the numpy one otherwise.  Both are
importable directly (``*_numpy`` / ``*_numba``) so tests and the benchmark can
compare them.

Vertex sets are ``int64`` bitmasks, so graphs passed here have at most 62
vertices.  Adjacency is an ``int64`` array ``adj`` with ``adj[v]`` the
neighbourhood mask of ``v``.
"""
import numpy as np

from ._jit import HAVE_NUMBA, njit

MAX_KERNEL_VERTICES = 62
# alpha tables beyond this many vertices cost more memory than they save
TABLE_LIMIT = 22

BACKEND = "numba" if HAVE_NUMBA else "numpy"


def _as_adj(adj):
    adj = np.ascontiguousarray(adj, dtype=np.int64)
    if adj.ndim != 1 or adj.shape[0] > MAX_KERNEL_VERTICES:
        raise ValueError("adjacency must be a 1-d mask array of at most 62 vertices")
    return adj


# ---------------------------------------------------------------- alpha table


def alpha_table_numpy(adj):
    """Independence number of every induced subgraph, indexed by vertex mask."""
    adj = _as_adj(adj)
    n = adj.shape[0]
    table = np.zeros(1 << n, dtype=np.int8)
    for b in range(n):
        half = 1 << b
        rest = np.arange(half, dtype=np.int64)
        keep = rest & ~adj[b]
        table[half : 2 * half] = np.maximum(table[:half], table[keep] + 1)
    return table


@njit(cache=True)
def _alpha_table_nb(adj):
    n = adj.shape[0]
    table = np.zeros(1 << n, dtype=np.int8)
    for b in range(n):
        half = np.int64(1) << b
        nb = ~adj[b]
        for rest in range(half):
            a = table[rest]
            c = table[rest & nb] + 1
            table[half + rest] = a if a > c else c
    return table


def alpha_table_numba(adj):
    if _alpha_table_nb is None:
        raise RuntimeError("numba backend unavailable")
    return _alpha_table_nb(_as_adj(adj))


# ------------------------------------------------------- alpha of given masks


def _popcount(x):
    return bin(x).count("1")


def alpha_of_mask(adj, mask):
    """Branch-and-bound independence number of the subgraph induced by ``mask``.

    Pure Python on Python ints, so it also serves graphs wider than 62 bits.
    """
    adj = [int(a) for a in adj]
    best = 0
    stack = [(int(mask), 0)]
    while stack:
        s, size = stack.pop()
        if size + _popcount(s) <= best:
            continue
        if s == 0:
            best = size
            continue
        lo_v, lo_d, hi_v, hi_d = -1, 1 << 30, -1, -1
        t = s
        while t:
            low = t & -t
            v = low.bit_length() - 1
            d = _popcount(adj[v] & s)
            if d < lo_d:
                lo_v, lo_d = v, d
            if d > hi_d:
                hi_v, hi_d = v, d
            t ^= low
        if lo_d <= 1:
            # a vertex of degree <= 1 lies in some maximum independent set
            stack.append((s & ~(adj[lo_v] | (1 << lo_v)), size + 1))
            continue
        v = hi_v
        stack.append((s & ~(1 << v), size))
        stack.append((s & ~(adj[v] | (1 << v)), size + 1))
    return best


def alpha_of_masks_numpy(adj, masks):
    adj = _as_adj(adj)
    masks = np.asarray(masks, dtype=np.int64)
    if adj.shape[0] <= TABLE_LIMIT:
        return alpha_table_numpy(adj)[masks]
    return np.array([alpha_of_mask(adj, m) for m in masks.tolist()], dtype=np.int8)


@njit(cache=True)
def _popcount_nb(x):
    c = 0
    while x:
        x &= x - 1
        c += 1
    return c


@njit(cache=True)
def _alpha_of_masks_nb(adj, masks):
    n = adj.shape[0]
    out = np.zeros(masks.shape[0], dtype=np.int8)
    stack_s = np.zeros(2 * n + 4, dtype=np.int64)
    stack_c = np.zeros(2 * n + 4, dtype=np.int64)
    one = np.int64(1)
    for i in range(masks.shape[0]):
        best = 0
        top = 0
        stack_s[0] = masks[i]
        stack_c[0] = 0
        top = 1
        while top > 0:
            top -= 1
            s = stack_s[top]
            size = stack_c[top]
            if size + _popcount_nb(s) <= best:
                continue
            if s == 0:
                best = size
                continue
            lo_v = -1
            lo_d = n + 1
            hi_v = -1
            hi_d = -1
            for v in range(n):
                if (s >> v) & 1:
                    d = _popcount_nb(adj[v] & s)
                    if d < lo_d:
                        lo_v = v
                        lo_d = d
                    if d > hi_d:
                        hi_v = v
                        hi_d = d
            if lo_d <= 1:
                stack_s[top] = s & ~(adj[lo_v] | (one << lo_v))
                stack_c[top] = size + 1
                top += 1
                continue
            stack_s[top] = s & ~(one << hi_v)
            stack_c[top] = size
            top += 1
            stack_s[top] = s & ~(adj[hi_v] | (one << hi_v))
            stack_c[top] = size + 1
            top += 1
        out[i] = best
    return out


def alpha_of_masks_numba(adj, masks):
    if _alpha_of_masks_nb is None:
        raise RuntimeError("numba backend unavailable")
    return _alpha_of_masks_nb(_as_adj(adj), np.ascontiguousarray(masks, dtype=np.int64))


# ---------------------------------------------------------------- GF(2) rank


def gf2_rank_numpy(rows):
    """Rank over GF(2) of a bit-packed matrix (``uint64`` array, rows x words)."""
    m = np.array(rows, dtype=np.uint64, copy=True)
    if m.ndim != 2 or m.shape[0] == 0:
        return 0
    rank = 0
    nrows, nwords = m.shape
    for w in range(nwords):
        for b in range(64):
            if rank == nrows:
                return rank
            bit = np.uint64(1) << np.uint64(b)
            col = (m[rank:, w] & bit) != 0
            hits = np.flatnonzero(col)
            if hits.size == 0:
                continue
            p = rank + hits[0]
            if p != rank:
                m[[rank, p]] = m[[p, rank]]
            below = rank + 1 + np.flatnonzero((m[rank + 1 :, w] & bit) != 0)
            if below.size:
                m[below] ^= m[rank]
            rank += 1
    return rank


@njit(cache=True)
def _gf2_rank_nb(m):
    nrows, nwords = m.shape
    rank = 0
    one = np.uint64(1)
    for w in range(nwords):
        for b in range(64):
            if rank == nrows:
                return rank
            bit = one << np.uint64(b)
            p = -1
            for r in range(rank, nrows):
                if m[r, w] & bit:
                    p = r
                    break
            if p < 0:
                continue
            if p != rank:
                for j in range(nwords):
                    tmp = m[p, j]
                    m[p, j] = m[rank, j]
                    m[rank, j] = tmp
            for r in range(rank + 1, nrows):
                if m[r, w] & bit:
                    for j in range(w, nwords):
                        m[r, j] ^= m[rank, j]
            rank += 1
    return rank


def gf2_rank_numba(rows):
    if _gf2_rank_nb is None:
        raise RuntimeError("numba backend unavailable")
    m = np.array(rows, dtype=np.uint64, copy=True)
    if m.ndim != 2 or m.shape[0] == 0:
        return 0
    return int(_gf2_rank_nb(m))


# ------------------------------------------------------------ public dispatch

if HAVE_NUMBA:
    alpha_table = alpha_table_numba
    alpha_of_masks = alpha_of_masks_numba
    gf2_rank = gf2_rank_numba
else:
    alpha_table = alpha_table_numpy
    alpha_of_masks = alpha_of_masks_numpy
    gf2_rank = gf2_rank_numpy
