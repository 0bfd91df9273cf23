"""Compiled inner loops (numba).

Partitions are rows of a zero-padded ``int8`` matrix in descending
lexicographic order; a row's index is recovered by :func:`rank_row`, so no
hash map is needed to resolve neighbours.
"""

from __future__ import annotations

import heapq

import numpy as np
from numba import njit, prange

INT64_MAX = np.iinfo(np.int64).max


def rank_prefix_table(n: int) -> np.ndarray:
    """``R[m, k] = sum_{j=1..k} P(m - j, j)`` (partitions of m with first part <= k
    counted by first part); ``P`` counts partitions with parts bounded."""
    P = np.zeros((n + 1, n + 1), dtype=np.int64)
    P[0, :] = 1
    for m in range(1, n + 1):
        for k in range(1, n + 1):
            P[m, k] = P[m, k - 1] + (P[m - k, k] if k <= m else 0)
    R = np.zeros((n + 1, n + 1), dtype=np.int64)
    for m in range(n + 1):
        for k in range(1, n + 1):
            R[m, k] = R[m, k - 1] + (P[m - k, k] if k <= m else 0)
    return R


@njit(cache=True)
def enumerate_rows(n, count):
    rows = np.zeros((count, n), dtype=np.int8)
    lens = np.zeros(count, dtype=np.int32)
    a = np.zeros(n + 1, dtype=np.int64)
    a[0] = n
    length = 1
    idx = 0
    while True:
        for t in range(length):
            rows[idx, t] = a[t]
        lens[idx] = length
        idx += 1
        ones = 0
        while length > 0 and a[length - 1] == 1:
            length -= 1
            ones += 1
        if length == 0:
            break
        k = a[length - 1] - 1
        rest = ones + 1
        a[length - 1] = k
        while rest > k:
            a[length] = k
            length += 1
            rest -= k
        if rest > 0:
            a[length] = rest
            length += 1
    return rows, lens


@njit(cache=True)
def rank_row(parts, length, n, R):
    rank = 0
    remaining = n
    bound = n
    for t in range(length):
        p = parts[t]
        top = bound if bound < remaining else remaining
        rank += R[remaining, top] - R[remaining, p]
        remaining -= p
        bound = p
    return rank


@njit(cache=True)
def _row_neighbors(row, length, n, R, scratch, out):
    """Write neighbour ranks of one partition into ``out``; return how many."""
    m = 0
    # distinct values, descending
    for s in range(length):
        v = row[s]
        if s + 1 < length and row[s + 1] == v:
            continue
        last_v = s
        mult_v = 0
        for q in range(length):
            if row[q] == v:
                mult_v += 1
        for s2 in range(length + 1):
            if s2 < length:
                w = row[s2]
                if s2 > 0 and row[s2 - 1] == w:
                    continue
                first_w = s2
            else:
                w = 0
                first_w = length
            if w == v - 1:
                continue
            if w == v and mult_v < 2:
                continue
            for q in range(length):
                scratch[q] = row[q]
            new_len = length
            if w == 0:
                scratch[length] = 1
                new_len = length + 1
            else:
                scratch[first_w] += 1
            scratch[last_v] -= 1
            if scratch[last_v] == 0:
                # only possible for v == 1, which sits at the tail
                for q in range(last_v, new_len - 1):
                    scratch[q] = scratch[q + 1]
                new_len -= 1
            out[m] = rank_row(scratch, new_len, n, R)
            m += 1
    return m


@njit(cache=True)
def adjacency_csr(rows, lens, n, R):
    count = rows.shape[0]
    max_deg = 0
    deg = np.zeros(count, dtype=np.int64)
    scratch = np.zeros(n + 2, dtype=np.int64)
    buf = np.zeros((n + 1) * (n + 1), dtype=np.int64)
    for i in range(count):
        d = _row_neighbors(rows[i], lens[i], n, R, scratch, buf)
        deg[i] = d
        if d > max_deg:
            max_deg = d
    indptr = np.zeros(count + 1, dtype=np.int64)
    for i in range(count):
        indptr[i + 1] = indptr[i] + deg[i]
    indices = np.empty(indptr[count], dtype=np.int32)
    for i in range(count):
        d = _row_neighbors(rows[i], lens[i], n, R, scratch, buf)
        seg = np.sort(buf[:d])
        for t in range(d):
            indices[indptr[i] + t] = seg[t]
    return indptr, indices


@njit(cache=True)
def degeneracy_peel(indptr, indices):
    """Min-degree peeling; ties go to the smallest index."""
    count = indptr.shape[0] - 1
    deg = np.empty(count, dtype=np.int64)
    heap = [np.int64(0)]
    heap.pop()
    for v in range(count):
        deg[v] = indptr[v + 1] - indptr[v]
        heap.append(deg[v] * count + v)
    heapq.heapify(heap)
    removed = np.zeros(count, dtype=np.bool_)
    order = np.empty(count, dtype=np.int32)
    k = 0
    while k < count:
        key = heapq.heappop(heap)
        v = key % count
        d = key // count
        if removed[v] or d != deg[v]:
            continue
        removed[v] = True
        order[k] = v
        k += 1
        for t in range(indptr[v], indptr[v + 1]):
            u = indices[t]
            if not removed[u]:
                deg[u] -= 1
                heapq.heappush(heap, deg[u] * count + u)
    return order


@njit(cache=True)
def orient(indptr, indices, order):
    """Keep only arcs pointing later in ``order``; rows stay sorted by index."""
    count = indptr.shape[0] - 1
    pos = np.empty(count, dtype=np.int64)
    for k in range(count):
        pos[order[k]] = k
    optr = np.zeros(count + 1, dtype=np.int64)
    for v in range(count):
        c = 0
        for t in range(indptr[v], indptr[v + 1]):
            if pos[indices[t]] > pos[v]:
                c += 1
        optr[v + 1] = optr[v] + c
    oidx = np.empty(optr[count], dtype=np.int32)
    for v in range(count):
        c = optr[v]
        for t in range(indptr[v], indptr[v + 1]):
            if pos[indices[t]] > pos[v]:
                oidx[c] = indices[t]
                c += 1
    return optr, oidx


@njit(cache=True)
def _count_from_root(root, optr, oidx, max_size, counts, buf, lens, cursor):
    """Count cliques whose earliest vertex (in the orientation) is ``root``.

    ``counts[k]`` accumulates cliques of size ``k + 1``.  Returns False on
    counter overflow.
    """
    counts[0] += 1
    k0 = optr[root + 1] - optr[root]
    if max_size < 2 or k0 == 0:
        return True
    for t in range(k0):
        buf[0, t] = oidx[optr[root] + t]
    if counts[1] > INT64_MAX - k0:
        return False
    counts[1] += k0
    if max_size < 3:
        return True
    lens[0] = k0
    cursor[0] = 0
    depth = 0
    while depth >= 0:
        if cursor[depth] >= lens[depth]:
            depth -= 1
            continue
        u = buf[depth, cursor[depth]]
        cursor[depth] += 1
        # clique so far: root + depth chosen + u  -> size depth + 2
        a_end = lens[depth]
        b = optr[u]
        b_end = optr[u + 1]
        a = 0
        m = 0
        while a < a_end and b < b_end:
            x = buf[depth, a]
            y = oidx[b]
            if x < y:
                a += 1
            elif x > y:
                b += 1
            else:
                buf[depth + 1, m] = x
                m += 1
                a += 1
                b += 1
        if m == 0:
            continue
        size = depth + 3
        if counts[size - 1] > INT64_MAX - m:
            return False
        counts[size - 1] += m
        if size < max_size:
            depth += 1
            lens[depth] = m
            cursor[depth] = 0
    return True


@njit(cache=True, parallel=True)
def count_cliques(optr, oidx, max_size, n_chunks):
    """Per-size clique counts; each chunk of roots owns its counters and scratch."""
    count = optr.shape[0] - 1
    width = 1
    for v in range(count):
        d = optr[v + 1] - optr[v]
        if d > width:
            width = d
    depth_cap = width + 2
    if max_size < depth_cap:
        depth_cap = max_size
    size_cap = width + 1
    if max_size < size_cap:
        size_cap = max_size
    partial = np.zeros((n_chunks, size_cap + 1), dtype=np.int64)
    ok = np.ones(n_chunks, dtype=np.bool_)
    for c in prange(n_chunks):
        buf = np.empty((depth_cap + 1, width), dtype=np.int32)
        lens = np.zeros(depth_cap + 1, dtype=np.int64)
        cursor = np.zeros(depth_cap + 1, dtype=np.int64)
        lo = c * count // n_chunks
        hi = (c + 1) * count // n_chunks
        for root in range(lo, hi):
            if not _count_from_root(root, optr, oidx, max_size, partial[c], buf, lens, cursor):
                ok[c] = False
                break
    return partial, ok
