# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels for the two loops that dominate runtime:

  * breadth-first closure of a permutation generating set;
  * orbit partition of a finite action given generator tables.

Interface mirrors mackey.kernels.pyref exactly.
"""

import numpy as np

cimport numpy as cnp
from libc.stdint cimport int32_t, int64_t, uint64_t


cdef uint64_t _row_hash(const int32_t* row, int d) nogil:
    cdef uint64_t h = 14695981039346656037ULL
    cdef int i
    for i in range(d):
        h ^= <uint64_t> (row[i] + 1)
        h *= 1099511628211ULL
    return h


def closure(object gens_in, int bound):
    """All elements generated by the given permutation rows.

    gens_in: (m, d) int32 array of permutations of 0..d-1.
    Returns an (N, d) int32 array starting with the identity.
    Raises ValueError when N would exceed bound.
    """
    cdef cnp.ndarray[int32_t, ndim=2] gens = np.ascontiguousarray(
        gens_in, dtype=np.int32
    )
    cdef int m = gens.shape[0]
    cdef int d = gens.shape[1]
    cdef long cap = 4
    while cap < 4 * (bound + 2):
        cap <<= 1
    cdef cnp.ndarray[int64_t, ndim=1] slots = np.full(cap, -1, dtype=np.int64)
    cdef cnp.ndarray[int32_t, ndim=2] table = np.empty((bound + 1, max(d, 1)), dtype=np.int32)
    cdef int64_t* slot = &slots[0]
    cdef int32_t* tab = &table[0, 0]
    cdef int32_t* gp = NULL
    if m:
        gp = &gens[0, 0]
    cdef long mask = cap - 1
    cdef long n = 0, head = 0
    cdef long pos, idx
    cdef uint64_t h
    cdef int i, g, same
    cdef int32_t tmp[1024]
    if d > 1024:
        raise ValueError("degree too large for compiled closure")

    # identity first
    for i in range(d):
        tab[i] = i
    h = _row_hash(tab, d)
    pos = h & mask
    slot[pos] = 0
    n = 1

    while head < n:
        for g in range(m):
            for i in range(d):
                tmp[i] = tab[head * d + gp[g * d + i]]
            h = _row_hash(tmp, d)
            pos = h & mask
            while True:
                idx = slot[pos]
                if idx == -1:
                    if n >= bound:
                        raise ValueError("order bound exceeded")
                    for i in range(d):
                        tab[n * d + i] = tmp[i]
                    slot[pos] = n
                    n += 1
                    break
                same = 1
                for i in range(d):
                    if tab[idx * d + i] != tmp[i]:
                        same = 0
                        break
                if same:
                    break
                pos = (pos + 1) & mask
        head += 1
    return table[:n].copy()


def orbit_labels(object tables_in):
    """Orbit partition of points 0..n-1 under generator image tables.

    tables_in: (g, n) int32 array; tables_in[k][x] is the image of x.
    Returns an (n,) int32 array mapping each point to the smallest
    point in its orbit.
    """
    cdef cnp.ndarray[int32_t, ndim=2] tables = np.ascontiguousarray(
        tables_in, dtype=np.int32
    )
    cdef long g = tables.shape[0]
    cdef long n = tables.shape[1]
    cdef cnp.ndarray[int32_t, ndim=1] parent = np.arange(n, dtype=np.int32)
    cdef int32_t* par = NULL
    cdef int32_t* tp = NULL
    if n == 0:
        return parent
    par = &parent[0]
    if g:
        tp = &tables[0, 0]
    cdef long k, x
    cdef int32_t a, b, ra, rb
    with nogil:
        for k in range(g):
            for x in range(n):
                a = <int32_t> x
                b = tp[k * n + x]
                while par[a] != a:
                    par[a] = par[par[a]]
                    a = par[a]
                while par[b] != b:
                    par[b] = par[par[b]]
                    b = par[b]
                if a < b:
                    par[b] = a
                elif b < a:
                    par[a] = b
        for x in range(n):
            a = <int32_t> x
            while par[a] != a:
                a = par[a]
            b = <int32_t> x
            while par[b] != b:
                rb = par[b]
                par[b] = a
                b = rb
    return parent
