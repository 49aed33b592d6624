# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels: Ryser permanents with 128-bit accumulators and
subset fixed-point counts.

Entries are int64 and the Ryser sum is accumulated in __int128.  The
caller routes matrices whose accumulators could exceed that to the
pure-Python kernels; see ``zeonperm.kernels``.
"""
import numpy as np

from libc.stdint cimport int64_t, int32_t, uint64_t
from libc.stdlib cimport malloc, free


cdef extern from *:
    ctypedef long long int128 "__int128"
    int __builtin_ctzll(unsigned long long) nogil
    int __builtin_popcountll(unsigned long long) nogil


cdef inline object _to_py(int128 v):
    cdef uint64_t lo = <uint64_t>v
    cdef int64_t hi = <int64_t>(v >> 64)
    return (int(hi) << 64) | int(lo)


cdef int128 _ryser(const int64_t[:, ::1] a, const int32_t* ridx, const int32_t* cidx,
                   int k, int64_t* rowsum) noexcept nogil:
    cdef int128 total = 0
    cdef int128 prod
    cdef uint64_t g, gray = 0
    cdef uint64_t limit
    cdef int i, j, c
    if k == 0:
        return 1
    for i in range(k):
        rowsum[i] = 0
    limit = (<uint64_t>1) << k
    g = 1
    while g < limit:
        j = __builtin_ctzll(g)
        gray ^= (<uint64_t>1) << j
        c = cidx[j]
        if (gray >> j) & 1:
            for i in range(k):
                rowsum[i] += a[ridx[i], c]
        else:
            for i in range(k):
                rowsum[i] -= a[ridx[i], c]
        prod = 1
        for i in range(k):
            prod *= rowsum[i]
            if prod == 0:
                break
        if (k - g) & 1:
            total -= prod
        else:
            total += prod
        g += 1
    return total


def permanent(rows):
    cdef int64_t[:, ::1] a = np.ascontiguousarray(rows, dtype=np.int64).reshape(len(rows), len(rows))
    cdef int n = a.shape[0]
    cdef int128 result
    cdef int32_t* idx
    cdef int64_t* rowsum
    cdef int i
    if n == 0:
        return 1
    idx = <int32_t*>malloc(n * sizeof(int32_t))
    rowsum = <int64_t*>malloc(n * sizeof(int64_t))
    try:
        for i in range(n):
            idx[i] = i
        with nogil:
            result = _ryser(a, idx, idx, n, rowsum)
    finally:
        free(idx)
        free(rowsum)
    return _to_py(result)


def zeon_power(rows, subsets, Py_ssize_t r0=0, r1=None):
    """Rows ``r0:r1`` of the subpermanent matrix; releases the GIL."""
    cdef Py_ssize_t m = len(subsets)
    cdef Py_ssize_t stop = m if r1 is None else r1
    cdef int ell = len(subsets[0]) if m else 0
    n = len(rows)
    cdef int64_t[:, ::1] a = np.ascontiguousarray(rows, dtype=np.int64).reshape(n, n)
    cdef int32_t[:, ::1] sub = np.ascontiguousarray(subsets, dtype=np.int32).reshape(m, ell)
    # each 128-bit result is stored as (high signed word, low unsigned word)
    hi_arr = np.zeros((stop - r0, m), dtype=np.int64)
    lo_arr = np.zeros((stop - r0, m), dtype=np.uint64)
    cdef int64_t[:, ::1] hi = hi_arr
    cdef uint64_t[:, ::1] lo = lo_arr
    cdef int64_t* rowsum = <int64_t*>malloc((ell + 1) * sizeof(int64_t))
    cdef Py_ssize_t p, q
    cdef int128 v
    try:
        with nogil:
            for p in range(r0, stop):
                for q in range(m):
                    v = 1 if ell == 0 else _ryser(a, &sub[p, 0], &sub[q, 0], ell, rowsum)
                    hi[p - r0, q] = <int64_t>(v >> 64)
                    lo[p - r0, q] = <uint64_t>v
    finally:
        free(rowsum)
    return [[(int(h) << 64) | int(l) for h, l in zip(hr, lr)]
            for hr, lr in zip(hi_arr.tolist(), lo_arr.tolist())]


def fixed_subset_counts(images):
    cdef int n = len(images)
    cdef int i
    cdef uint64_t mask, low, m, size
    cdef uint64_t* img
    cdef uint64_t bit_img[64]
    if n > 30:
        raise ValueError("subset enumeration limited to n <= 30")
    counts = np.zeros(n + 1, dtype=np.int64)
    cdef int64_t[::1] cv = counts
    for i in range(n):
        bit_img[i] = (<uint64_t>1) << <int>images[i]
    size = (<uint64_t>1) << n
    img = <uint64_t*>malloc(size * sizeof(uint64_t))
    try:
        with nogil:
            img[0] = 0
            cv[0] = 1
            mask = 1
            while mask < size:
                low = mask & (~mask + 1)
                m = img[mask ^ low] | bit_img[__builtin_ctzll(low)]
                img[mask] = m
                if m == mask:
                    cv[__builtin_popcountll(mask)] += 1
                mask += 1
    finally:
        free(img)
    return [int(c) for c in counts]
