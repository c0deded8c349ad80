# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled hot kernels: ordinal / inversion window encoding and LZ76.

Bit-identical to the pure-numpy twin in ``_ref.py`` (same ids, same
counts); the speedup comes from fusing the per-window comparison loops
into a single pass with no temporary arrays.
"""

import numpy as np

cimport numpy as cnp

cnp.import_array()

BACKEND = "cython"

cdef inline void _fill_factorials(long long* fact, int m) nogil:
    cdef int i
    fact[0] = 1
    for i in range(1, m):
        fact[i] = fact[i - 1] * i


def ordinal_encode(const double[::1] x, int m, int tau):
    """Ordinal-pattern ids (Lehmer rank of the rank vector) per window."""
    cdef Py_ssize_t n = x.shape[0] - (<Py_ssize_t>(m - 1)) * tau
    out = np.empty(n, dtype=np.int64)
    cdef long long[::1] o = out
    cdef long long fact[13]
    _fill_factorials(fact, m)
    cdef Py_ssize_t k
    cdef int i, j
    cdef long long code, digit
    cdef double xi
    with nogil:
        for k in range(n):
            code = 0
            for i in range(m - 1):
                xi = x[k + i * tau]
                digit = 0
                for j in range(i + 1, m):
                    digit += <long long>(x[k + j * tau] < xi)
                code += fact[m - 1 - i] * digit
            o[k] = code
    return out


def ordinal_encode_rows(const double[:, ::1] rows):
    """Ordinal-pattern id per row of a C-contiguous (N, m) array."""
    cdef Py_ssize_t n = rows.shape[0]
    cdef int m = <int>rows.shape[1]
    out = np.empty(n, dtype=np.int64)
    cdef long long[::1] o = out
    cdef long long fact[13]
    _fill_factorials(fact, m)
    cdef Py_ssize_t k
    cdef int i, j
    cdef long long code, digit
    cdef double xi
    with nogil:
        for k in range(n):
            code = 0
            for i in range(m - 1):
                xi = rows[k, i]
                digit = 0
                for j in range(i + 1, m):
                    digit += <long long>(rows[k, j] < xi)
                code += fact[m - 1 - i] * digit
            o[k] = code
    return out


def inversion_encode(const double[::1] x, int m, int tau):
    """Bubble-sort swap count (strict inversions) per window."""
    cdef Py_ssize_t n = x.shape[0] - (<Py_ssize_t>(m - 1)) * tau
    out = np.empty(n, dtype=np.int64)
    cdef long long[::1] o = out
    cdef Py_ssize_t k
    cdef int i, j
    cdef long long inv
    cdef double xi
    with nogil:
        for k in range(n):
            inv = 0
            for i in range(m - 1):
                xi = x[k + i * tau]
                for j in range(i + 1, m):
                    inv += <long long>(xi > x[k + j * tau])
            o[k] = inv
    return out


def inversion_encode_rows(const double[:, ::1] rows):
    """Inversion count per row of a C-contiguous (N, m) array."""
    cdef Py_ssize_t n = rows.shape[0]
    cdef int m = <int>rows.shape[1]
    out = np.empty(n, dtype=np.int64)
    cdef long long[::1] o = out
    cdef Py_ssize_t k
    cdef int i, j
    cdef long long inv
    cdef double xi
    with nogil:
        for k in range(n):
            inv = 0
            for i in range(m - 1):
                xi = rows[k, i]
                for j in range(i + 1, m):
                    inv += <long long>(xi > rows[k, j])
            o[k] = inv
    return out


def lz76_phrase_count(const long long[::1] s):
    """Number of phrases in the LZ76 exhaustive parsing (Kaspar-Schuster)."""
    cdef Py_ssize_t n = s.shape[0]
    if n == 0:
        return 0
    if n == 1:
        return 1
    cdef Py_ssize_t c = 1, i = 0, l = 1, k = 1, k_max = 1
    with nogil:
        while True:
            if l + k > n:
                c += 1
                break
            if s[i + k - 1] == s[l + k - 1]:
                k += 1
                continue
            if k > k_max:
                k_max = k
            i += 1
            if i == l:
                c += 1
                l += k_max
                if l + 1 > n:
                    break
                i = 0
                k = 1
                k_max = 1
            else:
                k = 1
    return c
