# cython: boundscheck=False, wraparound=False, cdivision=True, language_level=3
"""Compiled subset-lattice transforms over int64 numerator arrays.

Mirrors ``_reference.py``.  Callers guarantee that no intermediate value
overflows int64 (the selector enforces a conservative magnitude bound
before routing here).
"""

import numpy as np

cimport numpy as cnp

cnp.import_array()


def zeta(cnp.int64_t[::1] values, int n):
    cdef Py_ssize_t size = 1 << n
    cdef cnp.ndarray[cnp.int64_t, ndim=1] out = np.array(values, dtype=np.int64)
    cdef cnp.int64_t[::1] o = out
    cdef Py_ssize_t i, mask, bit
    for i in range(n):
        bit = 1 << i
        for mask in range(size):
            if mask & bit:
                o[mask] += o[mask ^ bit]
    return out


def mobius(cnp.int64_t[::1] values, int n):
    cdef Py_ssize_t size = 1 << n
    cdef cnp.ndarray[cnp.int64_t, ndim=1] out = np.array(values, dtype=np.int64)
    cdef cnp.int64_t[::1] o = out
    cdef Py_ssize_t i, mask, bit
    for i in range(n):
        bit = 1 << i
        for mask in range(size):
            if mask & bit:
                o[mask] -= o[mask ^ bit]
    return out


def supermodular(cnp.int64_t[::1] values, int n, bint strict=False):
    cdef Py_ssize_t size = 1 << n
    cdef Py_ssize_t i, j, mask, bi, bj, both
    cdef cnp.int64_t lhs, rhs
    for i in range(n):
        bi = 1 << i
        for j in range(i + 1, n):
            bj = 1 << j
            both = bi | bj
            for mask in range(size):
                if mask & both:
                    continue
                lhs = values[mask | bi] - values[mask]
                rhs = values[mask | both] - values[mask | bj]
                if lhs > rhs or (strict and lhs == rhs):
                    return False
    return True
