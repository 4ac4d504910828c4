# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled scan of matrix indices for zeros of ``XAX - AXA``."""

import numpy as np


cdef Py_ssize_t _scan(const int[::1] add, const int[::1] mul, Py_ssize_t q,
                      int a11, int a12, int a21, int a22,
                      Py_ssize_t start, Py_ssize_t stop, long long[::1] out) noexcept nogil:
    cdef Py_ssize_t idx, n = 0, rest
    cdef int x, y, z, w
    cdef int u1, u2, u3, u4, v1, v2, v3, v4
    for idx in range(start, stop):
        w = idx % q
        rest = idx // q
        z = rest % q
        rest = rest // q
        y = rest % q
        x = rest // q
        # XA and AX
        u1 = add[mul[x * q + a11] * q + mul[y * q + a21]]
        u2 = add[mul[x * q + a12] * q + mul[y * q + a22]]
        v1 = add[mul[a11 * q + x] * q + mul[a12 * q + z]]
        v2 = add[mul[a11 * q + y] * q + mul[a12 * q + w]]
        if add[mul[u1 * q + x] * q + mul[u2 * q + z]] != add[mul[v1 * q + a11] * q + mul[v2 * q + a21]]:
            continue
        if add[mul[u1 * q + y] * q + mul[u2 * q + w]] != add[mul[v1 * q + a12] * q + mul[v2 * q + a22]]:
            continue
        u3 = add[mul[z * q + a11] * q + mul[w * q + a21]]
        u4 = add[mul[z * q + a12] * q + mul[w * q + a22]]
        v3 = add[mul[a21 * q + x] * q + mul[a22 * q + z]]
        v4 = add[mul[a21 * q + y] * q + mul[a22 * q + w]]
        if add[mul[u3 * q + x] * q + mul[u4 * q + z]] != add[mul[v3 * q + a11] * q + mul[v4 * q + a21]]:
            continue
        if add[mul[u3 * q + y] * q + mul[u4 * q + w]] != add[mul[v3 * q + a12] * q + mul[v4 * q + a22]]:
            continue
        out[n] = idx
        n += 1
    return n


def scan_range(add, mul, Py_ssize_t q, int a11, int a12, int a21, int a22,
               Py_ssize_t start, Py_ssize_t stop):
    """Return the indices in ``[start, stop)`` whose matrix solves ``XAX == AXA``."""
    cdef const int[::1] add_v = np.ascontiguousarray(add, dtype=np.int32).ravel()
    cdef const int[::1] mul_v = np.ascontiguousarray(mul, dtype=np.int32).ravel()
    buf = np.empty(max(stop - start, 0), dtype=np.int64)
    cdef long long[::1] out = buf
    cdef Py_ssize_t n
    with nogil:
        n = _scan(add_v, mul_v, q, a11, a12, a21, a22, start, stop, out)
    return buf[:n].tolist()
