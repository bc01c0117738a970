# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled versions of the hot loops; see ``_pykernels`` for the reference.

All arithmetic is modulo a word-sized ``M < 2**63``; products go through
128-bit intermediates so no reduction is ever skipped.
"""

from libc.stdint cimport uint64_t
from libc.stdlib cimport free, malloc

cdef extern from *:
    """
    static inline unsigned long long pv_mulmod(unsigned long long a,
                                               unsigned long long b,
                                               unsigned long long m) {
        return (unsigned long long)(((unsigned __int128)a * b) % m);
    }
    """
    uint64_t pv_mulmod(uint64_t a, uint64_t b, uint64_t m) nogil


cdef inline uint64_t horner(const uint64_t* c, Py_ssize_t n, uint64_t x, uint64_t M) noexcept nogil:
    cdef uint64_t acc = 0
    cdef Py_ssize_t i
    for i in range(n - 1, -1, -1):
        acc = pv_mulmod(acc, x, M) + c[i]
        if acc >= M:
            acc -= M
    return acc


cdef uint64_t* load(coeffs, uint64_t M) except NULL:
    cdef Py_ssize_t n = len(coeffs), i
    cdef uint64_t* c = <uint64_t*> malloc((n if n else 1) * sizeof(uint64_t))
    if c == NULL:
        raise MemoryError()
    for i in range(n):
        c[i] = <uint64_t>(coeffs[i] % M)
    return c


def valuation_scan(coeffs, p, cap, start, count):
    cdef uint64_t P = p
    cdef int K = cap
    cdef uint64_t M = p**cap
    cdef Py_ssize_t n = len(coeffs), i, N = count
    cdef uint64_t x = start % (p**cap)
    cdef uint64_t r
    cdef int v
    cdef uint64_t* c = load(coeffs, M)
    out = [0] * N
    try:
        for i in range(N):
            r = horner(c, n, x, M)
            if r == 0:
                v = K
            else:
                v = 0
                while r % P == 0:
                    r //= P
                    v += 1
            out[i] = v
            x += 1
            if x == M:
                x = 0
    finally:
        free(c)
    return out


def lift_level(coeffs, p, j, nodes):
    cdef uint64_t P = p
    cdef uint64_t step = p**j
    cdef uint64_t M = p**(j + 1)
    cdef Py_ssize_t n = len(coeffs)
    cdef uint64_t a, b, t
    cdef uint64_t* c = load(coeffs, M)
    out = []
    try:
        for node in nodes:
            a = node
            for t in range(P):
                b = a + t * step
                if horner(c, n, b, M) == 0:
                    out.append(b)
    finally:
        free(c)
    out.sort()
    return out
