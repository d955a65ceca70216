# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled twins of the kernels in ``_pykernels``."""
import numpy as np
cimport numpy as cnp
from libc.math cimport sqrt, cbrt, pow, llround

cnp.import_array()


def sieve_segment(long long lo, long long hi, cnp.int64_t[:] base):
    cdef long long p, start, j, i
    cdef Py_ssize_t idx, size, count = 0
    if lo < 2:
        lo = 2
    if hi <= lo:
        return np.empty(0, dtype=np.int64)
    size = hi - lo
    mark_arr = np.ones(size, dtype=np.uint8)
    cdef unsigned char[:] mark = mark_arr
    for idx in range(base.shape[0]):
        p = base[idx]
        if p * p >= hi:
            break
        start = ((lo + p - 1) // p) * p
        if start < p * p:
            start = p * p
        j = start - lo
        while j < size:
            mark[j] = 0
            j += p
    for i in range(size):
        count += mark[i]
    out_arr = np.empty(count, dtype=np.int64)
    cdef cnp.int64_t[:] out = out_arr
    count = 0
    for i in range(size):
        if mark[i]:
            out[count] = lo + i
            count += 1
    return out_arr


cdef inline long long _ipow(long long r, int k) nogil:
    cdef long long acc = 1
    cdef int i
    for i in range(k):
        acc *= r
    return acc


cdef inline bint _is_power(long long x, int k) nogil:
    cdef long long r
    if k == 2:
        r = llround(sqrt(<double>x))
    elif k == 3:
        r = llround(cbrt(<double>x))
    else:
        r = llround(pow(<double>x, 1.0 / k))
    return _ipow(r, k) == x


def power_edges(long long B, long long n, int k, bint allow_zero=False,
                bint allow_negative=False):
    cdef long long a, b, x, r, rk, nxt
    cdef bint hit
    cdef bint neg_ok = allow_negative and (k % 2 == 1)
    ia = []
    ib = []
    for a in range(1, B):
        r = 0
        rk = 0
        nxt = 1
        for b in range(a + 1, B + 1):
            x = a * b + n
            if x > 0:
                # x grows with b, so walk the root upward instead of re-rooting
                if x >= nxt:
                    if r == 0:
                        r = llround(pow(<double>x, 1.0 / k))
                        while _ipow(r, k) > x:
                            r -= 1
                        rk = _ipow(r, k)
                        nxt = _ipow(r + 1, k)
                    while x >= nxt:
                        r += 1
                        rk = nxt
                        nxt = _ipow(r + 1, k)
                hit = x == rk
            elif x == 0:
                hit = allow_zero
            else:
                hit = neg_ok and _is_power(-x, k)
            if hit:
                ia.append(a)
                ib.append(b)
    return np.array(ia, dtype=np.int64), np.array(ib, dtype=np.int64)


def char_exponent_counts(table, A, B, long long n, long long p, int k):
    cdef cnp.int64_t[:] tab = np.ascontiguousarray(table, dtype=np.int64)
    cdef cnp.int64_t[:] av = np.ascontiguousarray(A, dtype=np.int64)
    cdef cnp.int64_t[:] bv = np.ascontiguousarray(B, dtype=np.int64)
    counts_arr = np.zeros(k, dtype=np.int64)
    cdef cnp.int64_t[:] counts = counts_arr
    cdef Py_ssize_t i, j
    cdef long long v, e
    cdef long long nm = ((n % p) + p) % p
    for i in range(av.shape[0]):
        for j in range(bv.shape[0]):
            v = (av[i] * bv[j] + nm) % p
            if v < 0:
                v += p
            e = tab[v]
            if e >= 0:
                counts[e] += 1
    return counts_arr
