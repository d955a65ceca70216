"""Reference kernels in numpy; used when the compiled core is unavailable.

Every function here has a twin with the same signature in ``_ckernels.pyx``.
"""
import numpy as np


def sieve_segment(lo, hi, base):
    """Primes in ``[lo, hi)``; ``base`` must hold every prime <= sqrt(hi - 1)."""
    lo = max(lo, 2)
    if hi <= lo:
        return np.empty(0, dtype=np.int64)
    mark = np.ones(hi - lo, dtype=bool)
    for p in base:
        p = int(p)
        if p * p >= hi:
            break
        start = max(p * p, -(-lo // p) * p)
        mark[start - lo::p] = False
    return np.flatnonzero(mark).astype(np.int64) + lo


def _root_mask(x, k):
    # exact for 0 < x < 2**53: a true k-th power rounds onto its root
    xf = x.astype(np.float64)
    if k == 2:
        r = np.rint(np.sqrt(xf))
    elif k == 3:
        r = np.rint(np.cbrt(xf))
    else:
        r = np.rint(xf ** (1.0 / k))
    r = r.astype(np.int64)
    return r ** k == x


def power_edges(B, n, k, allow_zero=False, allow_negative=False):
    """Pairs ``a < b <= B`` with ``a*b + n`` a k-th power, as two int64 arrays.

    Caller guarantees ``B*B + |n| < 2**53``.
    """
    ia, ib = [], []
    for a in range(1, B):
        b = np.arange(a + 1, B + 1, dtype=np.int64)
        x = a * b + n
        ok = np.zeros(x.shape, dtype=bool)
        pos = x > 0
        if pos.any():
            ok[pos] = _root_mask(x[pos], k)
        if allow_zero:
            ok |= x == 0
        if allow_negative and k % 2 == 1:
            neg = x < 0
            if neg.any():
                ok[neg] = _root_mask(-x[neg], k)
        hit = b[ok]
        if hit.size:
            ia.append(np.full(hit.size, a, dtype=np.int64))
            ib.append(hit)
    if not ia:
        empty = np.empty(0, dtype=np.int64)
        return empty, empty.copy()
    return np.concatenate(ia), np.concatenate(ib)


def char_exponent_counts(table, A, B, n, p, k):
    """Histogram of character exponents of ``a*b + n`` over ``A x B`` mod p.

    ``table[x]`` is the exponent of x (``-1`` for ``x == 0``); zero values
    are dropped from the histogram.
    """
    A = np.asarray(A, dtype=np.int64)
    B = np.asarray(B, dtype=np.int64)
    vals = (np.multiply.outer(A, B) + n) % p
    e = np.asarray(table, dtype=np.int64)[vals].ravel()
    return np.bincount(e[e >= 0], minlength=k).astype(np.int64)
