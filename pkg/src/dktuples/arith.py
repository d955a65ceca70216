"""Exact integer primitives: k-th roots, primes, totient, primitive roots."""
from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from . import _kernels
from .errors import InvalidParameter

SIEVE_CAP = 1 << 40
SEGMENT = 1 << 20

# deterministic Miller-Rabin witnesses, valid below 3.3 * 10**24
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)
_SQUARES_MOD64 = sum(1 << r for r in {i * i % 64 for i in range(32)})
_SMALL_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47)


def _float_root(x: int, k: int) -> int:
    """Floating estimate of x**(1/k) for any size of x (not exact)."""
    bits = x.bit_length()
    if bits <= 1000:
        return int(float(x) ** (1.0 / k))
    # scale x down by a multiple of k bits so the mantissa fits a double
    shift = (bits - 1000) // k * k
    return int(float(x >> shift) ** (1.0 / k)) << (shift // k)


def ikroot(x: int, k: int) -> int:
    """Return the integer k-th root: the r with ``r**k <= x < (r+1)**k``.

    A floating estimate seeds a Newton iteration run in exact integer
    arithmetic; the result is confirmed by multiplication.

    Raises:
        InvalidParameter: if ``k < 1`` or ``x < 0``.
    """
    x = int(x)
    if k < 1:
        raise InvalidParameter(f"root index must be >= 1, got {k}")
    if x < 0:
        raise InvalidParameter("ikroot needs a nonnegative argument")
    if k == 1 or x < 2:
        return x
    if k == 2:
        return math.isqrt(x)
    if k >= x.bit_length():
        return 1
    # overshoot the estimate so Newton descends monotonically onto the floor
    r = _float_root(x, k)
    r += (r >> 30) + 2
    while True:
        y = ((k - 1) * r + x // r ** (k - 1)) // k
        if y >= r:
            break
        r = y
    while r ** k > x:
        r -= 1
    while (r + 1) ** k <= x:
        r += 1
    return r


def is_kth_power(x: int, k: int) -> int | None:
    """Return r >= 1 with ``r**k == x``, or None.

    Nonpositive x always gives None, also for odd k.
    """
    if x <= 0:
        return None
    if k == 1:
        return int(x)
    if k == 2:
        # quadratic residues mod 64 reject most non-squares cheaply
        if not (_SQUARES_MOD64 >> (x & 63)) & 1:
            return None
    r = ikroot(x, k)
    return r if r ** k == x else None


def is_prime(n: int) -> bool:
    """Miller-Rabin primality test, deterministic below 3.3e24."""
    if n < 2:
        return False
    for p in _SMALL_PRIMES:
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        y = pow(a, d, n)
        if y == 1 or y == n - 1:
            continue
        for _ in range(s - 1):
            y = y * y % n
            if y == n - 1:
                break
        else:
            return False
    return True


@dataclass(frozen=True)
class PrimeTable:
    """Ascending primes up to ``limit`` (optionally restricted to a residue class).

    ``modulus == 1`` means no restriction.
    """

    limit: int
    primes: np.ndarray = field(repr=False)
    modulus: int = 1
    residue: int = 0

    def __len__(self):
        return len(self.primes)

    def __iter__(self):
        return (int(p) for p in self.primes)

    def __contains__(self, p):
        i = np.searchsorted(self.primes, p)
        return bool(i < len(self.primes) and self.primes[i] == p)

    def tolist(self) -> list[int]:
        return [int(p) for p in self.primes]


def _small_primes(limit):
    if limit < 2:
        return np.empty(0, dtype=np.int64)
    mark = np.ones(limit + 1, dtype=bool)
    mark[:2] = False
    for p in range(2, math.isqrt(limit) + 1):
        if mark[p]:
            mark[p * p::p] = False
    return np.flatnonzero(mark).astype(np.int64)


def iter_prime_segments(limit: int, segment: int = SEGMENT):
    """Yield ascending int64 arrays that together hold every prime <= limit."""
    if limit > SIEVE_CAP:
        raise InvalidParameter(f"prime limit {limit} exceeds the 2**40 cap")
    if limit < 2:
        return
    base = _small_primes(math.isqrt(limit))
    lo = 2
    while lo <= limit:
        hi = min(lo + segment, limit + 1)
        yield _kernels.sieve_segment(lo, hi, base)
        lo = hi


def _check_class(k, a):
    if k < 1:
        raise InvalidParameter(f"modulus must be positive, got {k}")
    if k > 1 and math.gcd(a, k) != 1:
        raise InvalidParameter(f"gcd({a}, {k}) != 1")


def _class_segments(Q, k, a):
    _check_class(k, a)
    for seg in iter_prime_segments(Q):
        if k > 1:
            seg = seg[seg % k == a % k]
        yield seg


def primes_upto(limit: int) -> PrimeTable:
    segs = list(iter_prime_segments(limit))
    arr = np.concatenate(segs) if segs else np.empty(0, dtype=np.int64)
    return PrimeTable(limit, arr)


def primes_in_ap(Q: int, k: int, a: int) -> PrimeTable:
    """Primes ``p <= Q`` with ``p = a (mod k)``; ``k == 1`` means all primes."""
    segs = list(_class_segments(Q, k, a))
    arr = np.concatenate(segs) if segs else np.empty(0, dtype=np.int64)
    return PrimeTable(Q, arr, k, a % k if k > 1 else 0)


def theta(Q: int, k: int, a: int) -> float:
    """Chebyshev sum of log p over primes p <= Q in the class a mod k."""
    partials = [math.fsum(np.log(seg.astype(np.float64)))
                for seg in _class_segments(Q, k, a) if seg.size]
    return math.fsum(partials)


def factorize(n: int) -> dict[int, int]:
    """Prime factorization by trial division (small inputs only)."""
    if n < 1:
        raise InvalidParameter(f"cannot factor {n}")
    out: dict[int, int] = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def totient(k: int) -> int:
    if k < 1:
        raise InvalidParameter(f"totient needs k >= 1, got {k}")
    phi = k
    for p in factorize(k):
        phi -= phi // p
    return phi


def primitive_root(p: int) -> int:
    """Smallest positive primitive root modulo the prime p (1 for p = 2)."""
    if not is_prime(p):
        raise InvalidParameter(f"{p} is not prime")
    if p == 2:
        return 1
    cofactors = [(p - 1) // q for q in factorize(p - 1)]
    g = 2
    while any(pow(g, c, p) == 1 for c in cofactors):
        g += 1
    return g
