"""Rational approximations to alpha = (a_1/a_2)^(1/k) coming from a tuple.

Each element x = a_i (i >= 3) solves a_1 x + n = u^k, a_2 x + n = v^k, and
u/v is then a good approximation to alpha. The checks below decide the two
approximation inequalities without floating point.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .arith import factorize, ikroot, is_kth_power
from .errors import InvalidParameter
from .tuples import TupleRecord, encode_int, verify

# below this relative gap a comparison is reported unresolved
TIE_BITS = 256
START_PREC = 64


@dataclass(frozen=True)
class SolutionPair:
    index: int
    x: int
    u: int
    v: int

    def to_json(self) -> dict:
        return {"i": self.index, "x": encode_int(self.x),
                "u": encode_int(self.u), "v": encode_int(self.v)}


def solution_pairs(t: TupleRecord) -> list[SolutionPair]:
    """(u_i, v_i) for every element a_i with i >= 3 (1-based)."""
    if not verify(t).ok:
        raise InvalidParameter(f"{t.elements} lacks property D_{t.k}({t.n})")
    a1, a2 = t.elements[:2]
    out = []
    for i, x in enumerate(t.elements[2:], start=3):
        u = is_kth_power(a1 * x + t.n, t.k)
        v = is_kth_power(a2 * x + t.n, t.k)
        out.append(SolutionPair(i, x, u, v))
    return out


@dataclass(frozen=True)
class RootAlpha:
    """alpha = (a1/a2)^(1/k) = (u_red/w_red)^(1/degree), with u_red/w_red not a proper power."""

    a1: int
    a2: int
    k: int
    u_red: int
    w_red: int
    degree: int
    height: float

    @property
    def minimal_polynomial(self) -> tuple[int, int, int]:
        """(w, r, u) standing for w x^r - u."""
        return self.w_red, self.degree, self.u_red

    def to_json(self) -> dict:
        return {"a1": encode_int(self.a1), "a2": encode_int(self.a2), "k": self.k,
                "u_red": encode_int(self.u_red), "w_red": encode_int(self.w_red),
                "degree": self.degree, "height": self.height}


def _divisors(k):
    ds = [1]
    for p, e in factorize(k).items():
        ds = [d * p ** i for d in ds for i in range(e + 1)]
    return sorted(ds)


def height_of_root(a1: int, a2: int, k: int) -> RootAlpha:
    """Degree and absolute height of alpha = (a1/a2)^(1/k) for 0 < a1 < a2.

    With a1/a2 = u/w in lowest terms, the largest d | k such that u and w
    are both d-th powers gives the minimal polynomial w' x^(k/d) - u'
    (Capelli; the x^4 + 4b^4 exception needs a negative radicand). Every
    conjugate has modulus alpha < 1, so the height is w'^(d/k).
    """
    if not 0 < a1 < a2:
        raise InvalidParameter(f"need 0 < a1 < a2, got {a1}, {a2}")
    if k < 2:
        raise InvalidParameter(f"k must be >= 2, got {k}")
    g = math.gcd(a1, a2)
    u, w = a1 // g, a2 // g
    for d in reversed(_divisors(k)):
        ur = u if d == 1 else is_kth_power(u, d)
        wr = w if d == 1 else is_kth_power(w, d)
        if ur is not None and wr is not None:
            break
    r = k // d
    height = float(wr) if r == 1 else math.exp(math.log(wr) / r)
    return RootAlpha(a1, a2, k, ur, wr, r, height)


def c_lemma(k: int) -> float:
    """Product of sin^2(2 pi j / k) over 1 <= j <= (k-1)/2, for odd k >= 3."""
    if k < 3 or k % 2 == 0:
        raise InvalidParameter(f"k must be odd and >= 3, got {k}")
    return math.prod(math.sin(2 * math.pi * j / k) ** 2 for j in range(1, (k - 1) // 2 + 1))


def n_threshold(k: int, L: int) -> float:
    """Lower limit 2^(1/(L-1)) c(k)^(-1/(L-1)) on n in the approximation lemma."""
    if L < 3:
        raise InvalidParameter(f"L must be >= 3, got {L}")
    return (2 / c_lemma(k)) ** (1 / (L - 1))


def within(a1: int, a2: int, k: int, q: Fraction, tol: Fraction) -> bool:
    """Exactly decide |q - (a1/a2)^(1/k)| <= tol for rational q, tol >= 0."""
    ratio = Fraction(a1, a2)
    lo = max(Fraction(0), q - tol)
    return lo ** k <= ratio <= (q + tol) ** k


def coarse_close(a1, a2, k, u, v) -> bool:
    """|u/v - alpha| <= a2 / (2 v^k)."""
    return within(a1, a2, k, Fraction(u, v), Fraction(a2, 2 * v ** k))


def _alpha_floor(a1, a2, k, prec):
    # floor(alpha * 2^prec) exactly: floor of a k-th root of a floor
    return ikroot(a1 * (1 << (prec * k)) // a2, k)


def fine_close(a1, a2, k, u, v) -> tuple[bool | None, int]:
    """Decide |u/v - alpha| < v^-(k - 1/2) with certified dyadic enclosures.

    alpha and sqrt(v) are enclosed in intervals of width 2^-prec built from
    exact integer roots; prec doubles until the enclosures separate. Returns
    (verdict, prec); the verdict is None when the gap stays below
    2^-TIE_BITS relative to the threshold.
    """
    q = Fraction(u, v)
    vk1 = v ** (k - 1)
    # threshold ~ v^-(k-1/2); the resolution has to reach TIE_BITS below it
    need = TIE_BITS + (2 * k - 1) * v.bit_length() // 2 + 8
    prec = START_PREC
    while True:
        scale = 1 << prec
        af = _alpha_floor(a1, a2, k, prec)
        alo, ahi = Fraction(af, scale), Fraction(af + 1, scale)
        d1, d2 = q - ahi, q - alo
        if d1 >= 0:
            dlo, dhi = d1, d2
        elif d2 <= 0:
            dlo, dhi = -d2, -d1
        else:
            dlo, dhi = Fraction(0), max(-d1, d2)
        s = math.isqrt(v * scale * scale)
        slo, shi = Fraction(s, scale), Fraction(s + 1, scale)
        tlo, thi = 1 / (vk1 * shi), 1 / (vk1 * slo)
        if dhi < tlo:
            return True, prec
        if dlo >= thi:
            return False, prec
        if prec >= need:
            return None, prec
        prec *= 2


@dataclass(frozen=True)
class ApproxCheck:
    index: int
    u: int
    v: int
    coarse_holds: bool
    v_exceeds_a2_pow4: bool
    fine_holds: bool | None
    certified: bool
    precision_bits: int

    def to_json(self) -> dict:
        out = dict(self.__dict__)
        out["u"], out["v"] = encode_int(self.u), encode_int(self.v)
        return out


def approx_check(t: TupleRecord, i: int) -> ApproxCheck:
    """Both approximation inequalities for the pair of element a_i (1-based, i >= 3).

    The second is only asserted once v_i > a_2^4; below that its verdict is
    reported as None (not applicable).
    """
    if not 3 <= i <= t.m:
        raise InvalidParameter(f"no solution pair for index {i} (m = {t.m})")
    pair = solution_pairs(t)[i - 3]
    a1, a2 = t.elements[:2]
    u, v, k = pair.u, pair.v, t.k
    coarse = coarse_close(a1, a2, k, u, v)
    big = v > a2 ** 4
    fine, prec, certified = None, 0, True
    if big:
        fine, prec = fine_close(a1, a2, k, u, v)
        certified = fine is not None
    return ApproxCheck(i, u, v, coarse, big, fine, certified, prec)
