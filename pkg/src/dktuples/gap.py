"""Exact checks of the gap-principle inequalities on concrete instances.

Every verdict compares exact rationals (int or Fraction); ``margin`` is a
float for display only.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from numbers import Rational

from .arith import is_kth_power
from .errors import PreconditionFailed
from .tuples import TupleRecord, verify


@dataclass(frozen=True)
class GapCheck:
    lhs: Rational
    rhs: Rational
    holds: bool = field(init=False)

    def __post_init__(self):
        object.__setattr__(self, "holds", self.lhs >= self.rhs)

    @property
    def margin(self) -> float:
        """lhs / rhs as a float."""
        return _ratio(self.lhs, self.rhs)

    def to_json(self) -> dict:
        return {"lhs": _frac_str(self.lhs), "rhs": _frac_str(self.rhs),
                "holds": self.holds, "margin": self.margin}


def _ratio(lhs, rhs):
    if rhs == 0:
        return float("inf") if lhs > 0 else float("nan")
    try:
        return float(Fraction(lhs) / Fraction(rhs))
    except OverflowError:
        return float("inf")


def _frac_str(q: Rational) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def _require_powers(values, k):
    for label, v in values:
        if is_kth_power(v, k) is None:
            raise PreconditionFailed(f"{label} = {v} is not a positive {k}-th power", v)


def _require(cond, message, offending=None):
    if not cond:
        raise PreconditionFailed(message, offending)


def check_gyar(a, b, c, d, n, k) -> GapCheck:
    """bd against k^k n^-k (ac)^(k-1) when ac+n, bc+n, ad+n, bd+n are k-th powers.

    Only a < b and c < d are required; c is not ordered against a, b.
    """
    _require(n > 0, "n must be positive", n)
    _require(k >= 2, "k must be >= 2", k)
    _require(0 < a < b and 0 < c < d, "need 0 < a < b and 0 < c < d")
    _require_powers([("ac+n", a * c + n), ("bc+n", b * c + n),
                     ("ad+n", a * d + n), ("bd+n", b * d + n)], k)
    rhs = Fraction(k ** k * (a * c) ** (k - 1), n ** k)
    return GapCheck(b * d, rhs)


def _require_chain(a, b, c, d, n):
    _require(n > 0, "n must be positive", n)
    _require(n ** 3 <= a, f"a = {a} is below n^3 = {n ** 3}", a)
    _require(a < b < c < d, "need a < b < c < d")


def check_abcd(a, b, c, d, n) -> GapCheck:
    """(ac - n)(bd - n) against abcd / 2 for n^3 <= a < b < c < d."""
    _require_chain(a, b, c, d, n)
    prod = a * b * c * d
    rhs = prod // 2 if prod % 2 == 0 else Fraction(prod, 2)
    return GapCheck((a * c - n) * (b * d - n), rhs)


def check_gap_neg(a, b, c, d, n, k) -> GapCheck:
    """bd against k^k 2^-k n^-k (ac)^(k-1) when ac-n, bc-n, ad-n, bd-n are k-th powers."""
    _require(k >= 2, "k must be >= 2", k)
    _require_chain(a, b, c, d, n)
    _require_powers([("ac-n", a * c - n), ("bc-n", b * c - n),
                     ("ad-n", a * d - n), ("bd-n", b * d - n)], k)
    rhs = Fraction(k ** k * (a * c) ** (k - 1), 2 ** k * n ** k)
    return GapCheck(b * d, rhs)


def growth_certificate(t: TupleRecord, sign: int, L: int = 3, *,
                       check_property: bool = True) -> list[tuple[int, bool]]:
    """Verdicts of a_{2+3j} >= a_2^((k-1)^j) for 1 <= j <= (m-2)/3 (1-based indices).

    ``sign`` must agree with the sign of ``t.n``; every element must be at
    least |n|^L. ``check_property=False`` skips tuple verification, for
    synthetic inputs that only exercise the inequality.
    """
    _require(sign in (1, -1) and (t.n > 0) == (sign > 0),
             f"sign {sign} does not match n = {t.n}", sign)
    _require(L >= 3, "L must be >= 3", L)
    _require(t.k >= 3, "growth certificates need k >= 3", t.k)
    floor = abs(t.n) ** L
    _require(t.elements[0] >= floor,
             f"a_1 = {t.elements[0]} is below |n|^{L} = {floor}", t.elements[0])
    m = t.m
    if m < 5:
        return []
    if check_property and not verify(t).ok:
        raise PreconditionFailed(f"{t.elements} lacks property D_{t.k}({t.n})")
    a = t.elements
    out = []
    for j in range(1, (m - 2) // 3 + 1):
        big = a[1 + 3 * j]
        # compare exponents first: a_2^e can be astronomically large
        e = (t.k - 1) ** j
        if e * (a[1].bit_length() - 1) >= big.bit_length():
            holds = False
        else:
            holds = big >= a[1] ** e
        out.append((j, holds))
    return out
