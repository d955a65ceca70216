"""Dirichlet characters of exact order k modulo a prime, and bilinear sums."""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field

import numpy as np

from . import _kernels
from .arith import is_prime, primitive_root
from .errors import InvalidParameter

TABLE_CAP = 1 << 20
TOLERANCE = 1e-6


@dataclass(frozen=True, eq=False)
class OrderKCharacter:
    """chi(x) = zeta_k ** exponent(x) with exponent(x) = ind_g(x) mod k; chi(0) = 0.

    ``table[x]`` stores the exponent, with -1 marking x = 0.
    """

    p: int
    k: int
    g: int
    table: np.ndarray = field(repr=False)

    def exponent(self, x: int) -> int | None:
        e = int(self.table[x % self.p])
        return None if e < 0 else e

    def __call__(self, x: int) -> complex:
        e = self.exponent(x)
        return 0j if e is None else cmath.exp(2j * math.pi * e / self.k)


def make_character(p: int, k: int) -> OrderKCharacter:
    """The order-k character mod p sending the least primitive root to exp(2 pi i / k)."""
    if not is_prime(p):
        raise InvalidParameter(f"{p} is not prime")
    if k < 2 or (p - 1) % k:
        raise InvalidParameter(f"k = {k} must be >= 2 and divide p - 1 = {p - 1}")
    if p > TABLE_CAP:
        raise InvalidParameter(f"p = {p} exceeds the discrete-log table cap 2**20")
    g = primitive_root(p)
    table = np.full(p, -1, dtype=np.int64)
    x = 1
    for t in range(p - 1):
        table[x] = t % k
        x = x * g % p
    return OrderKCharacter(p, k, g, table)


@dataclass(frozen=True)
class CharSumResult:
    sum: complex
    abs: float
    bound: float
    holds: bool

    def to_json(self) -> dict:
        return {"re": self.sum.real, "im": self.sum.imag, "abs": self.abs,
                "bound": self.bound, "holds": self.holds}


def exponent_counts(chi: OrderKCharacter, A, B, n: int) -> np.ndarray:
    """How many (a, b) give chi(ab + n) = zeta_k ** e, for each e (zeros excluded)."""
    return _kernels.char_exponent_counts(chi.table, np.asarray(A, dtype=np.int64),
                                         np.asarray(B, dtype=np.int64), n % chi.p,
                                         chi.p, chi.k)


def char_sum(chi: OrderKCharacter, A, B, n: int) -> CharSumResult:
    """Sum of chi(ab + n) over A x B, checked against sqrt(p |A| |B|).

    A must consist of units mod p and B of units or 0, each given as a
    residue in [0, p) without repeats.
    """
    p = chi.p
    A, B = list(A), list(B)
    if math.gcd(n, p) != 1:
        raise InvalidParameter(f"gcd(n, p) = gcd({n}, {p}) != 1")
    if len(set(A)) != len(A) or any(not 0 < a < p for a in A):
        raise InvalidParameter("A must be distinct units mod p")
    if len(set(B)) != len(B) or any(not 0 <= b < p for b in B):
        raise InvalidParameter("B must be distinct residues mod p")
    counts = exponent_counts(chi, A, B, n) if A and B else np.zeros(chi.k, dtype=np.int64)
    # exact integer counts up to here; embed into C only at the end
    total = sum(int(c) * cmath.exp(2j * math.pi * e / chi.k)
                for e, c in enumerate(counts) if c)
    total = complex(total)
    bound = math.sqrt(p * len(A) * len(B))
    return CharSumResult(total, abs(total), bound, abs(total) <= bound + TOLERANCE)


def sp_bound(p: int) -> float:
    """The a-priori residue bound sqrt(p) + 2 for a D_k(n) set reduced mod p."""
    if not is_prime(p):
        raise InvalidParameter(f"{p} is not prime")
    return math.sqrt(p) + 2


def residue_image(elements, p: int) -> set[int]:
    return {int(a) % p for a in elements}
