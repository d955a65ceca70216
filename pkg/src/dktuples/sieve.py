"""Gallagher's larger sieve evaluated with exact finite prime sums."""
from __future__ import annotations

import math
from dataclasses import dataclass, field

from .arith import primes_in_ap, theta, totient
from .bounds import q0
from .errors import InvalidParameter
from .tuples import encode_int


def log_int(N: int) -> float:
    """Natural log of a positive integer of any size (exact to double precision)."""
    if N <= 0:
        raise InvalidParameter(f"log of nonpositive {N}")
    bits = N.bit_length()
    if bits <= 1000:
        return math.log(N)
    shift = bits - 64
    return math.log(N >> shift) + shift * math.log(2)


def describe_primes(modulus: int) -> str:
    return "all primes" if modulus == 1 else f"p = 1 mod {modulus}"


@dataclass(frozen=True)
class SieveRow:
    p: int
    log_p: float
    weight: float
    residues: int | None = None


@dataclass(frozen=True)
class SieveReport:
    N: int
    Q: int
    prime_spec: str
    numerator: float
    denominator: float
    mode: str
    weight_rule: str
    bound: float | None = None
    rows: tuple[SieveRow, ...] = field(default=(), repr=False, compare=False)

    @property
    def conclusive(self) -> bool:
        return self.bound is not None

    def to_json(self) -> dict:
        return {"mode": self.mode, "N": encode_int(self.N), "Q": self.Q,
                "prime_spec": self.prime_spec, "weight_rule": self.weight_rule,
                "primes": len(self.rows), "numerator": self.numerator,
                "denominator": self.denominator, "bound": self.bound}

    def csv_rows(self) -> list[str]:
        lines = ["p,log_p,weight,residues"]
        for r in self.rows:
            res = "" if r.residues is None else str(r.residues)
            lines.append(f"{r.p},{r.log_p!r},{r.weight!r},{res}")
        return lines


def residue_count(S, p: int) -> int:
    """Size of the image of S modulo p."""
    if not S:
        raise InvalidParameter("S must be nonempty")
    return len({int(s) % p for s in S})


def _assemble(N, Q, modulus, rows, mode, rule):
    logN = log_int(N)
    logs = [r.log_p for r in rows]
    num = math.fsum(logs) - logN
    den = math.fsum(r.log_p / r.weight for r in rows) - logN
    bound = num / den if den > 0 else None
    return SieveReport(N, Q, describe_primes(modulus), num, den, mode, rule,
                       bound, tuple(rows))


def gallagher_bound(S, N: int, Q: int, modulus: int = 1) -> SieveReport:
    """Larger-sieve bound on |S| from the residue counts of S itself.

    Primes are p <= Q with p = 1 (mod ``modulus``); ``modulus=1`` uses all
    primes. The bound is present only when the denominator is positive.
    """
    S = sorted({int(s) for s in S})
    if not S:
        raise InvalidParameter("S must be nonempty")
    if S[0] < 1 or S[-1] > N:
        raise InvalidParameter(f"S must lie in [1, {N}]")
    if Q <= 1:
        raise InvalidParameter(f"Q must exceed 1, got {Q}")
    rows = []
    for p in primes_in_ap(Q, modulus, 1):
        w = residue_count(S, p)
        rows.append(SieveRow(p, math.log(p), float(w), w))
    return _assemble(N, Q, modulus, rows, "a-posteriori", "|S mod p|")


def default_q(n: int, k: int) -> int:
    """ceil((phi(k) log N)^2) with N = |n|^3."""
    logN = 3 * log_int(abs(n))
    return math.ceil((totient(k) * logN) ** 2)


def apriori_sieve_bound(n: int, k: int, Q: int | None = None) -> SieveReport:
    """Larger-sieve bound for any D_k(n) set inside [1, |n|^3].

    Uses primes p = 1 (mod k) and the weight min(sqrt(p) + 2, p) in place of
    the unknown residue counts. A nonpositive denominator gives a report
    without a bound rather than an error.
    """
    if abs(n) < 2:
        raise InvalidParameter(f"need |n| >= 2, got {n}")
    if k < 2:
        raise InvalidParameter(f"k must be >= 2, got {k}")
    N = abs(n) ** 3
    if Q is None:
        Q = default_q(n, k)
    if Q <= 1:
        raise InvalidParameter(f"Q must exceed 1, got {Q}")
    rows = [SieveRow(p, math.log(p), min(math.sqrt(p) + 2, p))
            for p in primes_in_ap(Q, k, 1)]
    return _assemble(N, Q, k, rows, "a-priori", "min(sqrt(p)+2, p)")


def apriori_weights_bound(S, N: int, Q: int, modulus: int) -> SieveReport:
    """The a-priori weights on the same prime set as ``gallagher_bound(S, N, Q, modulus)``."""
    rows = [SieveRow(p, math.log(p), min(math.sqrt(p) + 2, p), residue_count(S, p))
            for p in primes_in_ap(Q, modulus, 1)]
    return _assemble(N, Q, modulus, rows, "a-priori", "min(sqrt(p)+2, p)")


@dataclass(frozen=True)
class PntCheck:
    Q: int
    k: int
    a: int
    theta: float
    main_term: float
    error: float
    allowance: float
    applies: bool
    holds_empirically: bool

    def to_json(self) -> dict:
        return dict(self.__dict__)


def pnt_check(Q: int, k: int, a: int) -> PntCheck:
    """Compare theta(Q; k, a) with Q/phi(k), allowing Q / (160 log Q).

    ``applies`` is whether Q is in the proven range Q >= Q0(k).
    """
    if k < 3:
        raise InvalidParameter(f"k must be >= 3, got {k}")
    if Q < 3:
        raise InvalidParameter(f"Q must be >= 3, got {Q}")
    th = theta(Q, k, a)
    main = Q / totient(k)
    err = abs(th - main)
    allowance = Q / (160 * math.log(Q))
    return PntCheck(Q, k, a, th, main, err, allowance, Q >= q0(k), err < allowance)

