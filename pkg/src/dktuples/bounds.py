"""Closed-form evaluators for the explicit constants bounding M_k(n).

All logarithms are natural.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field

from .approx import c_lemma, n_threshold
from .arith import totient
from .errors import InvalidParameter

Q0_SMALL = 8e9
Q0_SWITCH = 10 ** 5


@dataclass(frozen=True)
class BoundReport:
    """One evaluated bound with the hypotheses it depends on.

    ``value`` is None when the bound does not apply or overflows a double;
    ``log_value`` carries the natural log when available.
    """

    name: str
    inputs: dict
    value: float | int | None
    applicable: bool = True
    reason: str = ""
    log_value: float | None = None
    details: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        out = {"name": self.name, "inputs": {k: _jsonable(v) for k, v in self.inputs.items()},
               "value": _jsonable(self.value), "applicable": self.applicable,
               "reason": self.reason}
        if self.log_value is not None:
            out["log_value"] = self.log_value
        if self.details:
            out["details"] = {k: _jsonable(v) for k, v in self.details.items()}
        return out


def _jsonable(v):
    if isinstance(v, int) and not isinstance(v, bool) and abs(v) > 1 << 53:
        return str(v)
    return v


def evertse_count(r: int, kappa: float) -> float:
    """Count of exceptional approximations: 2^25 kappa^-3 log(2r) log(kappa^-1 log(2r))."""
    if not 0 < kappa <= 1:
        raise InvalidParameter(f"kappa must lie in (0, 1], got {kappa}")
    if r < 2:
        raise InvalidParameter(f"degree r must be >= 2, got {r}")
    l2r = math.log(2 * r)
    return 2.0 ** 25 * kappa ** -3 * l2r * math.log(l2r / kappa)


def j0(k: int) -> int:
    """Least j with (k-1)^j > 4k."""
    if k < 3:
        raise InvalidParameter(f"k must be >= 3, got {k}")
    j, power = 1, k - 1
    while power <= 4 * k:
        j += 1
        power *= k - 1
    return j


def effective_large_bound(k: int, refined: bool = False) -> BoundReport:
    """Bound on the number of tuple elements above |n|^L (L >= 3).

    The additive constant is 14, or 2 + 3 j0(k) when ``refined``.
    """
    if k < 3:
        raise InvalidParameter(f"k must be >= 3, got {k}")
    main = evertse_count(k, 0.5)
    extra = 2 + 3 * j0(k) if refined else 14
    return BoundReport("effective_large", {"k": k, "refined": refined}, main + extra,
                       details={"main_term": main, "additive": extra})


def main_term(n: int, k: int) -> BoundReport:
    """Leading term 3 phi(k) log|n| of the bound on M_k(n)."""
    if abs(n) <= 1:
        raise InvalidParameter(f"need |n| >= 2, got {n}")
    if k < 2:
        raise InvalidParameter(f"k must be >= 2, got {k}")
    value = 3 * totient(k) * math.log(abs(n))
    return BoundReport("main_term", {"n": n, "k": k}, value, True,
                       "advisory: asymptotic in |n| with k = o(log log |n|); "
                       "not checkable for a single n")


def log_q0(k: int) -> float:
    if k < 3:
        raise InvalidParameter(f"k must be >= 3, got {k}")
    if k <= Q0_SWITCH:
        return math.log(Q0_SMALL)
    return 0.03 * math.sqrt(k) * math.log(k) ** 3


def q0(k: int) -> float:
    """Threshold beyond which the prime-sum estimate for residue classes mod k holds.

    Returns ``inf`` when the value overflows a double; see :func:`log_q0`.
    """
    if k <= Q0_SWITCH and k >= 3:
        return Q0_SMALL
    lg = log_q0(k)
    return math.exp(lg) if lg < 709.0 else math.inf


def q0_report(k: int) -> BoundReport:
    """Q0(k); past double range the value is None and ``details`` holds m * 10^e."""
    lg = log_q0(k)
    value = q0(k)
    if not math.isinf(value):
        return BoundReport("q0", {"k": k}, value, log_value=lg)
    e10 = lg / math.log(10)
    exponent = math.floor(e10)
    return BoundReport("q0", {"k": k}, None, log_value=lg,
                       details={"mantissa": 10 ** (e10 - exponent), "exponent10": exponent})


def q_condition(n: int, k: int) -> bool:
    """Whether Q = (phi(k) log N)^2 reaches Q0(k), with N = |n|^3.

    Decided in log space, so huge k cannot overflow.
    """
    if abs(n) < 2:
        raise InvalidParameter(f"need |n| >= 2, got {n}")
    logN = 3 * math.log(abs(n))
    return 2 * (math.log(totient(k)) + math.log(logN)) > log_q0(k)


def prior_bounds(n: int, k: int) -> BoundReport:
    """Earlier published bounds on M_k(n); ``value`` is the smallest that applies."""
    if n == 0:
        raise InvalidParameter("n must be nonzero")
    candidates = {}
    if k >= 5:
        candidates["2|n|^5+3 (k >= 5)"] = 2 * abs(n) ** 5 + 3
    if n == 1:
        if k == 3:
            candidates["M_3(1) <= 7"] = 7
        elif k == 4:
            candidates["M_4(1) <= 5"] = 5
        elif 5 <= k <= 176:
            candidates["M_k(1) <= 4 (5 <= k <= 176)"] = 4
        elif k >= 177:
            candidates["M_k(1) <= 3 (k >= 177)"] = 3
    if not candidates:
        return BoundReport("prior", {"n": n, "k": k}, None, False,
                           "no recorded prior bound covers this (n, k)")
    best = min(candidates, key=candidates.get)
    return BoundReport("prior", {"n": n, "k": k}, candidates[best], True, best,
                       details=candidates)


def bounds_table(n: int, k: int) -> list[BoundReport]:
    """Every bound evaluable for (n, k), skipping the ones whose domain excludes it."""
    rows = []
    if abs(n) >= 2:
        rows.append(main_term(n, k))
    if k >= 3:
        rows.append(effective_large_bound(k))
        rows.append(effective_large_bound(k, refined=True))
        rows.append(BoundReport("j0", {"k": k}, j0(k)))
        rows.append(q0_report(k))
        if abs(n) >= 2:
            rows.append(BoundReport("q_condition", {"n": n, "k": k}, int(q_condition(n, k))))
        rows.append(BoundReport("evertse_count", {"r": k, "kappa": 0.5}, evertse_count(k, 0.5)))
    if k >= 3 and k % 2 == 1:
        rows.append(BoundReport("c_lemma", {"k": k}, c_lemma(k)))
        rows.append(BoundReport("n_threshold", {"k": k, "L": 3}, n_threshold(k, 3)))
    rows.append(prior_bounds(n, k))
    return rows


def markdown_table(rows: list[BoundReport]) -> str:
    lines = ["| bound | inputs | value | applicable | note |", "|---|---|---|---|---|"]
    for r in rows:
        inputs = ", ".join(f"{k}={v}" for k, v in r.inputs.items())
        if r.value is None and r.log_value is not None:
            value = f"exp({r.log_value:.6g})"
        elif isinstance(r.value, float):
            value = f"{r.value:.10g}"
        else:
            value = str(r.value)
        lines.append(f"| {r.name} | {inputs} | {value} | {'yes' if r.applicable else 'no'} | {r.reason} |")
    return "\n".join(lines)
