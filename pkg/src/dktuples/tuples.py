"""Tuples with property D_k(n): verification, extension and exhaustive search."""
from __future__ import annotations

import hashlib
import json
import logging
import warnings
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations

from . import _kernels
from .arith import ikroot, is_kth_power
from .errors import InvalidParameter, SearchBudgetExceeded

logger = logging.getLogger(__name__)

JSON_SAFE = 1 << 53


def encode_int(x: int):
    """JSON-friendly integer: a plain number up to 2**53, a decimal string beyond."""
    return x if -JSON_SAFE <= x <= JSON_SAFE else str(x)


def decode_int(x) -> int:
    return int(x)


@dataclass(frozen=True)
class PowerPolicy:
    """Which roots r count when asking whether x = r**k.

    The default admits only r >= 1. ``allow_zero`` admits r = 0 and
    ``allow_negative`` admits r < 0 when k is odd.
    """

    allow_zero: bool = False
    allow_negative: bool = False

    def root(self, x: int, k: int) -> int | None:
        if x > 0:
            return is_kth_power(x, k)
        if x == 0:
            return 0 if self.allow_zero else None
        if self.allow_negative and k % 2 == 1:
            r = is_kth_power(-x, k)
            return -r if r is not None else None
        return None


STRICT = PowerPolicy()


@dataclass(frozen=True)
class TupleRecord:
    """A candidate tuple a_1 < ... < a_m for property D_k(n)."""

    k: int
    n: int
    elements: tuple[int, ...]

    def __post_init__(self):
        els = tuple(int(a) for a in self.elements)
        object.__setattr__(self, "elements", els)
        if self.k < 2:
            raise InvalidParameter(f"k must be >= 2, got {self.k}")
        if self.n == 0:
            raise InvalidParameter("n must be nonzero")
        if any(a <= 0 for a in els):
            raise InvalidParameter(f"elements must be positive: {els}")
        if any(x >= y for x, y in zip(els, els[1:])):
            raise InvalidParameter(f"elements must be distinct and increasing: {els}")

    @classmethod
    def from_set(cls, k, n, elements) -> "TupleRecord":
        """Build from any iterable; sorts, and rejects duplicates."""
        els = [int(a) for a in elements]
        if len(set(els)) != len(els):
            raise InvalidParameter(f"duplicate elements in {els}")
        return cls(k, n, tuple(sorted(els)))

    @property
    def m(self) -> int:
        return len(self.elements)

    def to_json(self) -> dict:
        return {"k": self.k, "n": encode_int(self.n),
                "elements": [encode_int(a) for a in self.elements]}

    def dumps(self) -> str:
        return json.dumps(self.to_json(), separators=(",", ":"))

    @classmethod
    def from_json(cls, obj) -> "TupleRecord":
        if isinstance(obj, str):
            obj = json.loads(obj)
        return cls(int(obj["k"]), decode_int(obj["n"]),
                   tuple(decode_int(a) for a in obj["elements"]))


@dataclass
class VerifyReport:
    """Outcome of :func:`verify`. Pair indices are 1-based, i < j."""

    ok: bool
    witnesses: dict[tuple[int, int], int] = field(default_factory=dict)
    failures: list[tuple[int, int]] = field(default_factory=list)

    def to_json(self) -> dict:
        return {
            "ok": self.ok,
            "witnesses": [{"i": i, "j": j, "root": encode_int(r)}
                          for (i, j), r in sorted(self.witnesses.items())],
            "failures": [[i, j] for i, j in self.failures],
        }


def verify(t: TupleRecord, policy: PowerPolicy = STRICT) -> VerifyReport:
    """Check every pair a_i a_j + n for a k-th power root."""
    if not isinstance(t, TupleRecord):
        raise InvalidParameter("verify expects a TupleRecord")
    witnesses, failures = {}, []
    els = t.elements
    for i, j in combinations(range(len(els)), 2):
        r = policy.root(els[i] * els[j] + t.n, t.k)
        if r is None:
            failures.append((i + 1, j + 1))
        else:
            witnesses[(i + 1, j + 1)] = r
    return VerifyReport(not failures, witnesses, failures)


def euler_family(a: int, b: int) -> TupleRecord | None:
    """Euler's D(1) quadruple {a, b, a+b+2r, 4r(r+a)(r+b)} where ab + 1 = r**2."""
    if not 0 < a < b:
        raise InvalidParameter(f"need 0 < a < b, got a={a}, b={b}")
    r = is_kth_power(a * b + 1, 2)
    if r is None:
        return None
    return TupleRecord.from_set(2, 1, (a, b, a + b + 2 * r, 4 * r * (r + a) * (r + b)))


def _signed_roots(lo: int, hi: int, k: int, policy: PowerPolicy):
    """Ascending admissible roots r with lo <= r**k <= hi."""
    if hi < lo:
        return
    neg =policy.allow_negative and k % 2 == 1
    if neg and lo < 0:
        # -r**k in [lo, min(hi, -1)]  <=>  r in [ceil-root(-min(hi,-1)), floor-root(-lo)]
        top = ikroot(-lo, k)
        small = -min(hi, -1)
        bottom = ikroot(small, k)
        if bottom ** k < small:
            bottom += 1
        for r in range(top, bottom - 1, -1):
            yield -r
    if lo <= 0 <= hi and policy.allow_zero:
        yield 0
    if hi >= 1:
        start = max(lo, 1)
        r0 = ikroot(start, k)
        if r0 ** k < start:
            r0 += 1
        for r in range(r0, ikroot(hi, k) + 1):
            yield r


def extend(t: TupleRecord, B: int, policy: PowerPolicy = STRICT) -> list[int]:
    """All x <= B outside ``t`` with a*x + n a k-th power for every element a.

    Candidates come from the roots of a_1 x + n, so the work is about
    (a_1 B)**(1/k) rather than B.
    """
    if not verify(t, policy).ok:
        warnings.warn(f"{t.elements} does not have property D_{t.k}({t.n}); "
                      "extending against all elements anyway", stacklevel=2)
    if B < 1:
        return []
    a1, k, n = t.elements[0], t.k, t.n
    members = set(t.elements)
    found = set()
    for r in _signed_roots(a1 + n, a1 * B + n, k, policy):
        num = r ** k - n
        if num % a1:
            continue
        x = num // a1
        if not 1 <= x <= B or x in members:
            continue
        if all(policy.root(a * x + n, k) is not None for a in t.elements[1:]):
            found.add(x)
    return sorted(found)


# ---------------------------------------------------------------- search


@dataclass(frozen=True)
class Checkpoint:
    """Resume point of a search: ``prefix`` holds the last completed first element."""

    prefix: tuple[int, ...]
    max: int
    digest: str

    def dumps(self) -> str:
        return json.dumps({"prefix": [encode_int(a) for a in self.prefix],
                           "max": encode_int(self.max), "digest": self.digest},
                          separators=(",", ":"))

    @classmethod
    def loads(cls, text: str) -> "Checkpoint":
        obj = json.loads(text)
        return cls(tuple(int(a) for a in obj["prefix"]), int(obj["max"]), obj["digest"])


def search_digest(n, k, m, B, policy=STRICT) -> str:
    payload = json.dumps({"n": str(n), "k": k, "m": m, "max": str(B),
                          "allow_zero": policy.allow_zero,
                          "allow_negative": policy.allow_negative}, sort_keys=True)
    return hashlib.sha256(payload.encode()).hexdigest()[:16]


def adjacency(n: int, k: int, B: int, policy: PowerPolicy = STRICT) -> list[int]:
    """Forward neighbour bitsets: bit b of ``adj[a]`` is set iff a < b and a*b + n is a k-th power."""
    adj = [0] * (B + 1)
    if B < 2:
        return adj
    if B * B + abs(n) < _kernels.EXACT_LIMIT:
        ia, ib = _kernels.power_edges(B, n, k, policy.allow_zero, policy.allow_negative)
        for a, b in zip(ia.tolist(), ib.tolist()):
            adj[a] |= 1 << b
        return adj
    logger.info("B=%d outside the kernel's exact range, testing pairs in Python", B)
    for a in range(1, B):
        for b in range(a + 1, B + 1):
            if policy.root(a * b + n, k) is not None:
                adj[a] |= 1 << b
    return adj


class _Budget(Exception):
    pass


def _bits(mask):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _cliques_from(adj, first, m, cap):
    """m-cliques whose least element is ``first``, in lexicographic order.

    Returns (cliques, nodes); raises _Budget once more than ``cap`` nodes are visited.
    """
    out = []
    nodes = 0

    def grow(prefix, cand):
        nonlocal nodes
        nodes += 1
        if cap is not None and nodes > cap:
            raise _Budget
        need = m - len(prefix)
        if need == 0:
            out.append(tuple(prefix))
            return
        if cand.bit_count() < need:
            return
        for b in _bits(cand):
            prefix.append(b)
            grow(prefix, cand & adj[b])
            prefix.pop()

    grow([first], adj[first])
    return out, nodes


_WORKER_ADJ = None


def _init_worker(adj):
    global _WORKER_ADJ
    _WORKER_ADJ = adj


def _worker_task(args):
    first, m, cap = args
    try:
        cliques, nodes = _cliques_from(_WORKER_ADJ, first, m, cap)
    except _Budget:
        return first, None, None
    return first, cliques, nodes


def search(n: int, k: int, m: int, B: int, *, policy: PowerPolicy = STRICT,
           workers: int = 1, node_budget: int | None = None,
           resume: Checkpoint | None = None) -> list[TupleRecord]:
    """Every m-subset of [1, B] with property D_k(n), in lexicographic order.

    The pair graph on [1, B] is built once; cliques are grown in ascending
    order, intersecting forward-neighbour sets and pruning any branch with
    too few candidates left. Work is split by first element, so output is
    identical for every worker count.

    Raises:
        SearchBudgetExceeded: more than ``node_budget`` nodes visited. The
            exception carries results for every completed first element and
            a checkpoint to pass back as ``resume``.
    """
    if k < 2:
        raise InvalidParameter(f"k must be >= 2, got {k}")
    if n == 0:
        raise InvalidParameter("n must be nonzero")
    if m < 2 or B < 1:
        raise InvalidParameter(f"need m >= 2 and B >= 1, got m={m}, B={B}")
    digest = search_digest(n, k, m, B, policy)
    start = 1
    if resume is not None:
        if resume.digest != digest or resume.max != B:
            raise InvalidParameter("checkpoint does not match these search parameters")
        start = (resume.prefix[-1] + 1) if resume.prefix else 1

    adj = adjacency(n, k, B, policy)
    firsts = [a for a in range(start, B + 1) if adj[a].bit_count() >= m - 1]
    tasks = [(a, m, node_budget) for a in firsts]

    if workers > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(workers, initializer=_init_worker, initargs=(adj,)) as ex:
            results = ex.map(_worker_task, tasks, chunksize=max(1, len(tasks) // (4 * workers)))
            return _collect(results, n, k, B, digest, start, node_budget)
    _init_worker(adj)
    return _collect(map(_worker_task, tasks), n, k, B, digest, start, node_budget)


def _collect(results, n, k, B, digest, start, budget):
    found: list[TupleRecord] = []
    spent = 0
    last_done = start - 1
    for first, cliques, nodes in results:
        if cliques is not None:
            spent += nodes
        if cliques is None or (budget is not None and spent > budget):
            prefix = (last_done,) if last_done >= 1 else ()
            raise SearchBudgetExceeded(
                f"node budget {budget} exhausted at first element {first}",
                found, Checkpoint(prefix, B, digest))
        found.extend(TupleRecord(k, n, c) for c in cliques)
        last_done = first
    return found
