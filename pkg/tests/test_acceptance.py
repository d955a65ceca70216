"""Acceptance criteria, one test per criterion.

Run with ``pytest tests/test_acceptance.py -v``; the terminal summary lists
one PASS/FAIL line per criterion.
"""
import cmath
import itertools
import math
import random
import time

import mpmath as mp
import pytest

from dktuples import approx, bounds, characters, gap, sieve
from dktuples.arith import ikroot, is_kth_power, is_prime
from dktuples.tuples import TupleRecord, euler_family, search, verify

# independent oracle values (tests/oracles/compute_frozen.py)
FERMAT_SIEVE_BOUND = 19.835496373875913393
LARGE_3 = "613886053.689088891350691788448"


class Timer:
    def __enter__(self):
        self.t0 = time.perf_counter()
        return self

    def __exit__(self, *exc):
        self.elapsed = time.perf_counter() - self.t0


@pytest.mark.acceptance(1)
def test_c01_known_tuples_verify():
    cases = [(256, (1, 33, 68, 105)), (1, (1, 3, 8, 120)),
             (256, (1, 33, 105, 320, 18240)), (256, (5, 21, 64, 285, 6720))]
    with Timer() as t:
        reports = [(els, verify(TupleRecord(2, n, els))) for n, els in cases]
    for (n, _), (els, rep) in zip(cases, reports):
        assert rep.ok and not rep.failures
        m = len(els)
        assert len(rep.witnesses) == m * (m - 1) // 2
        for (i, j), r in rep.witnesses.items():
            assert r * r == els[i - 1] * els[j - 1] + n
    assert t.elapsed < 0.1


@pytest.mark.acceptance(2)
def test_c02_euler_family():
    with Timer() as t:
        count = 0
        for a in range(1, 200):
            for b in range(a + 1, 201):
                r = math.isqrt(a * b + 1)
                if r * r != a * b + 1:
                    continue
                rec = euler_family(a, b)
                assert rec is not None and rec.n == 1 and rec.k == 2
                assert verify(rec).ok
                count += 1
        fermat = euler_family(1, 3)
    assert count > 0
    assert fermat.elements == (1, 3, 8, 120)
    assert t.elapsed < 1.0


def _pair_ok(x, k):
    # independent of the library: float estimate plus exact neighbours
    if x <= 0:
        return False
    r = round(x ** (1 / k))
    return any(s > 0 and s ** k == x for s in (r - 1, r, r + 1))


def _brute(n, k, m, B):
    ok = {(a, b) for a in range(1, B + 1) for b in range(a + 1, B + 1) if _pair_ok(a * b + n, k)}
    return [c for c in itertools.combinations(range(1, B + 1), m)
            if all(p in ok for p in itertools.combinations(c, 2))]


CRIT3 = [(n, k, m, B) for n in (-3, -2, -1, 1, 2, 3) for k in (2, 3) for m in (2, 3, 4)
         for B in (m, 9, 17, 25)]


@pytest.mark.acceptance(3)
def test_c03_search_matches_brute_force():
    with Timer() as t:
        for n, k, m, B in CRIT3:
            got = [r.elements for r in search(n, k, m, B)]
            assert got == _brute(n, k, m, B), (n, k, m, B)
    assert t.elapsed < 30


@pytest.mark.acceptance(4)
def test_c04_character_sums():
    rng = random.Random(2024)
    primes = [p for p in range(3, 212) if is_prime(p)]
    chars = {}
    trials = 0
    while trials < 1000:
        k = rng.choice((2, 3, 5))
        p = rng.choice([q for q in primes if q % k == 1])
        chi = chars.setdefault((p, k), characters.make_character(p, k))
        A = rng.sample(range(1, p), rng.randint(1, p - 1))
        B = rng.sample(range(0, p), rng.randint(1, p))
        n = rng.randrange(1, p)
        res = characters.char_sum(chi, A, B, n)
        direct = sum(chi(a * b + n) for a in A for b in B)
        assert abs(res.sum - direct) < 1e-6 * max(1, len(A) * len(B))
        assert res.bound == pytest.approx(math.sqrt(p * len(A) * len(B)))
        assert res.abs <= res.bound + 1e-6
        assert res.holds
        trials += 1

    for p in (q for q in primes if q <= 101):
        for k in (d for d in range(2, p) if (p - 1) % d == 0):
            chi = characters.make_character(p, k)
            e = [chi.exponent(x) for x in range(p)]
            assert e[0] is None
            for x in range(1, p):
                for y in range(1, p):
                    assert e[x * y % p] == (e[x] + e[y]) % k
            # exact order k: the exponents generate Z/k
            assert math.gcd(k, *[v for v in e[1:]]) == 1
            # kernel = k-th powers
            kth = {pow(x, k, p) for x in range(1, p)}
            assert {x for x in range(1, p) if e[x] == 0} == kth
            assert abs(chi(chi.g) - cmath.exp(2j * math.pi / k)) < 1e-12


@pytest.mark.acceptance(5)
def test_c05_gallagher_soundness():
    rng = random.Random(555)
    produced = 0
    for _ in range(200):
        N = 10 ** 6
        size = rng.choice((1, 2, 5, 10, 20, 50, 200))
        S = rng.sample(range(1, N + 1), size)
        Q = rng.randint(2, 2000)
        rep = sieve.gallagher_bound(S, N, Q)
        if rep.bound is not None:
            produced += 1
            assert len(S) <= rep.bound
    assert produced > 0
    rep = sieve.gallagher_bound({1, 3, 8, 120}, 120, 20)
    assert abs(rep.bound - 19.8) <= 0.1
    assert rep.bound == pytest.approx(FERMAT_SIEVE_BOUND, rel=1e-12)


@pytest.mark.acceptance(6)
def test_c06_apriori_sieve():
    with Timer() as t:
        rep = sieve.apriori_sieve_bound(256, 2)
    assert t.elapsed < 0.1
    assert rep.bound is not None and math.isfinite(rep.bound) and rep.bound >= 5
    for els in ((1, 33, 105, 320, 18240), (5, 21, 64, 285, 6720)):
        assert max(els) <= 256 ** 3 and len(els) <= rep.bound


@pytest.mark.acceptance(7)
def test_c07_abcd_exhaustive():
    checked = 0
    with Timer() as t:
        for n in (1, 2, 3):
            for a, b, c, d in itertools.combinations(range(n ** 3, 61), 4):
                assert gap.check_abcd(a, b, c, d, n).holds, (a, b, c, d, n)
                checked += 1
    assert checked > 0
    assert t.elapsed < 10


@pytest.mark.acceptance(8)
def test_c08_constants():
    assert abs(approx.c_lemma(3) - 0.75) < 1e-12
    assert abs(approx.c_lemma(5) - 0.3125) < 1e-12
    with mp.workdps(50):
        oracle = mp.mpf(LARGE_3)
        l6 = mp.log(6)
        fresh = mp.mpf(2) ** 28 * l6 * mp.log(2 * l6) + 14
        assert abs(fresh - oracle) < mp.mpf(10) ** -20
    value = bounds.effective_large_bound(3).value
    assert abs(value - float(oracle)) / float(oracle) < 1e-12
    assert 2 ** 25 * 0.5 ** -3 == 2 ** 28
    assert bounds.j0(3) == 4


@pytest.mark.acceptance(9)
def test_c09_integer_roots():
    rng = random.Random(99)
    with Timer() as t:
        for _ in range(10 ** 5):
            x = rng.getrandbits(rng.randint(1, 128))
            k = rng.randint(2, 64)
            r = ikroot(x, k)
            assert r ** k <= x < (r + 1) ** k
            if r > 0:
                assert is_kth_power(r ** k, k) == r
    assert t.elapsed < 10


@pytest.mark.acceptance(10)
def test_c10_worker_determinism():
    for n, k, m, B in CRIT3:
        outs = ["".join(r.dumps() + "\n" for r in search(n, k, m, B, workers=w))
                for w in (1, 4, 8)]
        assert outs[0] == outs[1] == outs[2], (n, k, m, B)
