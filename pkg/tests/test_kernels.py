"""Both kernel backends against exact pure-integer oracles."""
import numpy as np
import pytest

from dktuples import _kernels, arith
from dktuples.tuples import PowerPolicy


def _edges_oracle(B, n, k, policy):
    return [(a, b) for a in range(1, B) for b in range(a + 1, B + 1)
            if policy.root(a * b + n, k) is not None]


@pytest.mark.parametrize("n", [1, -1, 3, -7, 256, -100])
@pytest.mark.parametrize("k", [2, 3, 4, 5])
@pytest.mark.parametrize("policy", [PowerPolicy(), PowerPolicy(True, False),
                                    PowerPolicy(False, True), PowerPolicy(True, True)])
def test_power_edges_match_oracle(backend, n, k, policy):
    B = 60
    ia, ib = backend.power_edges(B, n, k, policy.allow_zero, policy.allow_negative)
    assert list(zip(ia.tolist(), ib.tolist())) == _edges_oracle(B, n, k, policy)


def test_power_edges_large_values(backend):
    # products near 2**40 exercise the rounding of the float seed
    B, n = 2000, 10 ** 6
    ia, ib = backend.power_edges(B, n, 2)
    for a, b in zip(ia.tolist(), ib.tolist()):
        assert arith.is_kth_power(a * b + n, 2)
    # spot-check a row exhaustively
    row = {b for a, b in zip(ia.tolist(), ib.tolist()) if a == 1999}
    assert row == {b for b in range(2000, B + 1) if arith.is_kth_power(1999 * b + n, 2)}


def test_sieve_segment_matches(backend):
    base = arith._small_primes(1000)
    for lo, hi in [(0, 10), (2, 3), (990, 1100), (999_000, 1_000_000), (5, 5)]:
        got = backend.sieve_segment(lo, hi, base).tolist()
        assert got == [p for p in range(max(lo, 2), hi) if arith.is_prime(p)]


def test_char_counts_match_bruteforce(backend):
    from dktuples.characters import make_character
    chi = make_character(31, 5)
    A, B = [1, 2, 7, 30], [0, 3, 4, 29]
    expected = np.zeros(5, dtype=np.int64)
    for a in A:
        for b in B:
            e = chi.exponent(a * b + 3)
            if e is not None:
                expected[e] += 1
    got = backend.char_exponent_counts(chi.table, np.array(A), np.array(B), 3, 31, 5)
    assert got.tolist() == expected.tolist()


def test_backend_selection_reported():
    assert _kernels.BACKEND in _kernels.BACKENDS
