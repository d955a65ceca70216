from fractions import Fraction
from itertools import combinations

import pytest

from dktuples import gap
from dktuples.arith import is_kth_power
from dktuples.errors import PreconditionFailed
from dktuples.tuples import TupleRecord


def test_gyar_fermat():
    res = gap.check_gyar(1, 3, 8, 120, 1, 2)
    assert res.lhs == 360 and res.rhs == 32 and res.holds


def test_gyar_diophantus():
    res = gap.check_gyar(1, 33, 68, 105, 256, 2)
    assert res.rhs == Fraction(4 * 68, 256 ** 2)
    assert res.lhs == 33 * 105 and res.holds


def test_gyar_precondition():
    with pytest.raises(PreconditionFailed) as info:
        gap.check_gyar(1, 2, 3, 4, 1, 2)
    assert info.value.offending == 7  # 2*3 + 1


def test_gyar_requires_order():
    with pytest.raises(PreconditionFailed):
        gap.check_gyar(3, 1, 8, 120, 1, 2)


@pytest.mark.parametrize("args,lhs,rhs", [((1, 2, 3, 4, 1), 14, 12),
                                          ((8, 9, 10, 11, 2), 7566, 3960)])
def test_abcd_examples(args, lhs, rhs):
    res = gap.check_abcd(*args)
    assert (res.lhs, res.rhs, res.holds) == (lhs, rhs, True)


def test_abcd_preconditions():
    with pytest.raises(PreconditionFailed):
        gap.check_abcd(1, 2, 3, 4, 2)
    with pytest.raises(PreconditionFailed):
        gap.check_abcd(8, 10, 9, 11, 2)


def test_abcd_brute_force_small():
    for n in (1, 2):
        for a, b, c, d in combinations(range(n ** 3, 30), 4):
            assert gap.check_abcd(a, b, c, d, n).holds


def _neg_instances(n, k, amax, cmax):
    found = []
    for a in range(n ** 3, amax):
        for b in range(a + 1, amax):
            cs = [c for c in range(b + 1, cmax)
                  if is_kth_power(a * c - n, k) and is_kth_power(b * c - n, k)]
            found += [(a, b, c, d) for c, d in combinations(cs, 2)]
    return found


def test_gap_neg_on_found_instances():
    inst = _neg_instances(1, 2, 20, 3000)
    assert (1, 2, 5, 145) in inst
    for a, b, c, d in inst:
        assert gap.check_gap_neg(a, b, c, d, 1, 2).holds


def test_gap_neg_forged_powers():
    with pytest.raises(PreconditionFailed):
        gap.check_gap_neg(1, 2, 5, 146, 1, 2)
    with pytest.raises(PreconditionFailed):
        gap.check_gap_neg(8, 9, 10, 11, 2, 2)


def test_gap_rhs_exact_for_large_n():
    # n^-k would underflow a double; the rational stays exact
    n = 10 ** 200
    a = n ** 3
    res = gap.check_abcd(a, a + 1, a + 2, a + 3, n)
    assert res.holds
    assert res.lhs == (a * (a + 2) - n) * ((a + 1) * (a + 3) - n)
    assert res.rhs == Fraction(a * (a + 1) * (a + 2) * (a + 3), 2)


def test_growth_short_tuple_is_empty():
    assert gap.growth_certificate(TupleRecord(3, 1, (1, 2, 3, 4)), 1) == []


def test_growth_boundary_equality():
    # a_2 = 3, a_5 = 3^(k-1) = 9: equality case of the inequality shape
    t = TupleRecord(3, 1, (1, 3, 4, 5, 9))
    assert gap.growth_certificate(t, 1, check_property=False) == [(1, True)]
    t = TupleRecord(3, 1, (1, 3, 4, 5, 8))
    assert gap.growth_certificate(t, 1, check_property=False) == [(1, False)]


def test_growth_two_steps_and_huge_exponent():
    t = TupleRecord(5, -1, (1, 2, 3, 4, 16, 17, 18, 2 ** 16))
    assert gap.growth_certificate(t, -1, check_property=False) == [(1, True), (2, True)]
    t = TupleRecord(40, 1, (1, 5, 6, 7, 10 ** 6))
    assert gap.growth_certificate(t, 1, check_property=False) == [(1, False)]


def test_growth_preconditions():
    t = TupleRecord(3, 2, (1, 3, 4, 5, 9))
    with pytest.raises(PreconditionFailed):
        gap.growth_certificate(t, 1, check_property=False)  # a_1 < 8
    with pytest.raises(PreconditionFailed):
        gap.growth_certificate(TupleRecord(3, 1, (1, 3, 4, 5, 9)), -1, check_property=False)
    with pytest.raises(PreconditionFailed):
        gap.growth_certificate(TupleRecord(3, 1, (1, 3, 4, 5, 9)), 1)  # not a D_3(1) set


def test_gapcheck_json():
    obj = gap.check_gyar(1, 33, 68, 105, 256, 2).to_json()
    assert obj["rhs"] == "17/4096" and obj["lhs"] == "3465" and obj["holds"] is True
