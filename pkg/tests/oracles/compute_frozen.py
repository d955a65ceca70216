"""Independent recomputation of the values frozen into the test suite.

Uses sympy for prime enumeration and mpmath at 50 digits; shares no code
with the package. Run: python tests/oracles/compute_frozen.py
"""
import mpmath as mp
from sympy import primerange, totient

mp.mp.dps = 50


def gallagher(S, N, Q, modulus=1):
    ps = [p for p in primerange(2, Q + 1) if p % modulus == 1 % modulus]
    num = mp.fsum(mp.log(p) for p in ps) - mp.log(N)
    den = mp.fsum(mp.log(p) / len({s % p for s in S}) for p in ps) - mp.log(N)
    return ps, num, den, num / den


def apriori(n, k, Q=None):
    N = abs(n) ** 3
    if Q is None:
        Q = int(mp.ceil((int(totient(k)) * mp.log(N)) ** 2))
    ps = [p for p in primerange(2, Q + 1) if p % k == 1]
    w = [min(mp.sqrt(p) + 2, p) for p in ps]
    num = mp.fsum(mp.log(p) for p in ps) - mp.log(N)
    den = mp.fsum(mp.log(p) / wi for p, wi in zip(ps, w)) - mp.log(N)
    return Q, len(ps), num, den, num / den


def theta(Q, k, a):
    return mp.fsum(mp.log(p) for p in primerange(2, Q + 1) if p % k == a % k)


def large_bound(k):
    l2k = mp.log(2 * k)
    return mp.mpf(2) ** 28 * l2k * mp.log(2 * l2k) + 14


def evertse(r, kappa):
    l2r = mp.log(2 * r)
    return mp.mpf(2) ** 25 * mp.mpf(kappa) ** -3 * l2r * mp.log(l2r / kappa)


if __name__ == "__main__":
    ps, num, den, b = gallagher([1, 3, 8, 120], 120, 20)
    print("gallagher {1,3,8,120} N=120 Q=20:", mp.nstr(num, 20), mp.nstr(den, 20), mp.nstr(b, 20))
    print("apriori 256,2:", *[mp.nstr(x, 20) if not isinstance(x, int) else x for x in apriori(256, 2)])
    print("apriori 256,2 Q=10:", *[mp.nstr(x, 20) if not isinstance(x, int) else x for x in apriori(256, 2, 10)])
    print("theta(1e6,4,1):", mp.nstr(theta(10 ** 6, 4, 1), 25))
    print("theta(1e6,3,1):", mp.nstr(theta(10 ** 6, 3, 1), 25))
    print("theta(20,1,0):", mp.nstr(mp.fsum(mp.log(p) for p in primerange(2, 21)), 25))
    print("large(3):", mp.nstr(large_bound(3), 30))
    print("evertse(3,.5):", mp.nstr(evertse(3, 0.5), 30))
    print("evertse(2,1):", mp.nstr(evertse(2, 1), 30))
