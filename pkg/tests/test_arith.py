"""Exact integer kernel: factorization, radical, roots, perfect powers."""

import math
import random
from fractions import Fraction

import pytest

from fcspread import arith

M61 = 2**61 - 1  # Mersenne prime


def test_factorize_small():
    assert arith.factorize(720) == [(2, 4), (3, 2), (5, 1)]
    assert arith.factorize(1) == []
    assert arith.factorize(M61) == [(M61, 1)]


def test_factorize_rejects_zero():
    with pytest.raises(ValueError):
        arith.factorize(0)


def test_factorize_recomposes():
    rng = random.Random(101)
    for _ in range(300):
        n = rng.randrange(2, 1 << 96)
        fac = arith.factorize(n)
        assert math.prod(p**e for p, e in fac) == n
        primes = [p for p, _ in fac]
        assert primes == sorted(primes) and len(set(primes)) == len(primes)
        assert all(arith.is_prime(p) for p in primes)


def test_factorize_deterministic():
    # randomized splitting inside must not leak into the output
    n = 2**64 + 13
    assert arith.factorize(n) == arith.factorize(n)


def test_radical_values():
    assert arith.radical(720) == 30
    assert arith.radical(1) == 1
    assert 6436341 == 3**10 * 109
    assert arith.radical(6436341) == 327
    with pytest.raises(ValueError):
        arith.radical(0)


def test_radical_properties():
    rng = random.Random(102)
    for _ in range(400):
        n = rng.randrange(2, 10**6)
        r = arith.radical(n)
        assert n % r == 0
        assert arith.radical(r) == r
        m = rng.randrange(2, 10**4)
        if math.gcd(m, n) == 1:
            assert arith.radical(m * n) == arith.radical(m) * arith.radical(n)


def test_gcd_quality():
    assert arith.gcd_quality(12, 18) == (6, Fraction(1))
    assert arith.gcd_quality(16, 24) == (8, Fraction(4))
    assert arith.gcd_quality(7, 13) == (1, Fraction(1))


def test_gcd_quality_is_integer_ratio():
    rng = random.Random(103)
    for _ in range(200):
        a = rng.randrange(1, 10**9)
        b = rng.randrange(1, 10**9)
        g, ratio = arith.gcd_quality(a, b)
        assert g == math.gcd(a, b)
        assert ratio.denominator == 1 and ratio >= 1


def test_iroot_examples():
    assert arith.iroot(16384, 2) == (128, True)
    assert arith.iroot(17, 4) == (2, False)
    assert arith.iroot(2**80, 5) == (2**16, True)
    with pytest.raises(ValueError):
        arith.iroot(0, 2)
    with pytest.raises(ValueError):
        arith.iroot(5, 0)


def test_iroot_floor_property():
    rng = random.Random(104)
    for n in range(2, 2000):
        for k in range(2, 21):
            r, exact = arith.iroot(n, k)
            assert r**k <= n < (r + 1) ** k
            assert exact == (r**k == n)
    for _ in range(2000):
        n = rng.randrange(2, 1 << 120)
        k = rng.randrange(1, 40)
        r, exact = arith.iroot(n, k)
        assert r**k <= n < (r + 1) ** k
        assert exact == (r**k == n)


def test_perfect_power_exponents_examples():
    assert arith.perfect_power_exponents(64) == [(8, 2), (4, 3), (2, 6)]
    assert arith.perfect_power_exponents(512) == [(8, 3), (2, 9)]
    assert arith.perfect_power_exponents(30) == []
    with pytest.raises(ValueError):
        arith.perfect_power_exponents(1)


def test_perfect_power_exponents_vs_brute_table():
    limit = 10**5
    table = {}
    for e in range(2, limit.bit_length()):
        x = 2
        while x**e <= limit:
            table.setdefault(x**e, []).append((x, e))
            x += 1
    for n, pairs in table.items():
        assert arith.perfect_power_exponents(n) == sorted(pairs, key=lambda p: p[1])
    rng = random.Random(105)
    for _ in range(500):
        n = rng.randrange(2, limit)
        if n not in table:
            assert arith.perfect_power_exponents(n) == []


def test_is_prime():
    assert arith.is_prime(113)
    assert not arith.is_prime(1)
    assert not arith.is_prime(0)
    assert arith.is_prime(M61)
    assert arith.is_prime(2) and arith.is_prime(3)
    assert not arith.is_prime(3215031751)  # strong pseudoprime to bases 2,3,5,7
    sieve = [True] * 2000
    sieve[0] = sieve[1] = False
    for i in range(2, 45):
        if sieve[i]:
            for j in range(i * i, 2000, i):
                sieve[j] = False
    for n in range(2000):
        assert arith.is_prime(n) == sieve[n], n
