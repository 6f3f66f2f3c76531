"""Exact integer arithmetic kernel.

Factorization, radicals, integer roots, perfect-power detection and
primality testing on plain Python ints.  Everything here is pure and
deterministic: the rho factoring stage seeds its RNG from the input, so
repeated calls agree bit for bit.  The intended workload stays far below
2**128, where trial division plus Brent's variant of Pollard rho is
entirely comfortable.
"""

from __future__ import annotations

import math
import random
from fractions import Fraction
from typing import List, Tuple


def _small_primes(limit: int) -> List[int]:
    sieve = bytearray([1]) * (limit + 1)
    sieve[0] = sieve[1] = 0
    for p in range(2, math.isqrt(limit) + 1):
        if sieve[p]:
            sieve[p * p :: p] = bytes(len(range(p * p, limit + 1, p)))
    return [i for i in range(limit + 1) if sieve[i]]


# 10**4 is comfortably past the point where rho beats further trial division.
_TRIAL_LIMIT = 10_000
SMALL_PRIMES = _small_primes(_TRIAL_LIMIT)

# Miller-Rabin with the first twelve prime bases is a proven primality test
# below this bound (~3.3e24 > 2**81), which covers the required 2**64 range.
_MR_PROVEN_BOUND = 3_317_044_064_679_887_385_961_981
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)
# Above the proven bound: 64 extra rounds, error probability < 4**-64.
_MR_EXTRA_ROUNDS = 64


def _miller_rabin_round(n: int, a: int, d: int, s: int) -> bool:
    """One strong-pseudoprime round; True means 'probably prime'."""
    a %= n
    if a in (0, 1, n - 1):
        return True
    x = pow(a, d, n)
    if x in (1, n - 1):
        return True
    for _ in range(s - 1):
        x = x * x % n
        if x == n - 1:
            return True
    return False


def is_prime(n: int) -> bool:
    """Primality test.

    Deterministic for all n below ~3.3e24 (covers 2**64); above that,
    Miller-Rabin with 64 deterministically seeded rounds, error < 2**-128.
    """
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % p == 0:
            return n == p
    d = n - 1
    s = (d & -d).bit_length() - 1
    d >>= s
    if not all(_miller_rabin_round(n, a, d, s) for a in _MR_BASES):
        return False
    if n < _MR_PROVEN_BOUND:
        return True
    rng = random.Random(n)
    return all(
        _miller_rabin_round(n, rng.randrange(2, n - 1), d, s)
        for _ in range(_MR_EXTRA_ROUNDS)
    )


def _brent_rho(n: int, rng: random.Random) -> int:
    """Nontrivial factor of composite odd n via Brent's cycle finding."""
    while True:
        y = rng.randrange(1, n)
        c = rng.randrange(1, n)
        m = 128
        g = r = q = 1
        x = ys = y
        while g == 1:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(m, r - k)):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                g = math.gcd(q, n)
                k += m
            r *= 2
        if g == n:
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = math.gcd(abs(x - ys), n)
        if g != n:
            return g
        # Cycle collapsed onto n itself; retry with fresh parameters.


def factorize(n: int) -> List[Tuple[int, int]]:
    """Prime factorization of n >= 1 as an ordered [(prime, exponent), ...].

    factorize(1) == [].  Trial division by primes up to 10**4, then
    deterministic-seed Brent rho with perfect-power splitting on cofactors.
    """
    if n < 1:
        raise ValueError(f"factorize expects n >= 1, got {n}")
    found = {}
    m = n
    for p in SMALL_PRIMES:
        if p * p > m:
            break
        if m % p == 0:
            e = 0
            while m % p == 0:
                m //= p
                e += 1
            found[p] = found.get(p, 0) + e
    if m > 1 and m < _TRIAL_LIMIT * _TRIAL_LIMIT:
        # Cofactor below the trial square is necessarily prime.
        found[m] = found.get(m, 0) + 1
        m = 1
    stack = [(m, 1)] if m > 1 else []
    while stack:
        m, mult = stack.pop()
        if is_prime(m):
            found[m] = found.get(m, 0) + mult
            continue
        pp = perfect_power_exponents(m)
        if pp:
            base, exp = pp[-1]  # largest exponent: smallest base to split
            stack.append((base, mult * exp))
            continue
        d = _brent_rho(m, random.Random(m * 0x9E3779B97F4A7C15 + 1))
        stack.append((d, mult))
        stack.append((m // d, mult))
    return sorted(found.items())


def radical(n: int) -> int:
    """Product of the distinct primes dividing n; radical(1) == 1."""
    return math.prod(p for p, _ in factorize(n))


def gcd_quality(a: int, b: int) -> Tuple[int, Fraction]:
    """(g, g/rad(g)) for g = gcd(a, b), the ratio as an exact rational.

    The ratio is always a positive integer in lowest terms; it equals 1
    exactly when g is squarefree.
    """
    if a < 1 or b < 1:
        raise ValueError("gcd_quality expects positive integers")
    g = math.gcd(a, b)
    return g, Fraction(g, radical(g))


def iroot(n: int, k: int) -> Tuple[int, bool]:
    """(floor(n ** (1/k)), exact) for n >= 1, k >= 1, in exact arithmetic."""
    if n < 1 or k < 1:
        raise ValueError(f"iroot expects n >= 1 and k >= 1, got ({n}, {k})")
    if k == 1:
        return n, True
    if k == 2:
        r = math.isqrt(n)
        return r, r * r == n
    if n.bit_length() <= k:
        # 2**k > n means the root is 1.
        return 1, n == 1
    if n < (1 << 52):
        r = int(n ** (1.0 / k))
        while r**k > n:
            r -= 1
        while (r + 1) ** k <= n:
            r += 1
        return r, r**k == n
    # Integer Newton iteration from a one-bit-high initial guess.
    x = 1 << -(-n.bit_length() // k)
    while True:
        y = ((k - 1) * x + n // x ** (k - 1)) // k
        if y >= x:
            break
        x = y
    while x**k > n:
        x -= 1
    while (x + 1) ** k <= n:
        x += 1
    return x, x**k == n


def perfect_power_exponents(n: int) -> List[Tuple[int, int]]:
    """All (base, exp) with exp >= 2 and base ** exp == n, exp ascending.

    Requires n >= 2; the value 1 is treated as a wildcard by callers, never
    as a perfect power here.  Returns [] when n is not a perfect power.
    """
    if n < 2:
        raise ValueError(f"perfect_power_exponents expects n >= 2, got {n}")
    out = []
    for e in range(2, n.bit_length() + 1):
        r, exact = iroot(n, e)
        if exact:
            out.append((r, e))
        if r <= 1:
            break
    return out
