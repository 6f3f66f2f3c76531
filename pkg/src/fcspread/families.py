"""Known solution catalogs and parametric solution families.

Catalog entries are stored compactly (bases and exponents / witness factor
tuples) and expanded and re-verified on first access, so a corrupted literal
cannot go unnoticed.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Dict, List, Optional, Tuple, Union

from . import arith
from .products import ProductDecomposition, analyze, fc_weight


@dataclass(frozen=True)
class KnownSolution:
    """A verified identity X (+/-) Y = Z with witness decompositions.

    terms = ((X, decomp_X), (Y, decomp_Y), (Z, decomp_Z)); the equation reads
    X + Y = Z for sign 'plus' and X - Y = Z for sign 'minus'.
    """

    terms: Tuple[Tuple[int, ProductDecomposition], ...]
    sign: str
    source: str
    checks: Dict[str, object] = field(default_factory=dict, compare=False)

    def verify(self) -> None:
        (x, dx), (y, dy), (z, dz) = self.terms
        for v, dec in self.terms:
            if dec.value != v:
                raise AssertionError(f"witness mismatch for {v} in {self.source}")
        lhs = x + y if self.sign == "plus" else x - y
        if lhs != z:
            raise AssertionError(f"identity fails for {self.source}")

    def weight(self) -> Fraction:
        return fc_weight((dec.spread, dec.degree) for _, dec in self.terms)


def _power_term(base: int, exp: int) -> Tuple[int, ProductDecomposition]:
    return base**exp, analyze([base] * exp)


# The ten known coprime x^n + y^m = z^k solutions with 1/n + 1/m + 1/k < 1
# (the value 1 counts as a wildcard term).  Believed complete far beyond
# desk-scale bounds.
_FC_ENTRIES = (
    ((1, 1), (2, 3), (3, 2)),
    ((2, 5), (7, 2), (3, 4)),
    ((7, 3), (13, 2), (2, 9)),
    ((2, 7), (17, 3), (71, 2)),
    ((3, 5), (11, 4), (122, 2)),
    ((33, 8), (1549034, 2), (15613, 3)),
    ((1414, 3), (2213459, 2), (65, 7)),
    ((9262, 3), (15312283, 2), (113, 7)),
    ((17, 7), (76271, 3), (21063928, 2)),
    ((43, 8), (96222, 3), (30042907, 2)),
)

# The four known non-maxgcd solutions of x^n - y^m = Z with Z of degree 3
# and nonzero spread: (x, n), (y, m), witness factors of Z.
_DEGREE3_ENTRIES = (
    ((12, 4), (2, 14), (16, 16, 17)),
    ((24, 4), (2, 16), (64, 64, 65)),
    ((6, 8), (2, 18), (112, 112, 113)),
    ((117, 4), (3, 14), (567, 567, 568)),
)


@lru_cache(maxsize=None)
def fermat_catalan_catalog() -> Tuple[KnownSolution, ...]:
    """The ten known Fermat-Catalan solutions, expanded and verified."""
    out = []
    for (x, n), (y, m), (z, k) in _FC_ENTRIES:
        sol = KnownSolution(
            terms=(_power_term(x, n), _power_term(y, m), _power_term(z, k)),
            sign="plus",
            source=f"fermat-catalan {x}^{n} + {y}^{m} = {z}^{k}",
            checks={"exponents": (n, m, k)},
        )
        sol.verify()
        a, b = sol.terms[0][0], sol.terms[1][0]
        if math.gcd(a, b) != 1:
            raise AssertionError(f"catalog entry not coprime: {sol.source}")
        out.append(sol)
    return tuple(out)


@lru_cache(maxsize=None)
def degree3_catalog() -> Tuple[KnownSolution, ...]:
    """The four known non-maxgcd degree-3 nonzero-spread solutions."""
    out = []
    for (x, n), (y, m), witness in _DEGREE3_ENTRIES:
        dz = analyze(witness)
        sol = KnownSolution(
            terms=(_power_term(x, n), _power_term(y, m), (dz.value, dz)),
            sign="minus",
            source=f"degree3 {x}^{n} - {y}^{m} = {'*'.join(map(str, witness))}",
            checks={"exponents": (n, m)},
        )
        sol.verify()
        X, Y = sol.terms[0][0], sol.terms[1][0]
        if math.gcd(X, Y) == min(X, Y):
            raise AssertionError(f"catalog entry is maxgcd: {sol.source}")
        if dz.spread < 1:
            raise AssertionError(f"catalog witness has zero spread: {sol.source}")
        if sol.weight() >= 1:
            raise AssertionError(f"catalog entry weight >= 1: {sol.source}")
        out.append(sol)
    return tuple(out)


@dataclass(frozen=True)
class IdentityFailure:
    """Structured report for a parametric identity that does not hold."""

    params: Dict[str, int]
    lhs: int
    rhs: int
    reason: str


StandardResult = Union[KnownSolution, IdentityFailure]


def gen_standard(v: int, w: int, n: int) -> StandardResult:
    """The standard family (v w^n)^n + (v w^(n-1))^n = (v w^n)^(n-1) (w^n + v).

    The identity holds exactly when v(w^n + 1) = w^n + v, i.e. v = 1; for
    any other v a structured IdentityFailure is returned instead of raising.
    On success the solution carries the maxgcd flag and the canonical
    degree-n decomposition of the right side.
    """
    if v < 1 or w < 1 or n < 1:
        raise ValueError("v, w, n must be positive")
    x = v * w**n
    y = v * w ** (n - 1)
    X, Y = x**n, y**n
    Z = x ** (n - 1) * (w**n + v)
    if X + Y != Z:
        return IdentityFailure(
            params={"v": v, "w": w, "n": n},
            lhs=X + Y,
            rhs=Z,
            reason="identity requires v(w^n + 1) = w^n + v, i.e. v = 1",
        )
    # v = 1 here: Z = (w^n)^(n-1) (w^n + 1), a degree-n spread-1 product.
    dz = analyze([w**n] * (n - 1) + [w**n + v])
    sol = KnownSolution(
        terms=(_power_term(x, n), _power_term(y, n), (Z, dz)),
        sign="plus",
        source=f"standard family v={v} w={w} n={n}",
        checks={
            "maxgcd": math.gcd(X, Y) == min(X, Y),
            "weight": fc_weight([(0, n), (0, n), (dz.spread, dz.degree)]),
        },
    )
    sol.verify()
    return sol


def gen_maxgcd_trivial(x: int, p: int) -> KnownSolution:
    """The trivial maxgcd family x^p + x^(p-1) = x^(p-1) (x + 1), p > 4.

    The right side is witnessed as the degree-p product [x]*(p-1) + [x+1]
    of spread 1.
    """
    if x < 1:
        raise ValueError("x must be positive")
    if p <= 4:
        raise ValueError(f"requires p > 4, got {p}")
    X, Y = x**p, x ** (p - 1)
    dz = analyze([x] * (p - 1) + [x + 1])
    sol = KnownSolution(
        terms=(_power_term(x, p), _power_term(x, p - 1), (X + Y, dz)),
        sign="plus",
        source=f"maxgcd trivial family x={x} p={p}",
        checks={
            "maxgcd": math.gcd(X, Y) == min(X, Y),
            "weight": fc_weight([(0, p), (0, p - 1), (1, p)]),
        },
    )
    sol.verify()
    if not sol.checks["maxgcd"]:
        raise AssertionError("trivial family must be maxgcd")
    return sol


def solve_congruences(n: int, m: int) -> Tuple[int, int, int]:
    """Minimal positive (alpha, beta, gamma) with n | 2 + 3 m alpha,
    m | 2 + 3 n beta and 3 | 2 + n m gamma.

    Requires 3 not dividing n or m and gcd(n, m) <= 2; violations surface as
    a ValueError naming the congruence that cannot be satisfied.
    """
    if n < 1 or m < 1:
        raise ValueError("n, m must be positive")
    if n % 3 == 0:
        raise ValueError("hypothesis violated: 3 divides n, so n | 2 + 3 m alpha fails")
    if m % 3 == 0:
        raise ValueError("hypothesis violated: 3 divides m, so m | 2 + 3 n beta fails")

    def minimal(div: int, coef: int, label: str) -> int:
        for t in range(1, div + 1):
            if (2 + coef * t) % div == 0:
                return t
        raise ValueError(f"congruence unsatisfiable: {label}")

    alpha = minimal(n, 3 * m, f"n | 2 + 3 m alpha with n={n}, m={m}")
    beta = minimal(m, 3 * n, f"m | 2 + 3 n beta with n={n}, m={m}")
    gamma = minimal(3, n * m, f"3 | 2 + n m gamma with n={n}, m={m}")
    return alpha, beta, gamma


def gen_pythagorean(a: int, n: int, m: int) -> KnownSolution:
    """Non-maxgcd solution of x^n + y^m = z^3 built on (a^2-1, 2a, a^2+1).

    X, Y, Z share the three bases with exponent vectors
    X: (2 + 3 m alpha, 3 n beta, n m gamma),
    Y: (3 m alpha, 2 + 3 n beta, n m gamma),
    Z: (3 m alpha, 3 n beta, 2 + n m gamma),
    so X is an n-th power, Y an m-th power and Z a cube.  The weight
    1/n + 1/m + 1/3 can reach 1 for n or m in {1, 2}; such inputs are
    accepted and flagged via checks['weight'].
    """
    if a < 2:
        raise ValueError("a must be >= 2")
    alpha, beta, gamma = solve_congruences(n, m)
    bases = (a * a - 1, 2 * a, a * a + 1)
    ex = (2 + 3 * m * alpha, 3 * n * beta, n * m * gamma)
    ey = (3 * m * alpha, 2 + 3 * n * beta, n * m * gamma)
    ez = (3 * m * alpha, 3 * n * beta, 2 + n * m * gamma)
    X = math.prod(b**e for b, e in zip(bases, ex))
    Y = math.prod(b**e for b, e in zip(bases, ey))
    Z = math.prod(b**e for b, e in zip(bases, ez))
    if X + Y != Z:
        raise AssertionError("construction identity failed")

    def nth_root_term(val: int, k: int) -> Tuple[int, ProductDecomposition]:
        root, exact = arith.iroot(val, k) if k > 1 else (val, True)
        if not exact:
            raise AssertionError(f"term is not a perfect {k}-th power")
        return val, analyze([root] * k)

    sol = KnownSolution(
        terms=(nth_root_term(X, n), nth_root_term(Y, m), nth_root_term(Z, 3)),
        sign="plus",
        source=f"pythagorean family a={a} n={n} m={m}",
        checks={
            "alpha_beta_gamma": (alpha, beta, gamma),
            "exponent_vectors": (ex, ey, ez),
            "maxgcd": math.gcd(X, Y) == min(X, Y),
            "weight": Fraction(1, n) + Fraction(1, m) + Fraction(1, 3),
        },
    )
    sol.verify()
    if sol.checks["maxgcd"]:
        raise AssertionError("pythagorean family produced a maxgcd pair")
    return sol


def gen_counterexample_family(
    a: int, alpha: int, extra_degree: int = 100
) -> KnownSolution:
    """The family (a^alpha - 1)(a^alpha + 1) + 1 = a^(2 alpha).

    The left product has degree 2 but spread 2, so its honest weight
    (1 + s)/d is 3/2; the naive power-style sum 1/2 + 1/m + 1/(2 alpha)
    (unit term as 1^m with m = extra_degree) drops below 1 for alpha >= 2,
    which is exactly why weights must charge for spread.  checks carry both
    numbers and the 'naive_admits' flag.
    """
    if a < 2 or alpha < 1 or extra_degree < 1:
        raise ValueError("need a >= 2, alpha >= 1, extra_degree >= 1")
    t = a**alpha
    dx = analyze([t - 1, t + 1])
    dy = analyze([1] * extra_degree)
    dz = analyze([a] * (2 * alpha))
    naive = Fraction(1, 2) + Fraction(1, extra_degree) + Fraction(1, 2 * alpha)
    honest = fc_weight(
        [(dx.spread, 2), (0, extra_degree), (0, 2 * alpha)]
    )
    sol = KnownSolution(
        terms=((dx.value, dx), (1, dy), (dz.value, dz)),
        sign="plus",
        source=f"wide-product counterexample family a={a} alpha={alpha}",
        checks={
            "naive_weight": naive,
            "honest_weight": honest,
            "naive_admits": naive < 1,
            "degenerate": t - 1 == 1,
        },
    )
    sol.verify()
    if honest < 1:
        raise AssertionError("honest weight must stay >= 1 for this family")
    return sol


def is_standard(
    x: int, y: int, n: int, z: int, sign: str = "plus"
) -> Union[Tuple[int, int], bool]:
    """Whether x^n (+/-) y^n = z matches the standard family exactly.

    Returns the witness (v, w) with x = v w^n, y = v w^(n-1) when the triple
    is standard, else False.  For sign 'minus' the mirrored identity
    z = (v w^n)^(n-1) (w^n - v) is used.  Requires x >= y >= 1, n >= 1 and
    the equation itself to hold.
    """
    if x < y or y < 1 or n < 1:
        raise ValueError("requires x >= y >= 1 and n >= 1")
    if z < 1:
        raise ValueError("requires z >= 1")
    if sign not in ("plus", "minus"):
        raise ValueError(f"bad sign {sign!r}")
    lhs = x**n + y**n if sign == "plus" else x**n - y**n
    if lhs != z:
        raise ValueError(f"{x}^{n} {'+' if sign == 'plus' else '-'} {y}^{n} != {z}")
    if x % y:
        return False
    w = x // y
    if n >= 2:
        wp = w ** (n - 1)
        if y % wp:
            return False
        v = y // wp
    else:
        v = y
    if x != v * w**n or y != v * w ** (n - 1):
        return False
    core = w**n + v if sign == "plus" else w**n - v
    if z != (v * w**n) ** (n - 1) * core:
        return False
    return (v, w)
