"""
Exact abc-style radical checks
==============================

For a coprime split a + b = c the explicit inequality under test is
c < max(rad(ab), rad(ac), rad(bc)) * rad(abc)^(7/8), decided in exact
integer arithmetic by raising both sides to the 8th power.
"""

from fractions import Fraction

from fcspread import abc_check
from fcspread.abc_check import AbcTriple

# A famous high-quality triple and two mundane ones.
for a, b in ((2, 6436341), (1, 8), (3, 125)):
    t = AbcTriple.of(a, b)
    rep = abc_check.check_explicit(t)
    print(f"({t.a}, {t.b}, {t.c}): rad(abc) = {rep.rad_abc}, "
          f"quality {float(rep.quality):.4f}, "
          f"explicit bound holds: {rep.explicit_pass}")
print()

# The classic conjecture shape c < C * rad(abc)^(1+eps) at a few eps
# values; verdicts are exact whenever exactness is affordable.
t = AbcTriple.of(2, 6436341)
for eps in ("1/10", "1/4", 1):
    print(f"  eps = {eps}: {abc_check.check_classic(t, eps)}")
print()

# Exhaustive scan: no violation of the explicit inequality exists with
# c <= 10^5 (the acceptance suite pushes this to 10^6).
violations = abc_check.brute_force_scan(100000)
print("violations of the explicit bound with c <= 10^5:", violations)
print()

# Quality > 1 means c exceeds rad(abc) itself; such triples are rare.
n = abc_check.count_high_quality(20000)
print("triples with quality > 1 and c <= 20000:", n)
print()

# The excess-power filter keeps splits (any gcd) whose sum beats
# rad(abc)^(1+eps) while the gcd stays nearly squarefree.
print("excess splits up to 9 at eps = 1/5:")
for rec in abc_check.excess_pairs(9, 1, Fraction(1, 5)):
    print(f"  {rec['a']} + {rec['b']} = {rec['c']}, "
          f"rad(abc) = {rec['rad_abc']}, gcd {rec['gcd']}")
