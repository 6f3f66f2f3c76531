"""
Solution catalogs and parametric families
=========================================
"""

from fractions import Fraction

from fcspread import families

# Every known coprime x^n + y^m = z^k solution with 1/n + 1/m + 1/k < 1
# (value 1 acts as a wildcard and contributes no weight).
print("Fermat-Catalan catalog:")
for sol in families.fermat_catalan_catalog():
    sol.verify()
    (x, _), (y, _), (z, _) = sol.terms
    print(f"  {x} + {y} = {z}   [{sol.source}]")
print()

print("degree-3 bounded-spread catalog (sign minus):")
for sol in families.degree3_catalog():
    sol.verify()
    (x, _), (y, _), (z, dz) = sol.terms
    print(f"  {x} - {y} = {z} = {list(dz.factors)}")
print()

# The standard family: for v = 1 the identity
# (w^n)^n + (w^(n-1))^n = (w^n)^(n-1) (w^n + 1) holds exactly.
sol = families.gen_standard(1, 2, 3)
(x, _), (y, _), (z, dz) = sol.terms
print(f"standard family v=1 w=2 n=3: {x} + {y} = {z} = {list(dz.factors)}")

# Any v > 1 breaks it; the generator returns a structured report instead.
fail = families.gen_standard(2, 1, 3)
print(f"v=2 fails: lhs {fail.lhs} != rhs {fail.rhs} ({fail.reason})")
print()

# A maxgcd family that works for every base once the exponent exceeds 4.
sol = families.gen_maxgcd_trivial(3, 6)
(x, _), (y, _), (z, dz) = sol.terms
print(f"maxgcd trivial x=3 p=6: {x} + {y} = {z} = {list(dz.factors)}, "
      f"weight {sol.checks['weight']}")
print()

# Non-maxgcd solutions of x^n + y^m = z^3 built on Pythagorean bases
# (a^2-1, 2a, a^2+1); the congruence solver picks the exponent vectors.
print("pythagorean family, weight 1/n + 1/m + 1/3:")
for a, n, m in ((2, 5, 7), (3, 4, 5)):
    sol = families.gen_pythagorean(a, n, m)
    sol.verify()
    w = Fraction(1, n) + Fraction(1, m) + Fraction(1, 3)
    (x, _), (y, _), (z, _) = sol.terms
    print(f"  a={a} n={n} m={m}: digits {len(str(x))}/{len(str(y))}"
          f"/{len(str(z))}, weight {w}, maxgcd {sol.checks['maxgcd']}")
print()

# is_standard() recognizes members of the standard family from the bare
# equation x^n (+/-) y^n = z.
print("is_standard(8, 4, 3, 576):", families.is_standard(8, 4, 3, 576))
print("is_standard(3, 2, 5, 275):", families.is_standard(3, 2, 5, 275))
