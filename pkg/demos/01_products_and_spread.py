"""
Bounded-spread products from the ground up
==========================================

A product of bounded spread is a list of integer factors whose smallest
and largest entries stay close together: base b = min factor, spread
s = max - min, degree d = number of factors.  Perfect powers are the
spread-0 case.  This script walks the core primitives.
"""

from fcspread.products import (
    SpreadConstraints,
    analyze,
    decompose,
    enumerate_products,
    fc_weight,
    spread_lemma_margin,
)

# analyze() classifies an explicit factor list.
for factors in ([2, 3], [5, 5, 5], [8, 8, 9], [1, 1, 2, 3]):
    dec = analyze(factors)
    print(
        f"{dec.value:>6} = {list(dec.factors)}  "
        f"base {dec.base}, spread {dec.spread}, degree {dec.degree}"
    )
print()

# decompose() inverts that: all ways to write a value as a degree-d
# product with spread at most s.
print("4352 as degree-3 products of spread <= 1:",
      [list(d.factors) for d in decompose(4352, 3, 1)])
print("576 as degree-3 products of spread <= 1:",
      [list(d.factors) for d in decompose(576, 3, 1)])
print("30 has none:", decompose(30, 3, 1))
print()

# The Fermat-Catalan weight of a term is (1 + spread) / degree; a triple
# of terms is interesting when the total weight stays below 1.
for terms in ([(0, 3), (0, 2), (0, 7)], [(0, 3), (0, 2), (1, 7)]):
    w = fc_weight(terms)
    print(f"weight of spread/degree terms {terms}: {w}, below 1: {w < 1}")
print()

# Streaming enumeration under joint constraints, smallest values first
# within each (degree, base) class.
cons = SpreadConstraints(degree=(2, 3), max_spread=1)
found = [list(d.factors) for d in enumerate_products(cons, 30)]
print(f"all degree 2..3 spread<=1 products up to 30 ({len(found)}):")
print(found)
print()

# For spread + 1 < degree the radical of the product is provably at most
# e**(2 s^2 / b) * X**((s+1)/d); the margin is the log-scale slack and it
# is never negative.
for factors in ([2, 2, 2, 2, 2, 2], [8, 8, 9], [3, 3, 3, 4]):
    dec = analyze(factors)
    print(f"margin for {list(dec.factors)}: {spread_lemma_margin(dec):.4f}")
