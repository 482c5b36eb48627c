# Farey pairs bracketing a rational, and the integers attached to them.
import math

from lenshull.rationals import Fraction, continued_fraction, enumerate_pairs

Q = Fraction(5, 13)
cf = continued_fraction(Q)
print(f"{Q} = CF{list(cf.coefficients)}, coefficient sum n = {cf.n}")

# one pair per tetrahedral facet orbit; there are n - 3 of them
for pair in enumerate_pairs(Q):
    print(f"  {{{pair.A}, {pair.B}}}  a={pair.a} b={pair.b} a'={pair.a_} b'={pair.b_}"
          f"  x={pair.x} x'={pair.x_} y={pair.y} y'={pair.y_}")

# the identity a'b + b'a = q holds for every pair
assert all(p.a_ * p.b + p.b_ * p.a == Q.den for p in enumerate_pairs(Q))

# counts over a range of denominators
counts = {}
for q in range(5, 40):
    for p in range(2, q - 1):
        if math.gcd(p, q) == 1:
            counts[q] = counts.get(q, 0) + len(enumerate_pairs(Fraction(p, q)))
print("total pairs by q:", counts)
