"""Independent brute-force oracles used only by the tests."""
import math
from fractions import Fraction as Q
from itertools import product


def euclid(p, q):
    """Continued fraction coefficients of p/q, long division by hand."""
    out = []
    while q:
        out.append(p // q)
        p, q = q, p - (p // q) * q
    return out


def brute_force_pairs(p, q):
    """All pairs {A, B} of Farey neighbours in [0, 1] bracketing p/q strictly,
    at most one a neighbour of p/q, at most one in {0, 1}."""
    fracs = sorted({(a // math.gcd(a, d), d // math.gcd(a, d))
                    for d in range(1, q + 1) for a in range(0, d + 1)})
    target = Q(p, q)

    def nb(x, y):
        return abs(x[0] * y[1] - x[1] * y[0]) == 1

    qq = (p, q)
    below = [f for f in fracs if Q(*f) < target]
    above = [f for f in fracs if Q(*f) > target]
    pairs = set()
    for A in below:
        for B in above:
            if not nb(A, B):
                continue
            if nb(A, qq) and nb(B, qq):
                continue
            if A[1] == 1 and B[1] == 1:
                continue
            pairs.add((A, B))
    return pairs


def brute_closure(gens):
    """Subgroup of (Q/Z)^2 generated by gens: all integer combinations
    with coefficients up to the common denominator."""
    den = 1
    for s, t in gens:
        den = math.lcm(den, Q(s).denominator, Q(t).denominator)
    elems = set()
    for coeffs in product(range(den), repeat=len(gens)):
        s = sum(c * Q(g[0]) for c, g in zip(coeffs, gens)) % 1
        t = sum(c * Q(g[1]) for c, g in zip(coeffs, gens)) % 1
        elems.add((s, t))
    return elems
