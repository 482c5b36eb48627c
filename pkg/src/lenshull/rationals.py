"""Farey-graph arithmetic: reduced fractions, the wedge pairing, continued
fractions, and the Farey pairs that index the tetrahedral facets.

All arithmetic is on Python integers, so nothing here can overflow.
"""
from __future__ import annotations

import fractions
import math
from dataclasses import dataclass
from typing import List, NamedTuple, Tuple


class ExcludedSlope(ValueError):
    """Raised when p is congruent to +-1 mod q and no extra pairs were asked for."""


class InvariantViolation(AssertionError):
    """An identity that must hold for valid input failed (a caller bug)."""


@dataclass(frozen=True, order=False)
class Fraction:
    """A reduced fraction ``num/den``; ``1/0`` stands for infinity."""

    num: int
    den: int

    def __post_init__(self):
        if self.den < 0:
            raise ValueError("denominator must be non-negative")
        if self.den == 0:
            if self.num != 1:
                raise ValueError("infinity must be written 1/0")
        elif math.gcd(self.num, self.den) != 1:
            raise ValueError(f"{self.num}/{self.den} is not reduced")

    @classmethod
    def of(cls, num: int, den: int) -> "Fraction":
        """Build a fraction from any integer pair, reducing it."""
        if den == 0:
            if num == 0:
                raise ValueError("0/0 is undefined")
            return INF
        if den < 0:
            num, den = -num, -den
        g = math.gcd(num, den)
        return cls(num // g, den // g)

    @property
    def is_inf(self) -> bool:
        return self.den == 0

    @property
    def value(self) -> fractions.Fraction:
        if self.is_inf:
            raise ValueError("infinity has no finite value")
        return fractions.Fraction(self.num, self.den)

    def mediant(self, other: "Fraction") -> "Fraction":
        return Fraction.of(self.num + other.num, self.den + other.den)

    def __lt__(self, other: "Fraction") -> bool:
        # denominators are non-negative, so cross-multiplication preserves order
        if self.is_inf or other.is_inf:
            return other.is_inf and not self.is_inf
        return self.num * other.den < other.num * self.den

    def __str__(self) -> str:
        return "inf" if self.is_inf else f"{self.num}/{self.den}"


INF = Fraction(1, 0)
ZERO = Fraction(0, 1)
ONE = Fraction(1, 1)
HALF = Fraction(1, 2)


def wedge(h: Fraction, k: Fraction) -> int:
    """Return ``|h.num * k.den - h.den * k.num|``.

    Equals 1 exactly for Farey neighbors; ``wedge(h, INF)`` is the
    denominator of ``h``.
    """
    return abs(h.num * k.den - h.den * k.num)


@dataclass(frozen=True)
class ContinuedFraction:
    coefficients: Tuple[int, ...]

    @property
    def n(self) -> int:
        """Sum of all coefficients."""
        return sum(self.coefficients)

    def evaluate(self) -> fractions.Fraction:
        value = fractions.Fraction(self.coefficients[-1])
        for c in reversed(self.coefficients[:-1]):
            value = c + 1 / value
        return value


def continued_fraction(Q: Fraction) -> ContinuedFraction:
    """Expand ``Q`` in ``(0, 1)`` by Euclid's algorithm.

    The last coefficient is always >= 2, which makes the expansion
    (and therefore ``n``) unique.
    """
    if Q.is_inf or not 0 < Q.num < Q.den:
        raise ValueError(f"{Q} is not in (0, 1)")
    coeffs = []
    num, den = Q.num, Q.den
    while den:
        coeffs.append(num // den)
        num, den = den, num % den
    return ContinuedFraction(tuple(coeffs))


class FareyPair(NamedTuple):
    """A pair of Farey neighbors ``A < B`` bracketing ``Q``, with the eight
    integers derived from it.

    ``a, b, x, y`` are wedges against infinity (denominators of ``A``,
    ``B``, the mediant ``X`` and the difference fraction ``Y``); the primed
    versions are wedges against ``Q``.
    """

    A: Fraction
    B: Fraction
    Q: Fraction
    a: int
    b: int
    a_: int
    b_: int
    x: int
    x_: int
    y: int
    y_: int

    @property
    def alpha(self) -> int:
        return self.A.num

    @property
    def beta(self) -> int:
        return self.B.num

    @property
    def X(self) -> Fraction:
        return self.A.mediant(self.B)

    @property
    def Y(self) -> Fraction:
        return Fraction.of(abs(self.A.num - self.B.num), abs(self.A.den - self.B.den))

    def key(self) -> Tuple[str, str]:
        return (str(self.A), str(self.B))

    def as_dict(self) -> dict:
        return {
            "A": str(self.A), "B": str(self.B),
            "a": self.a, "b": self.b, "a'": self.a_, "b'": self.b_,
            "x": self.x, "x'": self.x_, "y": self.y, "y'": self.y_,
        }


def derive_invariants(A: Fraction, B: Fraction, Q: Fraction) -> FareyPair:
    """Populate the eight integers of the pair ``{A, B}`` relative to ``Q``
    and check the five identities tying them together."""
    if B < A:
        A, B = B, A
    (al, a), (be, b), (p, q) = (A.num, A.den), (B.num, B.den), (Q.num, Q.den)
    if abs(al * b - a * be) != 1:
        raise InvariantViolation(f"{A} and {B} are not Farey neighbors")
    if not (al * q < p * a and p * b < be * q):
        raise InvariantViolation(f"{Q} does not lie strictly between {A} and {B}")
    return _build_pair(A, B, Q)


def _build_pair(A: Fraction, B: Fraction, Q: Fraction) -> FareyPair:
    # A < B are neighbors bracketing Q.  The mediant X and difference
    # fraction Y are then reduced, so their wedges come straight from ints.
    al, a, be, b, p, q = A.num, A.den, B.num, B.den, Q.num, Q.den
    a_, b_ = abs(al * q - a * p), abs(be * q - b * p)
    x, y = a + b, abs(a - b)
    x_, y_ = abs((al + be) * q - x * p), abs(abs(al - be) * q - y * p)
    if not (a_ + b_ == y_ and abs(a_ - b_) == x_ and a_ * b + b_ * a == q):
        raise InvariantViolation(f"Farey identities fail for {{{A}, {B}}} at {Q}")
    return FareyPair(A, B, Q, a, b, a_, b_, x, x_, y, y_)


def stern_brocot_path(Q: Fraction) -> List[Tuple[Fraction, Fraction]]:
    """Farey intervals containing ``Q`` strictly, from ``{0/1, 1/1}`` down to
    the interval whose mediant is ``Q``."""
    if Q.is_inf or not 0 < Q.num < Q.den:
        raise ValueError(f"{Q} is not in (0, 1)")
    p, q = Q.num, Q.den
    lo, hi = ZERO, ONE
    path = []
    while True:
        path.append((lo, hi))
        mn, md = lo.num + hi.num, lo.den + hi.den
        if (mn, md) == (p, q):
            return path
        m = Fraction(mn, md)
        if p * md < mn * q:
            hi = m
        else:
            lo = m


def enumerate_pairs(Q: Fraction, include_inf_pair: bool = False,
                    include_q_pair: bool = False) -> List[FareyPair]:
    """Farey pairs indexing the tetrahedral facets, in Stern-Brocot order.

    Without flags these are the ``n - 3`` pairs of Farey neighbors bracketing
    ``Q`` of which at most one is a neighbor of ``Q`` and at most one lies in
    ``{0, 1}``.  ``include_inf_pair`` prepends ``{0/1, 1/1}`` and
    ``include_q_pair`` appends the pair whose mediant is ``Q``; when ``Q`` is
    1/2 these coincide and the pair is returned once.
    """
    p, q = Q.num, Q.den
    if not (include_inf_pair or include_q_pair) and p in (1, q - 1):
        raise ExcludedSlope(f"p = {p} is congruent to +-1 mod q = {q}")
    path = stern_brocot_path(Q)
    chosen = list(path[1:-1])
    if include_inf_pair:
        chosen.insert(0, path[0])
    if include_q_pair and (len(path) > 1 or not include_inf_pair):
        chosen.append(path[-1])
    return [_build_pair(A, B, Q) for A, B in chosen]
