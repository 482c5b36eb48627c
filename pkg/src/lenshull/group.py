"""Finite subgroups of the torus (R/Z)^2 and their orbits in R^4.

Every finite subgroup is the preimage of the cyclic group
``{(k/q, kp/q)}`` under ``(s, t) -> (mu*s, nu*t)``.  Angles are kept as exact
fractions of a full turn; floating point appears only in :func:`orbit` and
:func:`lattice_data`.
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Dict, Iterable, List, NamedTuple, Sequence, Tuple

import numpy as np

from .rationals import FareyPair, InvariantViolation

MAX_GROUP_ORDER = 10**6
TWO_PI = 2.0 * math.pi


class Degeneracy(str, enum.Enum):
    GENERIC = "Generic"
    TWO_CAPS = "TwoCaps"
    PRODUCT_OF_POLYGONS = "ProductOfPolygons"
    ANTIPRISM_ONLY = "AntiprismOnly"
    LOW_ORDER = "LowOrder"


class TorusPoint(NamedTuple):
    """A point of (R/Z)^2; coordinates are fractions of a full turn."""

    s: Fraction
    t: Fraction

    @classmethod
    def of(cls, s, t) -> "TorusPoint":
        return cls(Fraction(s) % 1, Fraction(t) % 1)

    def __add__(self, other):  # type: ignore[override]
        return TorusPoint((self.s + other.s) % 1, (self.t + other.t) % 1)

    def __neg__(self):
        return TorusPoint(-self.s % 1, -self.t % 1)

    def coords(self) -> np.ndarray:
        return embed(float(self.s), float(self.t))


def embed(s: float, t: float) -> np.ndarray:
    """Standard embedding of the torus: ``(cos 2pi s, sin 2pi s, cos 2pi t, sin 2pi t)``."""
    u, v = TWO_PI * s, TWO_PI * t
    return np.array([math.cos(u), math.sin(u), math.cos(v), math.sin(v)])


@dataclass(frozen=True)
class GroupSpec:
    """Canonical invariants ``(p, q, mu, nu)`` of a finite torus subgroup."""

    p: int
    q: int
    mu: int = 1
    nu: int = 1

    def __post_init__(self):
        if self.q < 1 or self.mu < 1 or self.nu < 1:
            raise ValueError("q, mu, nu must be positive")
        object.__setattr__(self, "p", self.p % self.q)
        if math.gcd(self.p, self.q) != 1:
            raise ValueError(f"p = {self.p} is not coprime to q = {self.q}")

    @property
    def order(self) -> int:
        return self.q * self.mu * self.nu

    @property
    def p_inverse(self) -> int:
        return pow(self.p, -1, self.q) if self.q > 1 else 0

    @property
    def degeneracy(self) -> Degeneracy:
        p, q, mu, nu = self.p, self.q, self.mu, self.nu
        if self.order == 1:
            return Degeneracy.LOW_ORDER
        if q == 1:
            return Degeneracy.PRODUCT_OF_POLYGONS
        if mu == nu == 1:
            return Degeneracy.TWO_CAPS if p in (1, q - 1) else Degeneracy.GENERIC
        if (p, q) == (1, 2) and (mu == 1 or nu == 1):
            return Degeneracy.ANTIPRISM_ONLY
        if self.order < 5:
            return Degeneracy.LOW_ORDER
        return Degeneracy.GENERIC

    @property
    def is_generic(self) -> bool:
        return self.degeneracy is Degeneracy.GENERIC

    def generators(self) -> List[TorusPoint]:
        """A generating set of the model group with these invariants."""
        return [
            TorusPoint.of(Fraction(1, self.q * self.mu), Fraction(self.p, self.q * self.nu)),
            TorusPoint.of(Fraction(1, self.mu), 0),
            TorusPoint.of(0, Fraction(1, self.nu)),
        ]

    def as_dict(self) -> dict:
        return {"p": self.p, "q": self.q, "mu": self.mu, "nu": self.nu}


def _as_fraction(value) -> Fraction:
    if isinstance(value, float):
        raise TypeError("angles must be exact rationals, not floats")
    return Fraction(value)


def subgroup_closure(generators: Iterable[TorusPoint], limit: int = MAX_GROUP_ORDER) -> List[TorusPoint]:
    """Breadth-first closure of ``generators`` under addition mod 1."""
    gens = [TorusPoint.of(_as_fraction(g[0]), _as_fraction(g[1])) for g in generators]
    # work in (Z/L)^2 with L the common denominator
    L = math.lcm(1, *(c.denominator for g in gens for c in g))
    steps = [(int(g.s * L), int(g.t * L)) for g in gens]
    seen = {(0, 0)}
    frontier = [(0, 0)]
    while frontier:
        nxt = []
        for s, t in frontier:
            for ds, dt in steps:
                y = ((s + ds) % L, (t + dt) % L)
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
                    if len(seen) > limit:
                        raise ValueError(f"subgroup has more than {limit} elements")
        frontier = nxt
    return [TorusPoint(Fraction(s, L), Fraction(t, L)) for s, t in sorted(seen)]


def canonicalize(generators: Sequence) -> GroupSpec:
    """Close ``generators`` into a finite subgroup and return its invariants.

    ``mu`` and ``nu`` count the elements on the two coordinate circles, and
    ``p`` is read off the unique element whose image under
    ``(s, t) -> (mu*s, nu*t)`` has first coordinate ``1/q``.
    """
    if not generators:
        raise ValueError("need at least one generator")
    elements = subgroup_closure(generators)
    mu = sum(1 for g in elements if g.t == 0)
    nu = sum(1 for g in elements if g.s == 0)
    q, rem = divmod(len(elements), mu * nu)
    if rem:
        raise InvariantViolation("group order is not a multiple of mu*nu")
    if q == 1:
        return GroupSpec(0, 1, mu, nu)
    target = Fraction(1, q)
    for g in elements:
        if (mu * g.s) % 1 == target:
            p = (nu * g.t * q) % q
            if p.denominator != 1:
                raise InvariantViolation("image is not contained in the cyclic model")
            return GroupSpec(int(p), q, mu, nu)
    raise InvariantViolation("no element maps to the generator of the cyclic model")


@dataclass(frozen=True)
class OrbitPoint:
    index: int
    label: Tuple[int, int, int]  # (j1 mod mu, j2 mod nu, k mod q)
    angles: TorusPoint
    coords: np.ndarray


@lru_cache(maxsize=64)
def orbit_angles(spec: GroupSpec) -> Tuple[TorusPoint, ...]:
    """Group elements in label order ``(j1, j2, k)``, lexicographic."""
    p, q, mu, nu = spec.p, spec.q, spec.mu, spec.nu
    return tuple(
        TorusPoint.of(Fraction(k + j1 * q, q * mu), Fraction(k * p + j2 * q, q * nu))
        for j1 in range(mu) for j2 in range(nu) for k in range(q)
    )


def orbit(spec: GroupSpec) -> List[OrbitPoint]:
    """The orbit of ``(1, 0, 1, 0)``: ``q*mu*nu`` points on the sphere of radius sqrt(2)."""
    mu, nu, q = spec.mu, spec.nu, spec.q
    labels = [(j1, j2, k) for j1 in range(mu) for j2 in range(nu) for k in range(q)]
    return [
        OrbitPoint(i, lab, ang, ang.coords())
        for i, (lab, ang) in enumerate(zip(labels, orbit_angles(spec)))
    ]


@lru_cache(maxsize=64)
def orbit_coords(spec: GroupSpec) -> np.ndarray:
    """Orbit coordinates as a read-only ``(q mu nu, 4)`` array."""
    coords = np.array([ang.coords() for ang in orbit_angles(spec)])
    coords.flags.writeable = False
    return coords


def angle_index(spec: GroupSpec) -> Dict[TorusPoint, int]:
    """Map each group element to its orbit index."""
    return {ang: i for i, ang in enumerate(orbit_angles(spec))}


@dataclass(frozen=True)
class LatticeData:
    """The fundamental parallelogram ``(0, u, u+v, v)`` of a Farey pair,
    lifted to R^2 (angles in radians)."""

    u: np.ndarray
    v: np.ndarray
    center_bar: np.ndarray
    center: TorusPoint
    vertices: Tuple[TorusPoint, TorusPoint, TorusPoint, TorusPoint]

    @property
    def det(self) -> float:
        return float(self.u[0] * self.v[1] - self.u[1] * self.v[0])


def pair_lifts(spec: GroupSpec, pair: FareyPair) -> Tuple[Tuple[Fraction, Fraction], Tuple[Fraction, Fraction]]:
    """Exact lifts of ``u`` and ``v`` in turns (not reduced mod 1)."""
    p, q, mu, nu = spec.p, spec.q, spec.mu, spec.nu
    u = (Fraction(pair.a, q * mu), Fraction(pair.a * p - pair.alpha * q, q * nu))
    v = (Fraction(pair.b, q * mu), Fraction(pair.b * p - pair.beta * q, q * nu))
    return u, v


def lattice_data(spec: GroupSpec, pair: FareyPair, tol: float = 1e-12) -> LatticeData:
    """Parallelogram data of ``pair``.

    Raises :class:`InvariantViolation` if ``(u, v)`` is not a lattice basis
    or the parallelogram is not strictly inside the square of side ``2pi``
    centred at its own centre.
    """
    (us, ut), (vs, vt) = pair_lifts(spec, pair)
    u = TWO_PI * np.array([float(us), float(ut)])
    v = TWO_PI * np.array([float(vs), float(vt)])
    cbar = 0.5 * (u + v)
    center = TorusPoint.of((us + vs) / 2, (ut + vt) / 2)
    verts = (TorusPoint.of(0, 0), TorusPoint.of(us, ut), TorusPoint.of(vs, vt),
             TorusPoint.of(us + vs, ut + vt))
    data = LatticeData(u, v, cbar, center, verts)

    exact_det = us * vt - ut * vs
    if abs(exact_det) != Fraction(1, spec.order):
        raise InvariantViolation(f"(u, v) is not a lattice basis: det = {exact_det}")
    if abs(abs(data.det) - TWO_PI**2 / spec.order) > tol:
        raise InvariantViolation("floating point determinant drifted")
    # parallelogram vertices relative to its centre are +-(u+v)/2, +-(u-v)/2
    half_extent = np.maximum(np.abs(u + v), np.abs(u - v)) / 2
    if not np.all(half_extent < math.pi - tol):
        raise InvariantViolation(f"parallelogram leaves the square: {half_extent}")
    return data
