"""Predicted facets of the convex hull of a torus-subgroup orbit, with the
ridge-adjacency structure.

Facets are vertex-label sets (orbit indices).  Tetrahedra come from Farey
pairs; when ``nu > 1`` (resp. ``mu > 1``) there are also antiprism cells
spanned by a coset of the ``nu`` (resp. ``mu``) axis subgroup and the next
layer of points.
"""
from __future__ import annotations

import enum
from collections import defaultdict
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, FrozenSet, List, Optional, Sequence, Tuple

from .group import (Degeneracy, GroupSpec, TorusPoint, angle_index, orbit_angles,
                    orbit_coords, pair_lifts)
from .hull_oracle import affine_dimension
from .rationals import FareyPair, Fraction as Frac, continued_fraction, enumerate_pairs


class Degenerate(ValueError):
    """The orbit does not fall under the generic facet description."""

    def __init__(self, spec: GroupSpec, dimension: Optional[int] = None):
        self.spec = spec
        self.degeneracy = spec.degeneracy
        self.dimension = dimension
        super().__init__(f"{spec} is degenerate ({self.degeneracy.value}), hull dimension {dimension}")


class FacetKind(str, enum.Enum):
    TETRA = "Tetra"
    ANTIPRISM = "Antiprism"
    PRISM = "Prism"


@dataclass(frozen=True)
class Facet:
    vertices: Tuple[int, ...]
    kind: FacetKind
    ridges: Tuple[FrozenSet[int], ...] = field(compare=False, repr=False)
    pair_index: Optional[int] = None      # Tetra: index into Triangulation.pairs
    translate: int = 0                    # orbit index of the translating element
    axis: Optional[str] = None            # Antiprism/Prism: "mu" or "nu"
    size: Optional[int] = None
    support: Optional[object] = field(default=None, compare=False, repr=False)


@dataclass
class Triangulation:
    spec: GroupSpec
    pairs: List[FareyPair]
    facets: List[Facet]
    ridges: Dict[FrozenSet[int], Tuple[int, ...]]

    def vertex_sets(self) -> set:
        return {f.vertices for f in self.facets}

    def is_pseudomanifold(self) -> bool:
        return all(len(inc) == 2 for inc in self.ridges.values())

    def adjacency(self) -> Dict[int, set]:
        adj: Dict[int, set] = defaultdict(set)
        for inc in self.ridges.values():
            for i in inc:
                adj[i].update(j for j in inc if j != i)
        return adj

    def is_connected(self) -> bool:
        if not self.facets:
            return False
        adj = self.adjacency()
        seen, stack = {0}, [0]
        while stack:
            for j in adj[stack.pop()]:
                if j not in seen:
                    seen.add(j)
                    stack.append(j)
        return len(seen) == len(self.facets)


def _ridge_map(facets: Sequence[Facet]) -> Dict[FrozenSet[int], Tuple[int, ...]]:
    incidence: Dict[FrozenSet[int], List[int]] = defaultdict(list)
    for i, f in enumerate(facets):
        for r in f.ridges:
            incidence[r].append(i)
    return {r: tuple(inc) for r, inc in sorted(incidence.items(), key=lambda kv: sorted(kv[0]))}


def _tetra_ridges(verts: Sequence[int]) -> Tuple[FrozenSet[int], ...]:
    return tuple(frozenset(verts[:i] + verts[i + 1:]) for i in range(4))


def _antiprism_cell(spec: GroupSpec, axis: str):
    """Base antiprism as two angle lists ``A_k``, ``B_k`` where ``B_k`` sits
    between ``A_k`` and ``A_{k+1}``."""
    p, q, mu, nu = spec.p, spec.q, spec.mu, spec.nu
    if axis == "nu":
        A = [TorusPoint.of(0, Fraction(k, nu)) for k in range(nu)]
        B = [TorusPoint.of(Fraction(1, q * mu), Fraction(p + k * q, q * nu)) for k in range(nu)]
    else:
        # the layer t = 1/(q nu) has first coordinate p^{-1}/q mod 1/mu
        pinv = spec.p_inverse
        A = [TorusPoint.of(Fraction(k, mu), 0) for k in range(mu)]
        B = [TorusPoint.of(Fraction(pinv + k * q, q * mu), Fraction(1, q * nu)) for k in range(mu)]
    n = len(A)
    faces = []
    for k in range(n):
        faces.append((A[k], A[(k + 1) % n], B[k]))
        faces.append((B[k], B[(k + 1) % n], A[(k + 1) % n]))
    if n > 2:
        faces.extend([tuple(A), tuple(B)])
    return A + B, faces


def _translates(spec: GroupSpec, index: Dict[TorusPoint, int], cell, faces, kind, **extra) -> List[Facet]:
    # group elements live on the grid (Z/(q mu)) x (Z/(q nu)); use integer coordinates
    m, n = spec.q * spec.mu, spec.q * spec.nu

    def grid(x):
        return int(x.s * m), int(x.t * n)

    lookup = {grid(x): i for x, i in index.items()}
    cell_g = [grid(x) for x in cell]
    faces_g = [[grid(x) for x in face] for face in faces]
    out = []
    for g, gi in index.items():
        gs, gt = grid(g)

        def img(x):
            return lookup[(x[0] + gs) % m, (x[1] + gt) % n]

        verts = tuple(sorted(img(x) for x in cell_g))
        ridges = tuple(frozenset(img(x) for x in face) for face in faces_g)
        out.append(Facet(verts, kind, ridges, translate=gi, **extra))
    return out


def tetra_cell(spec: GroupSpec, pair: FareyPair) -> List[TorusPoint]:
    """Base tetrahedron ``0, u, v, u+v`` of a Farey pair."""
    (us, ut), (vs, vt) = pair_lifts(spec, pair)
    return [TorusPoint.of(0, 0), TorusPoint.of(us, ut), TorusPoint.of(vs, vt),
            TorusPoint.of(us + vs, ut + vt)]


def spec_pairs(spec: GroupSpec) -> List[FareyPair]:
    Q = Frac(spec.p, spec.q)
    return enumerate_pairs(Q, include_inf_pair=spec.nu > 1, include_q_pair=spec.mu > 1)


def _dedup(facets: List[Facet]) -> List[Facet]:
    unique: Dict[Tuple[int, ...], Facet] = {}
    for f in facets:
        unique.setdefault(f.vertices, f)
    return sorted(unique.values(), key=lambda f: f.vertices)


def predict(spec: GroupSpec) -> Triangulation:
    """All facets of the hull for a generic spec.

    Raises :class:`Degenerate` (carrying the hull dimension) otherwise.
    """
    if not spec.is_generic:
        raise Degenerate(spec, affine_dimension(orbit_coords(spec)))
    index = angle_index(spec)
    pairs = spec_pairs(spec)
    facets: List[Facet] = []
    for i, pair in enumerate(pairs):
        cell = tetra_cell(spec, pair)
        faces = [tuple(cell[:j] + cell[j + 1:]) for j in range(4)]
        facets += _translates(spec, index, cell, faces, FacetKind.TETRA, pair_index=i)
    for axis, size in (("nu", spec.nu), ("mu", spec.mu)):
        if size > 1:
            cell, faces = _antiprism_cell(spec, axis)
            facets += _translates(spec, index, cell, faces, FacetKind.ANTIPRISM, axis=axis, size=size)
    facets = _dedup(facets)
    return Triangulation(spec, pairs, facets, _ridge_map(facets))


def product_prisms(spec: GroupSpec) -> Triangulation:
    """Facets of the product of a regular ``mu``-gon and ``nu``-gon
    (``p/q = 0``, ``mu, nu >= 3``): ``mu`` ``nu``-prisms and ``nu`` ``mu``-prisms."""
    mu, nu = spec.mu, spec.nu
    if spec.q != 1 or mu < 3 or nu < 3:
        raise Degenerate(spec, affine_dimension(orbit_coords(spec)))
    index = angle_index(spec)

    def pt(j, l):
        return index[TorusPoint.of(Fraction(j, mu), Fraction(l, nu))]

    facets = []
    for j in range(mu):
        verts = [pt(j + e, l) for e in (0, 1) for l in range(nu)]
        ridges = [frozenset(pt(j + e, l) for l in range(nu)) for e in (0, 1)]
        ridges += [frozenset(pt(j + e, l + f) for e in (0, 1) for f in (0, 1)) for l in range(nu)]
        facets.append(Facet(tuple(sorted(verts)), FacetKind.PRISM, tuple(ridges), axis="mu", size=nu))
    for l in range(nu):
        verts = [pt(j, l + e) for e in (0, 1) for j in range(mu)]
        ridges = [frozenset(pt(j, l + e) for j in range(mu)) for e in (0, 1)]
        ridges += [frozenset(pt(j + f, l + e) for e in (0, 1) for f in (0, 1)) for j in range(mu)]
        facets.append(Facet(tuple(sorted(verts)), FacetKind.PRISM, tuple(ridges), axis="nu", size=mu))
    facets = _dedup(facets)
    return Triangulation(spec, [], facets, _ridge_map(facets))


def predicted_facet_count(spec: GroupSpec) -> int:
    """Closed-form facet count of :func:`predict`.

    ``q(n-3)`` in the cyclic case; in general every Farey pair contributes a
    free orbit of ``q mu nu`` tetrahedra, and the ``nu``-antiprism (resp.
    ``mu``-antiprism) is fixed by the ``nu`` (resp. ``mu``) axis rotations.
    """
    if not spec.is_generic:
        raise Degenerate(spec)
    p, q, mu, nu = spec.p, spec.q, spec.mu, spec.nu
    n = continued_fraction(Frac(p, q)).n
    pairs = (n - 3) + (nu > 1) + (mu > 1)
    count = pairs * q * mu * nu
    if nu > 1:
        count += q * mu
    if mu > 1:
        count += q * nu
    return count
