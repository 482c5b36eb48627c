"""Brute-force convex hull facets by scanning every affinely independent
subset of points.

This is deliberately the dumbest correct algorithm: a candidate plane is
kept iff every point lies on one side of it.  Facets spanned by more points
than the dimension (antiprisms, prisms) come out merged because identity is
the full set of points on the plane.  Cost is O(N^(d+1)), fine up to N ~ 120
in R^4.
"""
from __future__ import annotations

import itertools
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Hashable, List, Optional, Sequence, Tuple

import numpy as np

DEFAULT_EPSILON = 1e-9
_CHUNK = 1 << 16


@dataclass(frozen=True)
class OracleFacet:
    vertices: Tuple[Hashable, ...]
    normal: np.ndarray
    offset: float


@dataclass
class HullResult:
    """``facets`` is filled only for full-dimensional (d = 4) input;
    ``lower_facets`` holds the facets of the hull inside its own affine span
    when 2 <= d < 4."""

    dimension: int
    facets: List[OracleFacet] = field(default_factory=list)
    lower_facets: List[OracleFacet] = field(default_factory=list)
    degeneracy_note: Optional[str] = None

    def vertex_sets(self) -> set:
        return {f.vertices for f in (self.facets or self.lower_facets)}


@dataclass
class DiffReport:
    only_predicted: List[Tuple]
    only_oracle: List[Tuple]

    @property
    def ok(self) -> bool:
        return not self.only_predicted and not self.only_oracle

    def as_list(self) -> list:
        return ([{"side": "predicted", "vertices": list(v)} for v in self.only_predicted]
                + [{"side": "oracle", "vertices": list(v)} for v in self.only_oracle])


def affine_basis(points: np.ndarray, epsilon: float = DEFAULT_EPSILON):
    """Centroid, orthonormal basis of the affine span, and its dimension."""
    centroid = points.mean(axis=0)
    centered = points - centroid
    _, sing, vt = np.linalg.svd(centered, full_matrices=False)
    scale = max(1.0, float(np.abs(centered).max(initial=0.0)))
    dim = int(np.sum(sing > epsilon * scale * max(1, len(points)) ** 0.5))
    return centroid, vt[:dim], dim


def affine_dimension(points, epsilon: float = DEFAULT_EPSILON) -> int:
    return affine_basis(np.asarray(points, dtype=float), epsilon)[2]


@lru_cache(maxsize=16)
def _combinations(n: int, k: int) -> np.ndarray:
    return np.array(list(itertools.combinations(range(n), k)), dtype=np.intp).reshape(-1, k)


def _normals(diffs: np.ndarray) -> np.ndarray:
    """Generalized cross product of the (d-1) rows of each (d-1) x d block."""
    k, m, d = diffs.shape
    out = np.empty((k, d))
    for i in range(d):
        minor = np.delete(diffs, i, axis=2)
        out[:, i] = (-1) ** i * (np.linalg.det(minor) if m else 1.0)
    return out


def _scan(pts: np.ndarray, subsets: np.ndarray, epsilon: float) -> List[Tuple[int, ...]]:
    base = pts[subsets[:, 0]]
    diffs = pts[subsets[:, 1:]] - base[:, None, :]
    normals = _normals(diffs)
    norms = np.linalg.norm(normals, axis=1)
    good = norms > epsilon
    normals = normals[good] / norms[good, None]
    offsets = np.einsum("ij,ij->i", normals, base[good])
    values = pts @ normals.T - offsets  # (N, K)
    below = np.all(values <= epsilon, axis=0)
    above = np.all(values >= -epsilon, axis=0)
    keep = below | above
    on = np.abs(values[:, keep]) <= epsilon
    return [tuple(np.flatnonzero(col)) for col in on.T]


def _facets_in_span(pts: np.ndarray, labels: Sequence, epsilon: float,
                    workers: int) -> List[OracleFacet]:
    n, d = pts.shape
    subsets = _combinations(n, d)
    chunks = [subsets[i:i + _CHUNK] for i in range(0, len(subsets), _CHUNK)]
    if workers > 1:
        with ThreadPoolExecutor(workers) as pool:
            parts = list(pool.map(lambda c: _scan(pts, c, epsilon), chunks))
    else:
        parts = [_scan(pts, c, epsilon) for c in chunks]
    vertex_sets = sorted({vs for part in parts for vs in part})
    facets = []
    for vs in vertex_sets:
        sub = pts[list(vs)]
        centre = sub.mean(axis=0)
        _, _, vt = np.linalg.svd(sub - centre)
        normal = vt[-1]
        # interior (the centroid, at 0 here) is strictly below the plane
        if normal @ centre < 0:
            normal = -normal
        facets.append(OracleFacet(tuple(sorted(labels[i] for i in vs)), normal, float(normal @ centre)))
    facets.sort(key=lambda f: f.vertices)
    return facets


def hull(points, labels: Optional[Sequence] = None, epsilon: float = DEFAULT_EPSILON,
         workers: int = 1) -> HullResult:
    """Facets of the convex hull of ``points`` in R^4.

    Returns the affine dimension and, when it is 4, every facet with its
    full vertex set and unit outward normal (``normal . x <= offset`` on all
    points).  For 2 <= d < 4 the facets of the hull inside its affine span
    are reported in ``lower_facets`` instead.
    """
    pts = np.asarray(points, dtype=float)
    if pts.ndim != 2 or pts.shape[1] != 4:
        raise ValueError("points must be an (N, 4) array")
    if len(pts) < 5:
        raise ValueError("need at least 5 points")
    labels = list(range(len(pts))) if labels is None else list(labels)
    if len(labels) != len(pts):
        raise ValueError("one label per point")
    centroid, basis, dim = affine_basis(pts, epsilon)
    if dim == 0:
        raise ValueError("all points coincide")
    if dim == 1:
        return HullResult(1, degeneracy_note="collinear points")
    local = (pts - centroid) @ basis.T
    facets = _facets_in_span(local, labels, epsilon, workers)
    # lift normals and offsets back to ambient coordinates
    lifted = []
    for f in facets:
        normal = f.normal @ basis
        lifted.append(OracleFacet(f.vertices, normal, float(f.offset + normal @ centroid)))
    if dim == 4:
        return HullResult(4, facets=lifted)
    note = {2: "planar polygon", 3: "3-dimensional polytope"}[dim]
    if dim == 3 and _is_antiprism([f.vertices for f in lifted]):
        note = "3-dimensional antiprism"
    return HullResult(dim, lower_facets=lifted, degeneracy_note=note)


def _is_antiprism(faces: List[Tuple]) -> bool:
    """Two disjoint n-gons (n >= 3) covering all 2n vertices, plus 2n
    triangles each meeting both.  For n = 3 (the octahedron) every face is a
    triangle, so any opposite pair serves as the two n-gons."""
    verts = set().union(*map(set, faces)) if faces else set()
    n, odd = divmod(len(verts), 2)
    if odd or n < 3 or len(faces) != 2 * n + 2:
        return False
    if any(sum(v in f for f in faces) != 4 for v in verts):
        return False
    big = [set(f) for f in faces if len(f) == n]
    for i, top in enumerate(big):
        for bottom in big[i + 1:]:
            if top | bottom != verts or top & bottom:
                continue
            rest = [set(f) for f in faces if set(f) not in (top, bottom)]
            if all(len(f) == 3 and f & top and f & bottom for f in rest):
                return True
    return False


def compare(predicted, oracle: HullResult) -> DiffReport:
    """Set difference of facet vertex sets in both directions.

    ``predicted`` is anything with a ``facets`` list whose items have a
    ``vertices`` tuple, or an iterable of vertex tuples.
    """
    facets = getattr(predicted, "facets", predicted)
    pred = {tuple(sorted(getattr(f, "vertices", f))) for f in facets}
    orac = oracle.vertex_sets()
    return DiffReport(sorted(pred - orac), sorted(orac - pred))
