import itertools
from collections import Counter

import numpy as np
import pytest

from lenshull.group import GroupSpec, orbit_coords
from lenshull.hull_oracle import affine_dimension, compare, hull
from lenshull.predictor import predict


def test_simplex():
    res = hull(orbit_coords(GroupSpec(2, 5)))
    assert res.dimension == 4
    assert res.vertex_sets() == {tuple(sorted(set(range(5)) - {k})) for k in range(5)}


def test_random_simplex_and_cube():
    rng = np.random.default_rng(0)
    res = hull(rng.normal(size=(5, 4)))
    assert len(res.facets) == 5
    cube = np.array(list(itertools.product([0.0, 1.0], repeat=4)))
    res = hull(cube)
    assert len(res.facets) == 8 and all(len(f.vertices) == 8 for f in res.facets)


def test_product_of_polygons_prisms():
    res = hull(orbit_coords(GroupSpec(0, 1, 3, 4)))
    assert res.dimension == 4
    assert Counter(len(f.vertices) for f in res.facets) == Counter({8: 3, 6: 4})


@pytest.mark.parametrize("p,q", [(1, 5), (4, 5), (1, 7)])
def test_planar_polygon(p, q):
    res = hull(orbit_coords(GroupSpec(p, q)))
    assert res.dimension == 2 and not res.facets
    assert len(res.lower_facets) == q


@pytest.mark.parametrize("nu", [3, 4, 5, 7])
def test_antiprism_detection(nu):
    # nu = 3 is the octahedron: all eight faces are triangles
    res = hull(orbit_coords(GroupSpec(1, 2, 1, nu)))
    assert res.dimension == 3
    assert res.degeneracy_note == "3-dimensional antiprism"
    assert len(res.lower_facets) == 2 * nu + 2


def test_prism_is_not_antiprism():
    prism = np.array([[np.cos(a), np.sin(a), z, 0.0] for z in (0.0, 1.0)
                      for a in np.arange(4) * np.pi / 2])
    res = hull(prism)
    assert res.dimension == 3 and res.degeneracy_note == "3-dimensional polytope"


def test_rejects_small_or_coincident_input():
    with pytest.raises(ValueError):
        hull(np.zeros((4, 4)))
    with pytest.raises(ValueError):
        hull(np.ones((6, 4)))


@pytest.mark.parametrize("spec", [GroupSpec(3, 11), GroupSpec(2, 7, 1, 2), GroupSpec(1, 3, 2, 2)], ids=str)
def test_facet_invariants(spec):
    pts = orbit_coords(spec)
    res = hull(pts)
    ridge_count = Counter()
    for f in res.facets:
        assert abs(np.linalg.norm(f.normal) - 1) < 1e-12 and f.offset > 0
        assert np.all(pts @ f.normal <= f.offset + 1e-9)
        sub = pts[list(f.vertices)]
        assert np.linalg.matrix_rank(sub[1:] - sub[0], tol=1e-9) == 3
    # ridge closure for simplicial facets
    if all(len(f.vertices) == 4 for f in res.facets):
        for f in res.facets:
            for r in itertools.combinations(f.vertices, 3):
                ridge_count[r] += 1
        assert set(ridge_count.values()) == {2}
    # every point is a vertex of some facet
    assert set().union(*map(set, res.vertex_sets())) == set(range(len(pts)))


def test_scale_invariance():
    pts = orbit_coords(GroupSpec(3, 13))
    assert hull(pts).vertex_sets() == hull(7.5 * pts, epsilon=7.5e-9).vertex_sets()


def test_worker_count_independent():
    pts = orbit_coords(GroupSpec(5, 13, 1, 2))
    a, b = hull(pts, workers=1), hull(pts, workers=4)
    assert [f.vertices for f in a.facets] == [f.vertices for f in b.facets]


def test_labels():
    res = hull(orbit_coords(GroupSpec(2, 5)), labels="abcde")
    assert ("a", "b", "c", "d") in res.vertex_sets()


def test_affine_dimension():
    assert affine_dimension(orbit_coords(GroupSpec(1, 9))) == 2


def test_compare():
    spec = GroupSpec(2, 7)
    tri, res = predict(spec), hull(orbit_coords(spec))
    assert compare(tri, res).ok and len(res.facets) == 14
    dropped = tri.facets[3].vertices
    diff = compare([f.vertices for f in tri.facets if f.vertices != dropped], res)
    assert diff.only_oracle == [dropped] and diff.only_predicted == []
