import math
from fractions import Fraction

import numpy as np
import pytest

from lenshull.group import (Degeneracy, GroupSpec, TorusPoint, angle_index, canonicalize,
                            lattice_data, orbit, orbit_angles, subgroup_closure)
from lenshull.predictor import spec_pairs
from lenshull.rationals import Fraction as Frac, InvariantViolation, derive_invariants

from oracles import brute_closure

TWO_PI = 2 * math.pi


def test_canonicalize_cyclic():
    spec = canonicalize([("1/5", "2/5")])
    assert spec == GroupSpec(2, 5, 1, 1)
    assert spec.degeneracy is Degeneracy.GENERIC


def test_canonicalize_product():
    gens = [("1/2", 0), (0, "1/3")]
    spec = canonicalize(gens)
    assert (spec.p, spec.q, spec.mu, spec.nu) == (0, 1, 2, 3)
    assert spec.degeneracy is Degeneracy.PRODUCT_OF_POLYGONS
    elems = brute_closure(gens)
    assert len(elems) == spec.order
    assert sum(1 for s, t in elems if t == 0) == 2 and sum(1 for s, t in elems if s == 0) == 3


def test_canonicalize_no_axis_elements():
    spec = canonicalize([("1/10", "3/10")])
    assert spec == GroupSpec(3, 10, 1, 1)
    assert spec.is_generic


def test_canonicalize_rejects_bad_input():
    with pytest.raises(ValueError):
        canonicalize([])
    with pytest.raises(TypeError):
        canonicalize([(0.1, 0.3)])


def test_closure_matches_brute_force():
    gens = [("1/6", "1/4"), ("1/3", 0)]
    assert set(subgroup_closure(gens)) == {TorusPoint(s, t) for s, t in brute_closure(gens)}


@pytest.mark.parametrize("q", range(1, 31))
def test_canonicalize_inverts_model(q):
    for p in range(q):
        if math.gcd(p, q) != 1:
            continue
        for mu in range(1, 5):
            for nu in range(1, 5):
                spec = GroupSpec(p, q, mu, nu)
                assert canonicalize(spec.generators()) == spec


@pytest.mark.parametrize("spec,expected", [
    (GroupSpec(1, 5), Degeneracy.TWO_CAPS),
    (GroupSpec(4, 5), Degeneracy.TWO_CAPS),
    (GroupSpec(2, 5), Degeneracy.GENERIC),
    (GroupSpec(0, 1, 3, 3), Degeneracy.PRODUCT_OF_POLYGONS),
    (GroupSpec(1, 2, 1, 3), Degeneracy.ANTIPRISM_ONLY),
    (GroupSpec(1, 2, 4, 1), Degeneracy.ANTIPRISM_ONLY),
    (GroupSpec(1, 2, 2, 2), Degeneracy.GENERIC),
    (GroupSpec(1, 3, 1, 2), Degeneracy.GENERIC),
    (GroupSpec(0, 1), Degeneracy.LOW_ORDER),
])
def test_degeneracy(spec, expected):
    assert spec.degeneracy is expected


def test_spec_rejects_non_coprime():
    with pytest.raises(ValueError):
        GroupSpec(2, 4)


def test_orbit_cyclic():
    pts = orbit(GroupSpec(2, 5))
    assert [pt.angles for pt in pts] == [TorusPoint.of(Fraction(k, 5), Fraction(2 * k, 5)) for k in range(5)]
    assert np.allclose(pts[0].coords, [1, 0, 1, 0])


def test_orbit_product_of_polygons():
    pts = orbit(GroupSpec(0, 1, 2, 3))
    expected = {TorusPoint.of(Fraction(j, 2), Fraction(l, 3)) for j in range(2) for l in range(3)}
    assert {pt.angles for pt in pts} == expected and len(pts) == 6


@pytest.mark.parametrize("spec", [GroupSpec(3, 7, 2, 3), GroupSpec(5, 12, 3, 1), GroupSpec(1, 2, 2, 2)])
def test_orbit_size_and_sphere(spec):
    pts = orbit(spec)
    assert len(pts) == spec.order
    assert len({pt.angles for pt in pts}) == spec.order
    for pt in pts:
        c = pt.coords
        assert abs(c[0] ** 2 + c[1] ** 2 - 1) < 1e-12 and abs(c[2] ** 2 + c[3] ** 2 - 1) < 1e-12
        assert abs(np.linalg.norm(c) - math.sqrt(2)) < 1e-12


def test_orbit_is_closed_under_group():
    spec = GroupSpec(3, 7, 2, 3)
    angles = set(orbit_angles(spec))
    for g in spec.generators():
        assert {x + g for x in angles} == angles


def test_lattice_data_two_fifths():
    spec = GroupSpec(2, 5)
    pair = derive_invariants(Frac(0, 1), Frac(1, 2), Frac(2, 5))
    data = lattice_data(spec, pair)
    assert np.allclose(data.u, [TWO_PI / 5, 2 * TWO_PI / 5])
    assert np.allclose(data.v, [2 * TWO_PI / 5, -TWO_PI / 5])
    assert abs(abs(data.det) - TWO_PI ** 2 / 5) < 1e-12


def test_lattice_data_rejects_bad_pair():
    # {0/1, 1/2} is not a valid pair for 1/3 (both neighbors of Q): the
    # lattice is fine but for 1/7 the pair {0, 1/1} covers too long an ordinate
    spec = GroupSpec(3, 7)
    pair = derive_invariants(Frac(0, 1), Frac(1, 1), Frac(3, 7))
    with pytest.raises(InvariantViolation):
        lattice_data(spec, pair)


def _grid():
    specs = []
    for q in range(2, 25):
        for p in range(1, q):
            if math.gcd(p, q) != 1:
                continue
            for mu in range(1, 4):
                for nu in range(1, 4):
                    spec = GroupSpec(p, q, mu, nu)
                    if spec.is_generic:
                        specs.append(spec)
    return specs


@pytest.mark.parametrize("spec", _grid(), ids=str)
def test_lattice_properties(spec):
    index = angle_index(spec)
    for pair in spec_pairs(spec):
        data = lattice_data(spec, pair)
        assert abs(abs(data.det) - TWO_PI ** 2 / spec.order) < 1e-12
        # ordinates have opposite signs
        assert data.u[1] * data.v[1] < 0
        # all four parallelogram corners are group elements
        assert all(v in index for v in data.vertices)
        half = np.maximum(np.abs(data.u + data.v), np.abs(data.u - data.v)) / 2
        assert np.all(half < math.pi)
