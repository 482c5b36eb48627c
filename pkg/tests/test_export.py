import json
import math

import numpy as np
import pytest

from lenshull.certify import attach_supports
from lenshull.export import (SphericalCell, dumps, facet_sets_from_json, to_csv, to_off4,
                             triangulation_document)
from lenshull.group import GroupSpec, orbit_coords
from lenshull.predictor import predict


@pytest.fixture(scope="module")
def doc27():
    return triangulation_document(predict(GroupSpec(2, 7)), samples=256)


def test_schema(doc27):
    assert set(doc27) == {"spec", "points", "pairs", "facets", "ridges", "report"}
    f = doc27["facets"][0]
    assert set(f) == {"vertices", "kind", "support", "cell"}
    assert set(f["support"]) == {"U", "Uprime", "V", "Vprime", "Z"}
    assert len(f["cell"]["center"]) == 4
    assert {"A", "B", "a", "b", "a'", "b'", "x", "x'", "y", "y'"} <= set(doc27["pairs"][0])


def test_round_trip(doc27):
    text = dumps(doc27)
    assert {tuple(v) for v in facet_sets_from_json(text)} == predict(GroupSpec(2, 7)).vertex_sets()
    assert json.loads(text)["spec"] == {"p": 2, "q": 7, "mu": 1, "nu": 1}


def test_byte_identical():
    a = dumps(triangulation_document(predict(GroupSpec(3, 11, 1, 2)), samples=128))
    b = dumps(triangulation_document(predict(GroupSpec(3, 11, 1, 2)), samples=128))
    assert a == b


def test_canonical_encoding():
    assert dumps({"b": 0.1, "a": [1, True, None, float("inf")]}) == '{"a":[1,true,null,"inf"],"b":0.10000000000000001}\n'
    assert float(json.loads(dumps([1 / 3]))[0]) == 1 / 3
    with pytest.raises(TypeError):
        dumps({1, 2})


def test_unit_sphere():
    tri = predict(GroupSpec(2, 5))
    doc = triangulation_document(tri, unit_sphere=True, samples=64)
    pts = np.array(doc["points"])
    assert np.allclose(np.linalg.norm(pts, axis=1), 1.0)
    for f in doc["facets"]:
        rho = np.array([f["support"][k] for k in ("U", "Uprime", "V", "Vprime")])
        assert np.allclose(pts[f["vertices"]] @ rho, f["support"]["Z"])
    off = to_off4(tri, unit_sphere=True).splitlines()
    assert math.isclose(np.linalg.norm([float(c) for c in off[2].split()]), 1.0)


def test_off4_and_csv():
    tri = predict(GroupSpec(2, 5))
    off = to_off4(tri).splitlines()
    assert off[:2] == ["4OFF", "5 5 0"] and len(off) == 2 + 5 + 5
    assert all(line.startswith("4 ") for line in off[7:])
    rows = to_csv(predict(GroupSpec(2, 7))).splitlines()
    assert rows[0] == "kind,vertices,Z,angular_radius" and len(rows) == 15


@pytest.mark.parametrize("spec", [GroupSpec(2, 7), GroupSpec(3, 8, 2, 1), GroupSpec(1, 3, 2, 3)], ids=str)
def test_spherical_cells_empty(spec):
    tri = attach_supports(predict(spec))
    pts = orbit_coords(spec)
    for f in tri.facets:
        cell = SphericalCell.from_support(f.support)
        assert abs(np.linalg.norm(cell.center) - 1) < 1e-12
        d = np.array([cell.angular_distance(x) for x in pts])
        on = np.zeros(len(pts), bool)
        on[list(f.vertices)] = True
        assert np.allclose(d[on], cell.radius, atol=1e-9)
        assert np.all(d[~on] > cell.radius + 1e-9)
