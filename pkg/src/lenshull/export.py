"""Serialization of triangulations: canonical JSON, 4OFF and CSV.

JSON is written with sorted keys and every float at 17 significant digits,
so output is byte-identical across runs.
"""
from __future__ import annotations

import csv
import io
import json
import math
from dataclasses import dataclass
from typing import List, Optional

import numpy as np

from .certify import SupportForm, attach_supports, certify_triangulation
from .group import orbit
from .predictor import Facet, Triangulation

SQRT2 = math.sqrt(2.0)


@dataclass(frozen=True)
class SphericalCell:
    """Delaunay cell on the sphere: circumcap centre and angular radius."""

    center: np.ndarray
    radius: float

    @classmethod
    def from_support(cls, form: SupportForm, sphere_radius: float = SQRT2) -> "SphericalCell":
        rho = form.rho
        norm = float(np.linalg.norm(rho))
        return cls(rho / norm, math.acos(form.Z / (sphere_radius * norm)))

    def angular_distance(self, x: np.ndarray) -> float:
        c = float(self.center @ x) / float(np.linalg.norm(x))
        return math.acos(max(-1.0, min(1.0, c)))


def _kind_dict(f: Facet) -> dict:
    out = {"type": f.kind.value, "translate": f.translate}
    if f.pair_index is not None:
        out["pair"] = f.pair_index
    if f.axis is not None:
        out["axis"] = f.axis
        out["size"] = f.size
    return out


def triangulation_document(tri: Triangulation, unit_sphere: bool = False,
                           samples: int = 4096, report: Optional[dict] = None) -> dict:
    """Everything certified about ``tri`` as a JSON-ready dict."""
    if any(f.support is None for f in tri.facets):
        tri = attach_supports(tri)
    scale = 1 / SQRT2 if unit_sphere else 1.0
    facets = []
    for f in tri.facets:
        entry = {"vertices": list(f.vertices), "kind": _kind_dict(f)}
        if f.support is not None:
            form = f.support
            entry["support"] = dict(form.as_dict(), Z=form.Z * scale)
            cell = SphericalCell.from_support(form)
            entry["cell"] = {"center": cell.center.tolist(), "radius": cell.radius}
        facets.append(entry)
    if report is None:
        report = certify_triangulation(tri, samples).as_dict()
    return {
        "spec": tri.spec.as_dict(),
        "points": [(pt.coords * scale).tolist() for pt in orbit(tri.spec)],
        "pairs": [p.as_dict() for p in tri.pairs],
        "facets": facets,
        "ridges": [{"ridge": sorted(r), "facets": list(inc)} for r, inc in tri.ridges.items()],
        "report": report,
    }


def _encode(obj) -> str:
    if isinstance(obj, bool) or obj is None:
        return json.dumps(obj)
    if isinstance(obj, (int, np.integer)):
        return str(int(obj))
    if isinstance(obj, (float, np.floating)):
        x = float(obj)
        if math.isfinite(x):
            return format(x, ".17g")
        return json.dumps(str(x))  # JSON has no infinities
    if isinstance(obj, str):
        return json.dumps(obj, ensure_ascii=False)
    if isinstance(obj, dict):
        items = sorted((str(k), v) for k, v in obj.items())
        return "{" + ",".join(f"{json.dumps(k)}:{_encode(v)}" for k, v in items) + "}"
    if isinstance(obj, (list, tuple)):
        return "[" + ",".join(_encode(v) for v in obj) + "]"
    raise TypeError(f"cannot encode {type(obj).__name__}")


def dumps(obj) -> str:
    """Canonical JSON: sorted keys, no whitespace, floats at 17 significant digits."""
    return _encode(obj) + "\n"


def facet_sets_from_json(text: str) -> List[tuple]:
    return [tuple(f["vertices"]) for f in json.loads(text)["facets"]]


def to_off4(tri: Triangulation, unit_sphere: bool = False) -> str:
    scale = 1 / SQRT2 if unit_sphere else 1.0
    pts = orbit(tri.spec)
    lines = ["4OFF", f"{len(pts)} {len(tri.facets)} 0"]
    lines += [" ".join(format(float(c) * scale, ".17g") for c in pt.coords) for pt in pts]
    lines += [" ".join(map(str, [len(f.vertices), *f.vertices])) for f in tri.facets]
    return "\n".join(lines) + "\n"


def to_csv(tri: Triangulation, unit_sphere: bool = False) -> str:
    if any(f.support is None for f in tri.facets):
        tri = attach_supports(tri)
    scale = 1 / SQRT2 if unit_sphere else 1.0
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["kind", "vertices", "Z", "angular_radius"])
    for f in tri.facets:
        cell = SphericalCell.from_support(f.support)
        writer.writerow([f.kind.value, " ".join(map(str, f.vertices)),
                         format(f.support.Z * scale, ".17g"), format(cell.radius, ".17g")])
    return buf.getvalue()
