# Writing a triangulation as canonical JSON, 4OFF and CSV.
import json
import tempfile
from pathlib import Path

from lenshull import GroupSpec, predict
from lenshull.export import dumps, facet_sets_from_json, to_csv, to_off4, triangulation_document

tri = predict(GroupSpec(2, 7))
out = Path(tempfile.mkdtemp())

text = dumps(triangulation_document(tri, unit_sphere=True))
(out / "t27.json").write_text(text)
(out / "t27.off").write_text(to_off4(tri))
(out / "t27.csv").write_text(to_csv(tri))

print("wrote", sorted(p.name for p in out.iterdir()), "to", out)
print("JSON round trip preserves facets:", set(facet_sets_from_json(text)) == tri.vertex_sets())
doc = json.loads(text)
cell = doc["facets"][0]["cell"]
print("first Delaunay cell: radius", cell["radius"], "centre", cell["center"])
print(to_csv(tri).splitlines()[:3])
