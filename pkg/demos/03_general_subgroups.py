# Non-cyclic subgroups: antiprism facets appear along the coordinate circles.
from collections import Counter

from lenshull import Degenerate, GroupSpec, canonicalize, compare, hull, predict
from lenshull.group import orbit_coords

gens = [("1/6", "1/4"), ("0", "1/2")]
spec = canonicalize(gens)
print("generators", gens, "->", spec, spec.degeneracy.value)

tri = predict(spec)
kinds = Counter((f.kind.value, len(f.vertices)) for f in tri.facets)
print("facet kinds (kind, #vertices):", dict(kinds))
print("oracle agrees:", compare(tri, hull(orbit_coords(spec))).ok)

# some orbits are not full-dimensional or not generic
for s in (GroupSpec(1, 7), GroupSpec(1, 2, 1, 5), GroupSpec(0, 1, 3, 4)):
    try:
        predict(s)
    except Degenerate as exc:
        res = hull(orbit_coords(s))
        print(f"{s}: {exc.degeneracy.value}, dimension {exc.dimension}, oracle says {res.degeneracy_note!r}")
