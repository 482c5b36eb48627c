# Predicted facets of a cyclic orbit, checked against the brute-force hull.
import time

from lenshull import GroupSpec, compare, hull, predict
from lenshull.group import orbit_coords

spec = GroupSpec(3, 11)
tri = predict(spec)
print(f"{spec}: {len(tri.facets)} predicted facets")
for f in tri.facets[:6]:
    print("  ", f.vertices, f.kind.value, "pair", f.pair_index)

t0 = time.perf_counter()
oracle = hull(orbit_coords(spec))
print(f"oracle: {len(oracle.facets)} facets in {time.perf_counter() - t0:.2f}s")
diff = compare(tri, oracle)
print("diff empty:", diff.ok)

# every ridge is shared by two facets and the dual graph is connected
print("pseudo-manifold:", tri.is_pseudomanifold(), " connected:", tri.is_connected())
