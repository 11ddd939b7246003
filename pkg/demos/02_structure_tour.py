"""Walk through the structure checks on one wheel-based graph.

Run with ``python3 demos/02_structure_tour.py``.
"""

from isk4 import class_membership, decomposition_step, is_series_parallel
from isk4.harness.generators import gen_inclass_extension, gen_wheel
from isk4.sparse_cycles import sparse_cycle
from isk4.wheels import enumerate_holes, min_spoke_proper_wheel, proper_wheel_centers, verify_wheelmain

# Start from a five-spoke wheel and grow it randomly inside the class.
g = gen_inclass_extension(gen_wheel(5, [1, 2, 1, 2, 1]), extra=4, seed=3)
print(f"graph on {g.order} vertices, {g.size} edges")
print("class membership:", class_membership(g).verdict)

report = is_series_parallel(g)
print("series-parallel:", report.series_parallel)
if report.minor is not None:
    print("  K4 minor branch sets:", report.minor.to_dict()["branch_sets"])

holes, _ = enumerate_holes(g)
print(f"{len(holes)} holes, shortest {list(holes[0])}")

centers = proper_wheel_centers(g, holes)
print("proper wheel centers:", centers)
for c in centers:
    w = min_spoke_proper_wheel(g, c, holes)
    print(f"  center {c}: rim {list(w.rim)} spokes {list(w.spokes)}",
          "wheelmain ok" if verify_wheelmain(g, w, holes).ok else "wheelmain FAILED")

step = decomposition_step(g)
print("decomposition step:", step.kind)

# A cycle that avoids a vertex and has few branching vertices.
x = centers[0] if centers else 0
out = sparse_cycle(g, x, x)
print(f"sparse cycle around {x}:", out.to_dict())
