"""Color a few graphs and look at what comes back.

Run with ``python3 demos/01_coloring_walkthrough.py``.
"""

from isk4 import three_color, verify_coloring
from isk4.coloring import chromatic_oracle
from isk4.harness.generators import cycle_graph, gen_k33_glued, gen_wheel, petersen_graph

# An odd hole needs three colors.
c5 = cycle_graph(5)
res = three_color(c5)
print("C5:", res.status, res.coloring, "verified:", verify_coloring(c5, res.coloring))

# A wheel whose center sees every other vertex of an 8-vertex rim.  This one
# is bipartite, and the coloring finds that.
wheel = gen_wheel(4, [1, 1, 1, 1])
res = three_color(wheel)
print("C8 wheel:", res.status, "colors used:", res.colors_used, "chromatic number:", chromatic_oracle(wheel))

# Every vertex of C5 gets its own K3,3.  Minimum degree becomes 3, so no
# low-degree vertex can be peeled; the coloring goes through clique cutsets.
glued = gen_k33_glued(c5)
res = three_color(glued)
print("glued:", glued.order, "vertices, min degree", min(glued.degrees()),
      "->", res.status, "with", res.colors_used, "colors")

# Outside the class the coloring is refused with a checkable witness.
res = three_color(petersen_graph())
print("Petersen:", res.status, res.witness.to_dict())
