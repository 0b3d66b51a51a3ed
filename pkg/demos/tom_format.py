# Tom unprojection: generic formulas once, then substitution.

import time

from kmunproj import unproject_tom
from kmunproj.corpus import explicit_example, original_tom
from kmunproj.unproj import tom_generic

t0 = time.perf_counter()
G = tom_generic()
print(f"generic ring: {len(G.ctx)} variables, g_i with {len(G.g[0])} terms each "
      f"({time.perf_counter() - t0:.2f}s)")
print("Q row 1:", [str(q) for q in G.Q.row(0)])

# The original Tom matrix: a 5x5 skew matrix whose lower 4x4 block is linear in z.
d = original_tom()
print(d.matrix())
res = unproject_tom(d)
print("g =", [str(g) for g in res.g])
for p in res.unprojection_equations:
    print("  ", p)

# An example where the first row is not made of variables.
res = unproject_tom(explicit_example())
print("g =", [str(g) for g in res.g])
