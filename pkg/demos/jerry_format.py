# Jerry unprojection. Here H is not divisible by a single x, so the
# numerators are split as h = x3 K + (a2 x2 - a3 x1) L and g = K + a1 L.

from kmunproj import unproject_jerry
from kmunproj.corpus import original_jerry
from kmunproj.unproj import jerry_generic

G = jerry_generic()
x3, P2 = G.ctx.var("x3"), G.P[1]
print("h_i == x3 g_i - L_i P_2 for all i:",
      all(G.h[i] == x3 * G.g[i] - G.L[i] * P2 for i in range(4)))

d = original_jerry()
print(d.matrix())
res = unproject_jerry(d)
for p in res.ideal:
    print("  ", p)
