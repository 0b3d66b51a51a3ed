# Groebner bases and ideal membership.

from itertools import combinations

from kmunproj import Ideal, buchberger, make_context, normal_form, reduce_with_denominator
from kmunproj.corpus import original_tom
from kmunproj.unproj import unproject_tom

R = make_context("x y z", order="lex")
G = buchberger(Ideal(R, [R.parse("x^2 - y"), R.parse("x^3 - z")]))
print("twisted cubic:", [str(b) for b in G])
print(G.stats)

R2 = make_context("x y")
G2 = buchberger(Ideal(R2, [R2.parse("2*x - y")]))
print("x reduces to", reduce_with_denominator(R2.var("x"), G2), "i.e. y/2")

# g_i z_j - g_j z_i lies in the Pfaffian ideal of the original Tom.
d = original_tom()
g = unproject_tom(d).g
GP = buchberger(Ideal(d.ctx, d.pfaffians()))
for i, j in combinations(range(4), 2):
    print(f"  ({i + 1},{j + 1}):", normal_form(g[i] * d.z[j] - g[j] * d.z[i], GP))
