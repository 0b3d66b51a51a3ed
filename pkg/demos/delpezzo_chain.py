# Serial unprojection X3 -> X4 -> X5 -> X6 of del Pezzo surfaces, each step
# compared with the expected ideal by Groebner bases.

from kmunproj import ideal_equal
from kmunproj.corpus import delpezzo_chain

for (res, expected, var), label in zip(delpezzo_chain(), ("X4", "X5", "X6")):
    verdict = ideal_equal(res.ideal, expected, flip=var)
    print(f"{label}: {len(res.ideal)} equations in {res.ctx.names}, {verdict}")
    for p in res.unprojection_equations:
        print("    ", p)
