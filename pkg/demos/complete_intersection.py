# Unprojection of one complete intersection inside another, on the first
# step of the del Pezzo chain: a cubic surface containing the plane x = y = 0.

from kmunproj import CiData, PolyMatrix, cramer_certificate, make_context, unproject_ci

R = make_context("x y z w")
Q = PolyMatrix.from_rows(R, [["z*(x+z)", "-w*(y+w)"]])
w = [R.var("x"), R.var("y")]
data = CiData.from_matrix(Q, w)
print("v =", data.v[0])

res = unproject_ci(data, tname="s")
for p in res.ideal:
    print("  ", p)

# Why g w_j - g_j w_i lies in (v): the certificate spells out the combination.
cert = cramer_certificate(Q, w, 0, 1)
print("g1 w2 - g2 w1 =", cert.lhs)
print("              =", cert.combination(data.v))
