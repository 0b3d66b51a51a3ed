# Pfaffians, determinants and the two complexes used throughout.

from kmunproj import SkewMatrix, determinant, koszul_complex, make_context, pfaffian, pfaffians
from kmunproj.complexes import be_complex

ctx = make_context("a12 a13 a14 a23 a24 a34")
A = SkewMatrix.from_upper(ctx, [["a12", "a13", "a14"], ["a23", "a24"], ["a34"]])
print("Pf(A)     =", pfaffian(A))
print("Pf(A)^2 == det(A):", pfaffian(A) ** 2 == determinant(A))

# A 5x5 skew matrix has five 4x4 Pfaffians; with the signed row they give
# the first map of the Pfaffian complex, whose middle map is A itself.
R = make_context("x1 x2 x3 x4 z1 z2 z3 z4")
M = SkewMatrix.from_upper(R, [["x1", "x2", "x3", "x4"], [0, "z1", "z2"], ["z3", "z4"], [0]])
for i, p in enumerate(pfaffians(M)):
    print(f"Pf(M_{i + 1}) =", p)

L = be_complex(M)
print(L)            # construction already checked d o d = 0

K = koszul_complex([R.var(f"z{k}") for k in range(1, 5)])
print(K)
print(K.diff(4))
