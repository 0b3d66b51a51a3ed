import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from kmunproj.linalg import (NotSkewError, PolyMatrix, ShapeError, SkewMatrix, all_minors, colex_subsets,
                             det_bareiss, det_cofactor, det_minors, determinant, pfaffian, pfaffians,
                             signed_pfaffian_row, wedge)
from kmunproj.ring import make_context
from kmunproj.unproj import jerry_generic, tom_generic

from conftest import leibniz_det, matching_pfaffian, random_poly

CTX = make_context("x y z")


def generic_skew(n):
    names = [f"a{i}{j}" for i in range(1, n + 1) for j in range(i + 1, n + 1)]
    ctx = make_context(names)
    upper = [[ctx.var(f"a{i}{j}") for j in range(i + 1, n + 1)] for i in range(1, n)]
    return SkewMatrix.from_upper(ctx, upper)


def random_matrix(rng, n, m=None):
    return PolyMatrix.from_rows(CTX, [[random_poly(rng, CTX) for _ in range(m or n)] for _ in range(n)])


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 2 ** 32), st.integers(1, 6))
def test_determinant_matches_leibniz(seed, n):
    m = random_matrix(random.Random(seed), n)
    want = leibniz_det(m.tolist(), CTX.one())
    assert determinant(m) == want
    assert det_bareiss(m) == want
    assert det_minors(m) == want
    if n <= 5:
        assert det_cofactor(m) == want


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 2 ** 32), st.sampled_from([2, 4, 6]))
def test_pfaffian_matches_matchings_and_squares_to_det(seed, n):
    rng = random.Random(seed)
    upper = [[random_poly(rng, CTX, max_deg=1) for _ in range(i + 1, n)] for i in range(n - 1)]
    A = SkewMatrix.from_upper(CTX, upper)
    pf = pfaffian(A)
    assert pf == matching_pfaffian(A.tolist(), CTX.one())
    assert pf ** 2 == determinant(A)


def test_small_determinants():
    ctx = make_context("a b c d p")
    a, b, c, d, p = ctx.gens()
    assert determinant(PolyMatrix.from_rows(ctx, [[p]])) == p
    assert determinant(PolyMatrix.from_rows(ctx, [[a, b], [c, d]])) == a * d - b * c
    assert determinant(PolyMatrix.zeros(ctx, 0, 0)) == ctx.one()
    with pytest.raises(ShapeError):
        determinant(PolyMatrix.zeros(ctx, 2, 3))


def test_generic_four_by_four():
    A = generic_skew(4)
    p = A.ctx.parse
    pf = p("a12*a34 - a13*a24 + a14*a23")
    assert pfaffian(A) == pf
    assert determinant(A) == pf ** 2
    assert pfaffian(SkewMatrix.from_upper(CTX, [[0, 0, 0], [0, 0], [0]])).is_zero()


def test_two_by_two_pfaffian():
    ctx = make_context("a")
    assert pfaffian(SkewMatrix.from_upper(ctx, [["a"]])) == ctx.var("a")


def test_three_by_three_pfaffians():
    ctx = make_context("a b c")
    A = SkewMatrix.from_upper(ctx, [["a", "b"], ["c"]])
    assert pfaffians(A) == [ctx.var("c"), ctx.var("b"), ctx.var("a")]
    for i, q in enumerate(pfaffians(A)):
        assert q ** 2 == determinant(A.delete_index(i))


def test_pfaffian_row_annihilates_the_matrix():
    A = generic_skew(5)
    row = PolyMatrix.row_vector(A.ctx, signed_pfaffian_row(A))
    assert (row @ A).is_zero()


def test_generic_tom_and_jerry_pfaffians():
    G = tom_generic()
    p = G.ctx.parse
    a = {}
    for i, j in ((2, 3), (2, 4), (2, 5), (3, 4), (3, 5), (4, 5)):
        a[(i, j)] = "(" + " + ".join(f"a{i}{j}_{k}*z{k}" for k in range(1, 5)) + ")"
    assert G.P[0] == p(f"{a[2, 3]}*{a[4, 5]} - {a[2, 4]}*{a[3, 5]} + {a[2, 5]}*{a[3, 4]}")
    assert G.P[1] == p(f"x2*{a[4, 5]} - x3*{a[3, 5]} + x4*{a[3, 4]}")
    J = jerry_generic()
    assert J.P[0] == J.ctx.parse(
        "(b1_1*z1 + b1_2*z2 + b1_3*z3 + b1_4*z4)*x3 - (b2_1*z1 + b2_2*z2 + b2_3*z3 + b2_4*z4)*x2"
        " + (b3_1*z1 + b3_2*z2 + b3_3*z3 + b3_4*z4)*x1")


def test_skew_validation():
    with pytest.raises(NotSkewError):
        SkewMatrix.from_matrix(PolyMatrix.from_rows(CTX, [["x", "y"], ["y", 0]]))
    with pytest.raises(NotSkewError):
        SkewMatrix.from_matrix(PolyMatrix.from_rows(CTX, [[0, "y"], ["y", 0]]))


def test_wedge_examples():
    ctx = make_context("q1 q2")
    q1, q2 = ctx.gens()
    assert wedge(PolyMatrix.from_rows(ctx, [[q1, q2]])) == [q2, -q1]
    rows = [["x", "y", "z"], ["x", "y", "z"]]
    assert all(not g for g in wedge(PolyMatrix.from_rows(CTX, rows)))
    with pytest.raises(ShapeError):
        wedge(PolyMatrix.from_rows(CTX, [["x", "y"]] * 2))


def test_wedge_against_leibniz_with_appended_row():
    # Q w = 0 style check: wedge(Q) . row = det([row; Q]) for any row.
    rng = random.Random(4)
    for r in (1, 2, 3):
        Q = random_matrix(rng, r, r + 1)
        row = [random_poly(rng, CTX) for _ in range(r + 1)]
        lhs = sum((a * b for a, b in zip(wedge(Q), row)), CTX.zero())
        assert lhs == leibniz_det([row] + Q.tolist(), CTX.one())
        assert (Q @ PolyMatrix.column(CTX, wedge(Q))).is_zero()


def test_colex_order_and_minors():
    assert colex_subsets(4, 2) == [(0, 1), (0, 2), (1, 2), (0, 3), (1, 3), (2, 3)]
    rng = random.Random(5)
    m = random_matrix(rng, 3, 4)
    M2 = all_minors(m, 2)
    assert M2.shape == (3, 6)
    rows, cols = colex_subsets(3, 2), colex_subsets(4, 2)
    for i, rs in enumerate(rows):
        for j, cs in enumerate(cols):
            assert M2[i, j] == leibniz_det(m.submatrix(rs, cs).tolist(), CTX.one())


def test_matrix_algebra():
    a = PolyMatrix.from_rows(CTX, [["x", 1], [0, "y"]])
    i2 = PolyMatrix.identity(CTX, 2)
    assert a @ i2 == a and i2 @ a == a
    assert (a - a).is_zero()
    assert a.T.T == a
    assert PolyMatrix.from_json(CTX, a.to_json()) == a
    with pytest.raises(ShapeError):
        a @ PolyMatrix.zeros(CTX, 3, 1)
