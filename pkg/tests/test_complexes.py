import pytest

from kmunproj.complexes import (ChainComplex, ComplexError, be_complex, identity_map, koszul_chain_map,
                                koszul_complex, top_vertical_from_wedge, verify_chain_map)
from kmunproj.corpus import original_tom, original_tom_chain_data, x3_to_x4, x4_to_x5
from kmunproj.linalg import PolyMatrix, SkewMatrix, wedge
from kmunproj.ring import make_context
from kmunproj.unproj import tom_d3, tom_generic, unproject_tom


def test_two_variable_koszul():
    ctx = make_context("x y")
    K = koszul_complex(list(ctx.gens()))
    assert K.ranks == [1, 2, 1]
    assert K.diff(2) == PolyMatrix.column(ctx, [ctx.parse("-y"), ctx.var("x")])


def test_four_variable_koszul_ends():
    ctx = make_context("z1 z2 z3 z4")
    K = koszul_complex(list(ctx.gens()))
    assert K.ranks == [1, 4, 6, 4, 1]
    assert list(K.diff(1).row(0)) == list(ctx.gens())
    assert list(K.diff(4).col(0)) == list(ctx.parse(s) for s in ("-z4", "z3", "-z2", "z1"))


def test_composition_must_vanish():
    ctx = make_context("x y")
    d1 = PolyMatrix.row_vector(ctx, list(ctx.gens()))
    bad = PolyMatrix.column(ctx, [ctx.var("y"), ctx.var("x")])
    with pytest.raises(ComplexError):
        ChainComplex([d1, bad])
    with pytest.raises(ComplexError):
        koszul_complex([ctx.var("x")] * 5)


def test_be_complex_of_generic_tom():
    G = tom_generic()
    L = be_complex(G.A)
    P = G.P
    assert list(L.diff(1).row(0)) == [P[0], -P[1], P[2], -P[3], P[4]]
    assert L.diff(2) == PolyMatrix(G.ctx, 5, 5, G.A.entries)
    assert L.diff(3) == L.diff(1).T


def test_be_complex_of_original_tom_and_zero():
    d = original_tom()
    row = be_complex(d.matrix()).diff(1).row(0)
    assert d.ctx.parse("x3*z2 - x4*z1") in row or -d.ctx.parse("x3*z2 - x4*z1") in row
    zero = SkewMatrix.from_matrix(PolyMatrix.zeros(d.ctx, 5, 5))
    assert all(m.is_zero() for m in be_complex(zero))
    with pytest.raises(ComplexError):
        be_complex(SkewMatrix.from_matrix(PolyMatrix.zeros(d.ctx, 4, 4)))


def test_original_tom_chain_map_only_d3_sign_matters():
    d = original_tom()
    g = unproject_tom(d).g
    L, M = be_complex(d.matrix()), koszul_complex(list(d.z))
    D0, D1, D2 = original_tom_chain_data()
    assert verify_chain_map(L, M, [D0, D1, D2, tom_d3(g)]).ok
    reference_sign = verify_chain_map(L, M, [D0, D1, D2, tom_d3(g, sign=1)])
    assert [s.index for s in reference_sign.failures()] == [3]
    assert "FAIL" in str(reference_sign)


def test_zero_verticals_fail_at_the_augmentation():
    d = original_tom()
    L, M = be_complex(d.matrix()), koszul_complex(list(d.z))
    zeros = [PolyMatrix.zeros(d.ctx, M.rank(i), L.rank(i)) for i in range(4)]
    rep = verify_chain_map(L, M, zeros)
    assert not rep.ok
    assert [s.index for s in rep.failures()] == [0]
    assert verify_chain_map(L, M, zeros, augmented=False).ok


def test_shape_errors_are_reported():
    d = original_tom()
    L, M = be_complex(d.matrix()), koszul_complex(list(d.z))
    rep = verify_chain_map(L, M, [PolyMatrix.identity(d.ctx, 2)])
    assert not rep.ok and rep.squares[0].error


def test_identity_map():
    K = koszul_complex(list(make_context("a b c").gens()))
    assert identity_map(K).verify().ok


def test_koszul_chain_map_r1():
    ctx = make_context("q1 q2 w1 w2")
    q1, q2, w1, w2 = ctx.gens()
    Q = PolyMatrix.from_rows(ctx, [[q1, q2]])
    cm = koszul_chain_map(Q, [q1 * w1 + q2 * w2], [w1, w2])
    assert cm.verify().ok
    assert cm.verticals[0] == PolyMatrix.identity(ctx, 1)
    assert cm.verticals[1] == PolyMatrix.column(ctx, [q1, q2])
    with pytest.raises(ComplexError):
        koszul_chain_map(Q, [q1 * w1], [w1, w2])


def test_koszul_chain_map_delpezzo_steps():
    for data in (x3_to_x4(), x4_to_x5()):
        cm = koszul_chain_map(data.Q, list(data.v), list(data.w))
        assert cm.verify().ok
        top = cm.verticals[-1]
        assert top == top_vertical_from_wedge(wedge(data.Q))


def test_zero_row_still_commutes():
    ctx = make_context("x y z")
    Q = PolyMatrix.from_rows(ctx, [["x", "y", "z"], [0, 0, 0]])
    w = list(ctx.gens())
    cm = koszul_chain_map(Q, (Q @ PolyMatrix.column(ctx, w)).col(0), w)
    assert cm.verify().ok
    assert list(cm.verticals[1].col(1)) == [ctx.zero()] * 3


def test_top_vertical_pattern():
    ctx = make_context("g1 g2 g3 g4")
    assert list(top_vertical_from_wedge(list(ctx.gens())).col(0)) == list(
        ctx.parse(s) for s in ("-g4", "g3", "-g2", "g1"))


def test_json_round_trip():
    ctx = make_context("x y z")
    K = koszul_complex(list(ctx.gens()))
    assert ChainComplex.from_json(ctx, K.to_json()).diffs == K.diffs
