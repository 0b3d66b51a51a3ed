"""Worked instances: original Tom and Jerry, the explicit Tom example, del Pezzo surfaces."""

from __future__ import annotations

from .groebner import Ideal
from .linalg import PolyMatrix, SkewMatrix, pfaffians
from .ring import make_context, substitute
from .unproj import (CiData, TomData, jerry_data_from_matrix, tom_data_from_matrix, tom_specialized,
                     unproject_ci, unproject_tom)

Z4 = ("z1", "z2", "z3", "z4")


def original_tom():
    ctx = make_context("x1 x2 x3 x4 z1 z2 z3 z4")
    A = SkewMatrix.from_upper(ctx, [["x1", "x2", "x3", "x4"], [0, "z1", "z2"], ["z3", "z4"], [0]])
    return tom_data_from_matrix(A, Z4)


def original_tom_g():
    ctx = original_tom().ctx
    return tuple(ctx.parse(s) for s in ("x1*x3", "x1*x4", "x2*x3", "x2*x4"))


def original_tom_chain_data():
    """Reference verticals ``D_0' = 1, D_1', D_2'`` for the original Tom."""
    ctx = original_tom().ctx
    D2 = PolyMatrix.from_rows(ctx, [[0, "-x2", 0, 0, 0],
                                    [0, 0, 0, "-x4", 0],
                                    [0, 0, "x2", "x3", 0],
                                    [0, "x1", 0, "x3", 0],
                                    [0, 0, 0, 0, "x3"],
                                    [0, 0, "x1", 0, 0]])
    D1 = PolyMatrix.from_rows(ctx, [["-z4", 0, "x4", 0, "-x2"],
                                    [0, 0, "-x3", "x2", 0],
                                    ["z2", "-x4", 0, 0, "x1"],
                                    [0, "x3", 0, "-x1", 0]])
    return PolyMatrix.identity(ctx, 1), D1, D2


def original_jerry():
    ctx = make_context("x1 x2 x3 z1 z2 z3 z4")
    A = SkewMatrix.from_upper(ctx, [["z1", "z2", "z3", 0], [0, "z3", "z4"], ["x1", "x2"], ["x3"]])
    return jerry_data_from_matrix(A, Z4)


# -- the explicit Tom example --

def explicit_example_t():
    """The example with the first row replaced by symbols ``t1..t4``."""
    ctx = make_context("t1 t2 t3 t4 x1 x2 x3 z1 z2 z3 z4")
    p = ctx.parse
    coeffs = {(2, 4, 1): p("x3*z3"), (2, 4, 2): 1, (2, 5, 3): 1, (3, 4, 4): 1, (3, 5, 1): 1}
    return TomData(ctx, [p("t1"), p("t2"), p("t3"), p("t4")], [p(z) for z in Z4], coeffs)


def explicit_example():
    ctx = make_context("x1 x2 x3 z1 z2 z3 z4")
    p = ctx.parse
    coeffs = {(2, 4, 1): p("x3*z3"), (2, 4, 2): 1, (2, 5, 3): 1, (3, 4, 4): 1, (3, 5, 1): 1}
    return TomData(ctx, [p("x1"), p("x1*x2*z2"), p("x3"), p("x3")], [p(z) for z in Z4], coeffs)


def explicit_example_t_values():
    ctx = explicit_example().ctx
    return {"t1": ctx.parse("x1"), "t2": ctx.parse("x1*x2*z2"), "t3": ctx.parse("x3"), "t4": ctx.parse("x3")}


def explicit_example_reference():
    """Reference values of ``Q'``, ``H_4'`` and ``g`` for the example."""
    dt = explicit_example_t()
    p = dt.ctx.parse
    Q = PolyMatrix.from_rows(dt.ctx, [["-t3", 0, 0, "t4"],
                                      ["t4*x3*z3", "t4", "-t3", 0],
                                      ["t1", 0, "-t2", 0],
                                      ["-t2*x3*z3", "-t2", 0, "t1"]])
    H4 = tuple(p(s) for s in ("t4*t4*t2", "t4*(-t4*x3*z3*t2 + t1*t3)", "t4*t1*t4", "t4*t2*t3"))
    ctx = explicit_example().ctx
    g = tuple(ctx.parse(s) for s in ("x3*(x1*x2*z2)", "-x3*x3*z3*(x1*x2*z2) + x1*x3",
                                     "x1*x3", "(x1*x2*z2)*x3"))
    return Q, H4, g


def explicit_example_via_t():
    """Route through the t-symbols: ``H_4' / t4`` then ``t -> values``."""
    dt = explicit_example_t()
    Q, H, _ = tom_specialized(dt)
    t4 = dt.ctx.var("t4")
    from .ring import exact_div
    gt = [exact_div(h, t4) for h in H[3]]
    ctx = explicit_example().ctx
    values = explicit_example_t_values()
    assignment = {n: (values[n] if n in values else ctx.var(n)) for n in dt.ctx.names}
    return Q, H[3], tuple(substitute(q, assignment, ctx) for q in gt)


# -- del Pezzo surfaces by serial unprojection --

def delpezzo_context():
    return make_context("x y z w")


def x3_to_x4():
    ctx = delpezzo_context()
    p = ctx.parse
    Q = PolyMatrix.from_rows(ctx, [["z*(x+z)", "-w*(y+w)"]])
    return CiData.from_matrix(Q, [p("x"), p("y")])


def x4_expected():
    ctx = delpezzo_context().extend("s")
    p = ctx.parse
    return Ideal(ctx, [p("s*x - w*(y+w)"), p("s*y - z*(x+z)"), p("x*z*(x+z) - y*w*(y+w)")])


def x4_to_x5():
    ctx = delpezzo_context().extend("s")
    p = ctx.parse
    Q = PolyMatrix.from_rows(ctx, [["x", 0, "-(y+w)"], ["y", "-(x+z)", 0]])
    return CiData.from_matrix(Q, [p("s"), p("z"), p("w")])


def x5_matrix():
    ctx = delpezzo_context().extend("s", "t")
    return SkewMatrix.from_upper(ctx, [["-x", "w", "-y", "-z"], [0, "t", "-(y+w)"], ["x+z", "s"], [0]])


def x5_expected():
    M = x5_matrix()
    return Ideal(M.ctx, pfaffians(M))


def x5_to_x6():
    """Tom data of the X5 matrix with z-slots ``(t, s, x+z, y+w)``."""
    M = x5_matrix()
    ctx = M.ctx
    p = ctx.parse
    x = [M[0, j] for j in range(1, 5)]
    coeffs = {(2, 4, 1): 1, (2, 5, 4): -1, (3, 4, 3): 1, (3, 5, 2): 1}
    d = TomData(ctx, x, [p("t"), p("s"), p("x+z"), p("y+w")], coeffs)
    if d.matrix() != M:
        raise AssertionError("Tom data does not reproduce the X5 matrix")
    return d


def x6_expected():
    ctx = delpezzo_context().extend("s", "t", "u")
    p = ctx.parse
    gens = [q.embed(ctx) for q in x5_expected()]
    gens += [p("u*t - x*y"), p("u*(y+w) + x*z"), p("u*(x+z) + y*w"), p("u*s + w*z")]
    return Ideal(ctx, gens)


def delpezzo_chain():
    """``(result, expected ideal, flip variable)`` for X3->X4, X4->X5, X5->X6."""
    return [(unproject_ci(x3_to_x4(), "s"), x4_expected(), "s"),
            (unproject_ci(x4_to_x5(), "t"), x5_expected(), "t"),
            (unproject_tom(x5_to_x6(), "u"), x6_expected(), "u")]
