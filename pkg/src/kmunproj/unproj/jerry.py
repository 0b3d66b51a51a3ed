"""
Jerry unprojection.

``P_3`` is quadratic in the z's; the construction treats ``a_2`` and
``a_3`` as opaque coefficients so that ``(P_1, P_2, P_3) = Q z`` with a
3x4 matrix ``Q``. The signed maximal minors ``h`` of ``Q`` split as
``h_i = x3 K_i + (a2 x2 - a3 x1) L_i`` and ``g_i = K_i + a1 L_i``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

from ..linalg import PolyMatrix, SkewMatrix, determinant, pfaffians, wedge
from ..ring import VarContext, exact_div, linear_coeffs, substitute
from .base import IdentityFailure, UnprojectionError, UnprojectionResult, assemble


def generic_context():
    names = [f"a{i}_{k}" for i in range(1, 4) for k in range(1, 5)]
    names += [f"b{i}_{k}" for i in range(1, 4) for k in range(1, 5)]
    names += [f"c_{k}" for k in range(1, 5)]
    names += [f"x{k}" for k in range(1, 4)] + [f"z{k}" for k in range(1, 5)]
    return VarContext(tuple(names))


def jerry_matrix(c, a, b, x):
    return SkewMatrix.from_upper(c.ctx, [[c, a[0], a[1], a[2]], [b[0], b[1], b[2]], [x[0], x[1]], [x[2]]])


@dataclass(frozen=True)
class JerryGeneric:
    ctx: VarContext
    A: SkewMatrix
    P: tuple
    Q: PolyMatrix
    h: tuple
    F: PolyMatrix
    G: PolyMatrix
    K: tuple
    L: tuple
    g: tuple


@lru_cache(maxsize=None)
def jerry_generic():
    ctx = generic_context()
    var = ctx.var
    x = [var(f"x{k}") for k in range(1, 4)]
    z = [var(f"z{k}") for k in range(1, 5)]

    def lin(prefix):
        acc = ctx.zero()
        for k in range(4):
            acc = acc + var(f"{prefix}_{k + 1}") * z[k]
        return acc

    a = [lin(f"a{i}") for i in range(1, 4)]
    b = [lin(f"b{i}") for i in range(1, 4)]
    c = lin("c")
    A = jerry_matrix(c, a, b, x)
    P = tuple(pfaffians(A))

    def coef(prefix, i, k):
        return var(f"{prefix}{i}_{k}")

    rows = [[coef("b", 1, k) * x[2] - coef("b", 2, k) * x[1] + coef("b", 3, k) * x[0] for k in range(1, 5)],
            [coef("a", 1, k) * x[2] - coef("a", 2, k) * x[1] + coef("a", 3, k) * x[0] for k in range(1, 5)],
            [var(f"c_{k}") * x[2] - a[1] * coef("b", 3, k) + a[2] * coef("b", 2, k) for k in range(1, 5)]]
    Q = PolyMatrix.from_rows(ctx, rows)
    zcol = PolyMatrix.column(ctx, z)
    Pz = (Q @ zcol).col(0)
    for m in range(3):
        if Pz[m] != P[m]:
            raise IdentityFailure(f"(Q z)_{m + 1} != P_{m + 1}")
    znames = [f"z{k}" for k in range(1, 5)]
    for m in range(2):
        if list(Q.row(m)) != linear_coeffs(P[m], znames):
            raise IdentityFailure(f"row {m + 1} of Q is not the z-coefficient row of P_{m + 1}")

    h = tuple(wedge(Q))
    at_x3_zero = {n: var(n) for n in ctx.names}
    at_x3_zero["x3"] = ctx.zero()

    def drop_x3(p):
        return substitute(p, at_x3_zero, ctx)

    M = Q.map(drop_x3)
    F = PolyMatrix.from_rows(ctx, [[x[0], 0, -x[1]], [0, 1, 0], [-a[1], 0, a[2]]])
    G = PolyMatrix.from_rows(ctx, [[coef("b", 3, k) for k in range(1, 5)],
                                   M.row(1),
                                   [coef("b", 2, k) for k in range(1, 5)]])
    if F @ G != M:
        raise IdentityFailure("Q at x3 = 0 does not factor as F G")
    if determinant(F) != a[2] * x[0] - a[1] * x[1]:
        raise IdentityFailure("det F != a3 x1 - a2 x2")
    L = tuple(determinant(G.delete(col=i)) if i % 2 else -determinant(G.delete(col=i)) for i in range(4))
    K = tuple(exact_div(hi - drop_x3(hi), x[2]) for hi in h)
    u = a[1] * x[1] - a[2] * x[0]
    for i in range(4):
        if h[i] != x[2] * K[i] + u * L[i]:
            raise IdentityFailure(f"h_{i + 1} != x3 K_{i + 1} + (a2 x2 - a3 x1) L_{i + 1}")
    g = tuple(K[i] + a[0] * L[i] for i in range(4))
    for i in range(4):
        if h[i] != x[2] * g[i] - L[i] * P[1]:
            raise IdentityFailure(f"h_{i + 1} != x3 g_{i + 1} - L_{i + 1} P_2")
    return JerryGeneric(ctx, A, P, Q, h, F, G, K, L, g)


def jerry_generic_g():
    return jerry_generic().g


@dataclass(frozen=True)
class JerryData:
    """Jerry input: ``x`` (3), ``z`` (4) and coefficient maps (missing means 0).

    ``a_coeffs[(i, k)]`` and ``b_coeffs[(i, k)]`` for ``i`` in 1..3, ``k`` in
    1..4; ``c_coeffs[k]``.
    """

    ctx: VarContext
    x: tuple
    z: tuple
    a_coeffs: dict = field(default_factory=dict)
    b_coeffs: dict = field(default_factory=dict)
    c_coeffs: dict = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, "x", tuple(self.ctx.poly(p) for p in self.x))
        object.__setattr__(self, "z", tuple(self.ctx.poly(p) for p in self.z))
        if len(self.x) != 3 or len(self.z) != 4:
            raise UnprojectionError("Jerry data needs three x's and four z's")
        for name in ("a_coeffs", "b_coeffs"):
            coeffs = {}
            for (i, k), v in dict(getattr(self, name)).items():
                if not (1 <= i <= 3 and 1 <= k <= 4):
                    raise UnprojectionError(f"bad Jerry coefficient index {(i, k)}")
                coeffs[(i, k)] = self.ctx.poly(v)
            object.__setattr__(self, name, coeffs)
        cc = {}
        for k, v in dict(self.c_coeffs).items():
            if not 1 <= k <= 4:
                raise UnprojectionError(f"bad Jerry coefficient index c^{k}")
            cc[k] = self.ctx.poly(v)
        object.__setattr__(self, "c_coeffs", cc)

    def __hash__(self):
        return hash((self.x, self.z, tuple(sorted(self.a_coeffs.items())),
                     tuple(sorted(self.b_coeffs.items())), tuple(sorted(self.c_coeffs.items()))))

    def _lin(self, get):
        acc = self.ctx.zero()
        for k in range(4):
            c = get(k + 1)
            if c:
                acc = acc + c * self.z[k]
        return acc

    def matrix(self):
        a = [self._lin(lambda k, i=i: self.a_coeffs.get((i, k))) for i in range(1, 4)]
        b = [self._lin(lambda k, i=i: self.b_coeffs.get((i, k))) for i in range(1, 4)]
        c = self._lin(self.c_coeffs.get)
        return jerry_matrix(c, a, b, list(self.x))

    def pfaffians(self):
        return tuple(pfaffians(self.matrix()))

    def assignment(self):
        zero = self.ctx.zero()
        out = {}
        for i in range(1, 4):
            for k in range(1, 5):
                out[f"a{i}_{k}"] = self.a_coeffs.get((i, k), zero)
                out[f"b{i}_{k}"] = self.b_coeffs.get((i, k), zero)
        for k in range(1, 5):
            out[f"c_{k}"] = self.c_coeffs.get(k, zero)
            out[f"z{k}"] = self.z[k - 1]
        for k in range(1, 4):
            out[f"x{k}"] = self.x[k - 1]
        return out

    def specialize(self, p):
        return substitute(p, self.assignment(), self.ctx)


def jerry_data_from_matrix(A, znames):
    """Read Jerry data off a 5x5 skew matrix whose first two rows are linear in ``znames``."""
    ctx = A.ctx
    x = (A[2, 3], A[2, 4], A[3, 4])
    z = tuple(ctx.var(n) for n in znames)

    def split(e):
        return {k + 1: c for k, c in enumerate(linear_coeffs(e, znames)) if c} if e else {}

    c = split(A[0, 1])
    a, b = {}, {}
    for i in range(1, 4):
        for k, v in split(A[0, i + 1]).items():
            a[(i, k)] = v
        for k, v in split(A[1, i + 1]).items():
            b[(i, k)] = v
    return JerryData(ctx, x, z, a, b, c)


def unproject_jerry(d, tname="T"):
    gen = jerry_generic()
    sub = d.specialize
    g = tuple(sub(p) for p in gen.g)
    P = d.pfaffians()
    ideal = assemble(list(P), list(d.z), g, tname)
    work = {"A": d.matrix(), "P": P,
            "Q": PolyMatrix(d.ctx, 3, 4, [sub(e) for e in gen.Q.entries]),
            "h": tuple(sub(p) for p in gen.h),
            "K": tuple(sub(p) for p in gen.K),
            "L": tuple(sub(p) for p in gen.L),
            "g": g}
    return UnprojectionResult("jerry", d, tname, ideal, g, work)
