"""
Tom unprojection.

The numerators ``g_i`` are computed once in the generic integral Tom ring,
where every ``a_ij^k``, ``x_k`` and ``z_k`` is an indeterminate, and then
specialised by substitution.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

from ..linalg import PolyMatrix, SkewMatrix, pfaffians, wedge
from ..ring import VarContext, exact_div, linear_coeffs, substitute
from .base import IdentityFailure, UnprojectionError, UnprojectionResult, assemble

PAIRS = ((2, 3), (2, 4), (2, 5), (3, 4), (3, 5), (4, 5))


def coeff_name(i, j, k):
    return f"a{i}{j}_{k}"


def generic_context():
    names = [coeff_name(i, j, k) for i, j in PAIRS for k in range(1, 5)]
    names += [f"x{k}" for k in range(1, 5)] + [f"z{k}" for k in range(1, 5)]
    return VarContext(tuple(names))


def tom_matrix(x, a):
    """5x5 skew matrix with first row ``(., x1..x4)`` and ``a[(i, j)]`` above the diagonal."""
    ctx = x[0].ctx
    z = ctx.zero()
    upper = [list(x),
             [a.get((2, 3), z), a.get((2, 4), z), a.get((2, 5), z)],
             [a.get((3, 4), z), a.get((3, 5), z)],
             [a.get((4, 5), z)]]
    return SkewMatrix.from_upper(ctx, upper)


@dataclass(frozen=True)
class TomGeneric:
    ctx: VarContext
    A: SkewMatrix
    P: tuple
    Q: PolyMatrix
    H: tuple
    g: tuple


@lru_cache(maxsize=None)
def tom_generic():
    ctx = generic_context()
    x = [ctx.var(f"x{k}") for k in range(1, 5)]
    z = [ctx.var(f"z{k}") for k in range(1, 5)]
    a = {}
    for i, j in PAIRS:
        acc = ctx.zero()
        for k in range(4):
            acc = acc + ctx.var(coeff_name(i, j, k + 1)) * z[k]
        a[(i, j)] = acc
    A = tom_matrix(x, a)
    P = tuple(pfaffians(A))
    znames = [f"z{k}" for k in range(1, 5)]
    Q = PolyMatrix.from_rows(ctx, [linear_coeffs(p, znames) for p in P[1:]])
    # x4 Q4 = x1 Q1 - x2 Q2 + x3 Q3
    rel = [x[0] * Q[0, k] - x[1] * Q[1, k] + x[2] * Q[2, k] - x[3] * Q[3, k] for k in range(4)]
    if any(rel):
        raise IdentityFailure("x4 Q4 != x1 Q1 - x2 Q2 + x3 Q3")
    H = tuple(tuple(wedge(Q.delete(row=i))) for i in range(4))
    for i in range(4):
        for j in range(4):
            for k in range(4):
                if x[i] * H[j][k] != x[j] * H[i][k]:
                    raise IdentityFailure(f"x{i + 1} H{j + 1} != x{j + 1} H{i + 1}")
    quotients = [tuple(exact_div(h, x[j]) for h in H[j]) for j in range(4)]
    g = quotients[3]
    for j in range(3):
        if quotients[j] != g:
            raise IdentityFailure(f"H{j + 1}/x{j + 1} differs from H4/x4")
    return TomGeneric(ctx, A, P, Q, H, g)


def tom_generic_g():
    return tom_generic().g


@dataclass(frozen=True)
class TomData:
    """Tom input: ``x`` (4), ``z`` (4) and ``a_coeffs[(i, j, k)]`` (missing means 0)."""

    ctx: VarContext
    x: tuple
    z: tuple
    a_coeffs: dict = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, "x", tuple(self.ctx.poly(p) for p in self.x))
        object.__setattr__(self, "z", tuple(self.ctx.poly(p) for p in self.z))
        if len(self.x) != 4 or len(self.z) != 4:
            raise UnprojectionError("Tom data needs four x's and four z's")
        coeffs = {}
        for key, val in dict(self.a_coeffs).items():
            i, j, k = key
            if (i, j) not in PAIRS or not 1 <= k <= 4:
                raise UnprojectionError(f"bad Tom coefficient index {key}")
            coeffs[(i, j, k)] = self.ctx.poly(val)
        object.__setattr__(self, "a_coeffs", coeffs)

    def __hash__(self):
        return hash((self.x, self.z, tuple(sorted(self.a_coeffs.items()))))

    def entry(self, i, j):
        acc = self.ctx.zero()
        for k in range(4):
            c = self.a_coeffs.get((i, j, k + 1))
            if c:
                acc = acc + c * self.z[k]
        return acc

    def matrix(self):
        return tom_matrix(list(self.x), {p: self.entry(*p) for p in PAIRS})

    def pfaffians(self):
        """``(P_0, ..., P_4)`` with ``P_i = Pf(A_{i+1})``."""
        return tuple(pfaffians(self.matrix()))

    def assignment(self):
        gen = generic_context()
        out = {}
        for i, j in PAIRS:
            for k in range(1, 5):
                out[coeff_name(i, j, k)] = self.a_coeffs.get((i, j, k), self.ctx.zero())
        for k in range(4):
            out[f"x{k + 1}"] = self.x[k]
            out[f"z{k + 1}"] = self.z[k]
        assert set(out) == set(gen.names)
        return out

    def specialize(self, p):
        """Image of a generic-Tom polynomial under this data."""
        return substitute(p, self.assignment(), self.ctx)


def tom_data_from_matrix(A, znames):
    """Read Tom data off a 5x5 skew matrix whose lower block is linear in ``znames``."""
    ctx = A.ctx
    x = tuple(A[0, j] for j in range(1, 5))
    z = tuple(ctx.var(n) for n in znames)
    coeffs = {}
    for i, j in PAIRS:
        e = A[i - 1, j - 1]
        if e:
            for k, c in enumerate(linear_coeffs(e, znames)):
                if c:
                    coeffs[(i, j, k + 1)] = c
    return TomData(ctx, x, z, coeffs)


def tom_specialized(d):
    """Q, H and g of the generic construction pushed through ``d``."""
    gen = tom_generic()
    sub = d.specialize
    Q = PolyMatrix(d.ctx, 4, 4, [sub(e) for e in gen.Q.entries])
    H = tuple(tuple(sub(h) for h in row) for row in gen.H)
    g = tuple(sub(p) for p in gen.g)
    return Q, H, g


def unproject_tom(d, tname="T"):
    Q, H, g = tom_specialized(d)
    P = d.pfaffians()
    ideal = assemble(list(P), list(d.z), g, tname)
    work = {"A": d.matrix(), "P": P, "Q": Q, "H": H, "g": g}
    return UnprojectionResult("tom", d, tname, ideal, g, work)


def tom_d3(g, sign=-1):
    """Top vertical of the Tom chain map.

    ``sign * (-g4, g3, -g2, g1)^t``. With the Pfaffian complex conventions
    ``C_1 = (P_0, -P_1, P_2, -P_3, P_4)``, ``C_3 = C_1^t`` and the colex
    Koszul basis, the commuting choice is ``sign = -1``.
    """
    col = [-g[3], g[2], -g[1], g[0]]
    if sign < 0:
        col = [-p for p in col]
    return PolyMatrix.column(g[0].ctx, col)
