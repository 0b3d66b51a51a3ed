"""Unprojection of a complete intersection inside a complete intersection."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from ..linalg import PolyMatrix, ShapeError, determinant, wedge
from ..ring import ContextMismatch
from .base import IdentityFailure, UnprojectionError, UnprojectionResult, assemble


@dataclass(frozen=True)
class CiData:
    """``I = (v_1..v_r)`` inside ``J = (w_1..w_{r+1})`` with ``v = Q w``."""

    ctx: object
    v: tuple
    w: tuple
    Q: PolyMatrix

    def __post_init__(self):
        object.__setattr__(self, "v", tuple(self.ctx.poly(p) for p in self.v))
        object.__setattr__(self, "w", tuple(self.ctx.poly(p) for p in self.w))
        if self.Q.ctx != self.ctx:
            raise ContextMismatch("Q lives in a different context")
        r = len(self.v)
        if self.Q.shape != (r, r + 1) or len(self.w) != r + 1:
            raise ShapeError(f"need Q of shape {r}x{r + 1} and {r + 1} w's, got {self.Q.shape} and {len(self.w)}")
        qw = self.Q @ PolyMatrix.column(self.ctx, self.w)
        for i in range(r):
            if qw[i, 0] != self.v[i]:
                raise UnprojectionError(f"v_{i + 1} = {self.v[i]} but (Q w)_{i + 1} = {qw[i, 0]}")

    @classmethod
    def from_matrix(cls, Q, w):
        w = [Q.ctx.poly(p) for p in w]
        qw = Q @ PolyMatrix.column(Q.ctx, w)
        return cls(Q.ctx, tuple(qw.col(0)), tuple(w), Q)

    @property
    def r(self):
        return len(self.v)


@dataclass(frozen=True)
class CramerCertificate:
    i: int
    j: int
    coeffs: tuple
    sign: int
    lhs: object

    def combination(self, v):
        acc = v[0].ctx.zero()
        for c, p in zip(self.coeffs, v):
            acc = acc + c * p
        return acc if self.sign > 0 else -acc


def cramer_certificate(Q, w, i, j, g=None):
    """Coefficients ``c`` with ``g_i w_j - g_j w_i = sign * sum(c_m v_m)``.

    ``i < j`` are 0-based column indices, ``g = wedge(Q)`` and ``v = Q w``.
    ``c_m = (-1)^m det(Q without row m and columns i, j)`` (0-based ``m``)
    and ``sign = (-1)^(i+j+1)``. The identity is checked symbolically.
    """
    r = Q.rows
    if Q.cols != r + 1 or len(w) != r + 1:
        raise ShapeError("Q must be r x (r+1) and w of length r+1")
    if not 0 <= i < j <= r:
        raise ValueError(f"need 0 <= i < j <= {r}, got {i}, {j}")
    if g is None:
        g = wedge(Q)
    keep_cols = [c for c in range(r + 1) if c not in (i, j)]
    coeffs = []
    for m in range(r):
        rows = [k for k in range(r) if k != m]
        d = determinant(Q.submatrix(rows, keep_cols)) if rows else Q.ctx.one()
        coeffs.append(d if m % 2 == 0 else -d)
    sign = 1 if (i + j + 1) % 2 == 0 else -1
    cert = CramerCertificate(i, j, tuple(coeffs), sign, g[i] * w[j] - g[j] * w[i])
    v = (Q @ PolyMatrix.column(Q.ctx, list(w))).col(0)
    if cert.lhs != cert.combination(v):
        raise IdentityFailure(f"Cramer identity fails for columns {i + 1}, {j + 1}")
    return cert


def unproject_ci(d, tname="T"):
    g = tuple(wedge(d.Q))
    certs = [cramer_certificate(d.Q, d.w, i, j, g) for i, j in combinations(range(d.r + 1), 2)]
    ideal = assemble(list(d.v), list(d.w), g, tname)
    return UnprojectionResult("ci", d, tname, ideal, g, {"Q": d.Q, "g": g, "certificates": certs})
