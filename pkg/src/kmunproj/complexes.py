"""
Koszul and Buchsbaum-Eisenbud complexes, and chain-map verification.

Differentials act on column vectors: ``d_i`` has shape
``rank(F_{i-1}) x rank(F_i)`` and consecutive products ``d_i @ d_{i+1}``
vanish. Koszul bases are the increasing subsets of the generator indices
listed in colex order (12, 13, 23, 14, 24, 34 for four generators), with
``d(e_I) = sum_k (-1)^(k+1) w_{i_k} e_{I - i_k}``.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .linalg import PolyMatrix, ShapeError, SkewMatrix, all_minors, colex_subsets, signed_pfaffian_row
from .ring import ContextMismatch, to_string


class ComplexError(ValueError):
    pass


class ChainComplex:
    """A finite free complex ``F_n -> ... -> F_1 -> F_0`` given by its differentials."""

    def __init__(self, diffs):
        diffs = list(diffs)
        if not diffs:
            raise ComplexError("a complex needs at least one differential")
        ctx = diffs[0].ctx
        for d in diffs:
            if d.ctx != ctx:
                raise ContextMismatch("differentials live in different contexts")
        for i in range(len(diffs) - 1):
            if diffs[i].cols != diffs[i + 1].rows:
                raise ShapeError(f"d_{i + 1} is {diffs[i].shape} but d_{i + 2} is {diffs[i + 1].shape}")
        self.ctx = ctx
        self.diffs = tuple(diffs)
        for i in range(len(diffs) - 1):
            prod = diffs[i] @ diffs[i + 1]
            if not prod.is_zero():
                raise ComplexError(f"d_{i + 1} d_{i + 2} is not zero:\n{prod}")

    @property
    def length(self):
        return len(self.diffs)

    def rank(self, i):
        if i == 0:
            return self.diffs[0].rows
        if 1 <= i <= len(self.diffs):
            return self.diffs[i - 1].cols
        return 0

    @property
    def ranks(self):
        return [self.rank(i) for i in range(len(self.diffs) + 1)]

    def diff(self, i):
        """``d_i : F_i -> F_{i-1}``; the zero map outside the stored range."""
        if 1 <= i <= len(self.diffs):
            return self.diffs[i - 1]
        return PolyMatrix.zeros(self.ctx, self.rank(i - 1), self.rank(i))

    def __iter__(self):
        return iter(self.diffs)

    def __repr__(self):
        return f"ChainComplex(ranks={self.ranks})"

    def to_json(self):
        return {"ranks": self.ranks, "diffs": [d.to_json() for d in self.diffs]}

    @classmethod
    def from_json(cls, ctx, data):
        return cls([PolyMatrix.from_json(ctx, d) for d in data["diffs"]])


def koszul_complex(w):
    """Koszul complex on 1 to 4 elements of one context."""
    w = list(w)
    n = len(w)
    if not 1 <= n <= 4:
        raise ComplexError(f"Koszul complexes on {n} elements are not supported (1..4)")
    ctx = w[0].ctx
    for p in w:
        if p.ctx != ctx:
            raise ContextMismatch("generators live in different contexts")
    z = ctx.zero()
    diffs = []
    for p in range(1, n + 1):
        src = colex_subsets(n, p)
        tgt = {s: i for i, s in enumerate(colex_subsets(n, p - 1))}
        cells = [[z] * len(src) for _ in tgt]
        for col, s in enumerate(src):
            for k, i in enumerate(s):
                rest = s[:k] + s[k + 1:]
                cells[tgt[rest]][col] = w[i] if k % 2 == 0 else -w[i]
        diffs.append(PolyMatrix.from_rows(ctx, cells, len(src)))
    return ChainComplex(diffs)


def be_complex(a):
    """``0 -> S -> S^k -> S^k -> S`` with ``C_2 = A`` and ``C_1`` the signed Pfaffians."""
    if not isinstance(a, SkewMatrix):
        a = SkewMatrix.from_matrix(a)
    k = a.size
    if k % 2 == 0:
        raise ComplexError(f"the Pfaffian complex needs an odd size, got {k}")
    c1 = PolyMatrix.row_vector(a.ctx, signed_pfaffian_row(a))
    base = PolyMatrix(a.ctx, k, k, a.entries)
    return ChainComplex([c1, base, c1.transpose()])


@dataclass
class Square:
    index: int
    ok: bool
    difference: PolyMatrix | None = None
    error: str | None = None

    def describe(self):
        if self.error:
            return f"square {self.index}: shape error: {self.error}"
        if self.ok:
            return f"square {self.index}: commutes"
        return f"square {self.index}: difference\n{self.difference}"


@dataclass
class ChainMapReport:
    squares: list = field(default_factory=list)

    @property
    def ok(self):
        return all(s.ok for s in self.squares)

    def __bool__(self):
        return self.ok

    def failures(self):
        return [s for s in self.squares if not s.ok]

    def to_json(self):
        out = []
        for s in self.squares:
            item = {"square": s.index, "ok": s.ok}
            if s.error:
                item["error"] = s.error
            elif not s.ok:
                item["difference"] = [[to_string(e) for e in s.difference.row(i)]
                                      for i in range(s.difference.rows)]
            out.append(item)
        return {"ok": self.ok, "squares": out}

    def __str__(self):
        lines = [s.describe() for s in self.squares]
        lines.append("PASS" if self.ok else "FAIL")
        return "\n".join(lines)


def verify_chain_map(source, target, verticals, augmented=True):
    """Check ``target.d_i @ D_i == D_{i-1} @ source.d_i`` for every square.

    ``verticals`` is ``[D_0, D_1, ..., D_n]``. With ``augmented`` an extra
    square 0 checks that ``D_0`` is the identity, i.e. that the map lifts
    the natural surjection ``S/I -> S/J`` rather than the zero map.
    """
    verticals = list(verticals)
    report = ChainMapReport()
    ctx = source.ctx
    if target.ctx != ctx or any(d.ctx != ctx for d in verticals):
        raise ContextMismatch("complexes and verticals must share one context")
    for i, d in enumerate(verticals):
        want = (target.rank(i), source.rank(i))
        if d.shape != want:
            report.squares.append(Square(i, False, error=f"D_{i} is {d.shape}, expected {want}"))
    if report.squares:
        return report
    if augmented:
        d0 = verticals[0]
        if d0.rows != d0.cols:
            report.squares.append(Square(0, False, error="D_0 is not square"))
        else:
            diff = d0 - PolyMatrix.identity(ctx, d0.rows)
            report.squares.append(Square(0, diff.is_zero(), None if diff.is_zero() else diff))
    for i in range(1, len(verticals)):
        lhs = target.diff(i) @ verticals[i]
        rhs = verticals[i - 1] @ source.diff(i)
        diff = lhs - rhs
        report.squares.append(Square(i, diff.is_zero(), None if diff.is_zero() else diff))
    return report


@dataclass
class ChainMap:
    source: ChainComplex
    target: ChainComplex
    verticals: list

    def verify(self, augmented=True):
        return verify_chain_map(self.source, self.target, self.verticals, augmented)


def identity_map(c):
    return ChainMap(c, c, [PolyMatrix.identity(c.ctx, r) for r in c.ranks])


def koszul_chain_map(q, v, w):
    """Chain map ``Koszul(v) -> Koszul(w)`` with verticals the exterior powers of ``q^t``.

    Requires ``v == q @ w`` exactly, ``q`` of shape ``r x (r+1)``, ``r`` in 1..3.
    """
    v, w = list(v), list(w)
    r = q.rows
    if r not in (1, 2, 3) or q.cols != r + 1 or len(v) != r or len(w) != r + 1:
        raise ShapeError(f"need q of shape r x (r+1) with r in 1..3, got {q.shape}")
    qw = q @ PolyMatrix.column(q.ctx, w)
    for i in range(r):
        if qw[i, 0] != v[i]:
            raise ComplexError(f"v_{i + 1} != (Q w)_{i + 1}: {v[i]} vs {qw[i, 0]}")
    src = koszul_complex(v)
    tgt = koszul_complex(w)
    qt = q.transpose()
    verticals = [PolyMatrix.identity(q.ctx, 1)]
    for n in range(1, r + 1):
        verticals.append(all_minors(qt, n))
    return ChainMap(src, tgt, verticals)


def top_vertical_from_wedge(g):
    """Column ``(det Q without col j)`` in colex order of the omitted-one subsets.

    With ``g = wedge(Q)`` this is the last vertical of :func:`koszul_chain_map`,
    e.g. ``(-g_4, g_3, -g_2, g_1)^t`` when ``len(g) == 4``.
    """
    g = list(g)
    n = len(g)
    out = []
    for j in reversed(range(n)):
        out.append(g[j] if j % 2 == 0 else -g[j])
    return PolyMatrix.column(g[0].ctx, out)
