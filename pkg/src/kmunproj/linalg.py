"""Matrices of polynomials: determinants, signed maximal minors, Pfaffians."""

from __future__ import annotations

from itertools import combinations

from .ring import ContextMismatch, Polynomial, VarContext, exact_div, to_string


class ShapeError(ValueError):
    pass


class NotSkewError(ValueError):
    pass


class PolyMatrix:
    """Rectangular matrix of polynomials, row-major, immutable."""

    __slots__ = ("ctx", "rows", "cols", "entries")

    def __init__(self, ctx, rows, cols, entries):
        entries = tuple(ctx.poly(e) for e in entries)
        if rows < 0 or cols < 0 or len(entries) != rows * cols:
            raise ShapeError(f"{len(entries)} entries for a {rows}x{cols} matrix")
        self.ctx = ctx
        self.rows = rows
        self.cols = cols
        self.entries = entries

    @classmethod
    def from_rows(cls, ctx, rows, cols=None):
        rows = [list(r) for r in rows]
        if cols is None:
            cols = len(rows[0]) if rows else 0
        for r in rows:
            if len(r) != cols:
                raise ShapeError("ragged rows")
        return cls(ctx, len(rows), cols, [e for r in rows for e in r])

    @classmethod
    def column(cls, ctx, items):
        items = list(items)
        return cls(ctx, len(items), 1, items)

    @classmethod
    def row_vector(cls, ctx, items):
        items = list(items)
        return cls(ctx, 1, len(items), items)

    @classmethod
    def zeros(cls, ctx, rows, cols):
        z = ctx.zero()
        return cls(ctx, rows, cols, [z] * (rows * cols))

    @classmethod
    def identity(cls, ctx, n):
        one, z = ctx.one(), ctx.zero()
        return cls(ctx, n, n, [one if i == j else z for i in range(n) for j in range(n)])

    @property
    def shape(self):
        return (self.rows, self.cols)

    def __getitem__(self, ij):
        i, j = ij
        if not (0 <= i < self.rows and 0 <= j < self.cols):
            raise IndexError(f"index {ij} out of range for {self.rows}x{self.cols}")
        return self.entries[i * self.cols + j]

    def row(self, i):
        return list(self.entries[i * self.cols:(i + 1) * self.cols])

    def col(self, j):
        return [self.entries[i * self.cols + j] for i in range(self.rows)]

    def tolist(self):
        return [self.row(i) for i in range(self.rows)]

    def transpose(self):
        return PolyMatrix(self.ctx, self.cols, self.rows,
                          [self[i, j] for j in range(self.cols) for i in range(self.rows)])

    T = property(transpose)

    def submatrix(self, rows, cols):
        rows, cols = list(rows), list(cols)
        return PolyMatrix(self.ctx, len(rows), len(cols), [self[i, j] for i in rows for j in cols])

    def delete(self, row=None, col=None):
        rows = [i for i in range(self.rows) if i != row]
        cols = [j for j in range(self.cols) if j != col]
        return self.submatrix(rows, cols)

    def _check(self, other):
        if not isinstance(other, PolyMatrix):
            raise TypeError("expected a PolyMatrix")
        if other.ctx != self.ctx:
            raise ContextMismatch("matrices live in different contexts")

    def __add__(self, other):
        self._check(other)
        if self.shape != other.shape:
            raise ShapeError(f"cannot add {self.shape} and {other.shape}")
        return PolyMatrix(self.ctx, self.rows, self.cols,
                          [a + b for a, b in zip(self.entries, other.entries)])

    def __sub__(self, other):
        self._check(other)
        if self.shape != other.shape:
            raise ShapeError(f"cannot subtract {other.shape} from {self.shape}")
        return PolyMatrix(self.ctx, self.rows, self.cols,
                          [a - b for a, b in zip(self.entries, other.entries)])

    def __neg__(self):
        return PolyMatrix(self.ctx, self.rows, self.cols, [-a for a in self.entries])

    def __matmul__(self, other):
        self._check(other)
        if self.cols != other.rows:
            raise ShapeError(f"cannot multiply {self.shape} by {other.shape}")
        z = self.ctx.zero()
        out = []
        for i in range(self.rows):
            r = self.row(i)
            for j in range(other.cols):
                acc = z
                for k in range(self.cols):
                    a = r[k]
                    if a:
                        b = other.entries[k * other.cols + j]
                        if b:
                            acc = acc + a * b
                out.append(acc)
        return PolyMatrix(self.ctx, self.rows, other.cols, out)

    def scale(self, p):
        p = self.ctx.poly(p)
        return PolyMatrix(self.ctx, self.rows, self.cols, [p * a for a in self.entries])

    def map(self, fn, ctx=None):
        ctx = ctx or self.ctx
        return PolyMatrix(ctx, self.rows, self.cols, [fn(a) for a in self.entries])

    def is_zero(self):
        return not any(self.entries)

    def __eq__(self, other):
        if not isinstance(other, PolyMatrix):
            return NotImplemented
        return self.ctx == other.ctx and self.shape == other.shape and self.entries == other.entries

    def __hash__(self):
        return hash((self.shape, self.entries))

    def __repr__(self):
        return f"{type(self).__name__}({self.tolist()!r})"

    def __str__(self):
        return format_matrix(self)

    def to_json(self):
        return {"rows": self.rows, "cols": self.cols,
                "entries": [[to_string(e) for e in self.row(i)] for i in range(self.rows)]}

    @classmethod
    def from_json(cls, ctx, data):
        rows, cols = int(data["rows"]), int(data["cols"])
        entries = data["entries"]
        if len(entries) != rows or any(len(r) != cols for r in entries):
            raise ShapeError(f"entries do not form a {rows}x{cols} matrix")
        return cls(ctx, rows, cols, [_entry(ctx, e) for r in entries for e in r])


def _entry(ctx, e):
    if isinstance(e, str):
        return ctx.parse(e)
    return ctx.poly(e)


def format_matrix(m):
    cells = [[to_string(e) for e in m.row(i)] for i in range(m.rows)]
    if not cells or not m.cols:
        return f"[] ({m.rows}x{m.cols})"
    w = [max(len(cells[i][j]) for i in range(m.rows)) for j in range(m.cols)]
    return "\n".join("[ " + "  ".join(c.rjust(w[j]) for j, c in enumerate(r)) + " ]" for r in cells)


class SkewMatrix(PolyMatrix):
    """Skew-symmetric square matrix; the constructor rejects anything else."""

    __slots__ = ()

    def __init__(self, ctx, rows, cols, entries):
        super().__init__(ctx, rows, cols, entries)
        if rows != cols:
            raise NotSkewError(f"skew matrix must be square, got {rows}x{cols}")
        for i in range(rows):
            if self[i, i]:
                raise NotSkewError(f"nonzero diagonal entry at ({i + 1},{i + 1})")
            for j in range(i + 1, rows):
                if self[j, i] != -self[i, j]:
                    raise NotSkewError(f"entry ({j + 1},{i + 1}) is not minus entry ({i + 1},{j + 1})")

    @classmethod
    def from_upper(cls, ctx, upper):
        """Build from the strict upper triangle.

        ``upper`` is either a list of rows (row ``i`` holding the entries
        ``(i, i+1) .. (i, k-1)``) or a dict ``{(i, j): entry}`` with 1-based
        ``i < j`` and a ``"size"`` key.
        """
        if isinstance(upper, dict):
            k = upper["size"]
            get = {key: ctx.poly(v) for key, v in upper.items() if key != "size"}
            for (i, j) in get:
                if not 1 <= i < j <= k:
                    raise NotSkewError(f"({i},{j}) is not above the diagonal of a {k}x{k} matrix")
            vals = lambda i, j: get.get((i + 1, j + 1), ctx.zero())
        else:
            rows = [list(r) for r in upper]
            k = len(rows) + 1
            if rows and len(rows[-1]) == 0:
                k -= 1
                rows = rows[:-1]
            for i, r in enumerate(rows):
                if len(r) != k - 1 - i:
                    raise ShapeError(f"upper row {i + 1} should have {k - 1 - i} entries")
            vals = lambda i, j: _entry(ctx, rows[i][j - i - 1])
        full = [[ctx.zero()] * k for _ in range(k)]
        for i in range(k):
            for j in range(i + 1, k):
                v = vals(i, j)
                full[i][j] = v
                full[j][i] = -v
        return cls(ctx, k, k, [e for r in full for e in r])

    @classmethod
    def from_matrix(cls, m):
        return cls(m.ctx, m.rows, m.cols, m.entries)

    @property
    def size(self):
        return self.rows

    def delete_index(self, i):
        keep = [j for j in range(self.rows) if j != i]
        return SkewMatrix.from_matrix(self.submatrix(keep, keep))


# -- determinants --

def _check_square(m):
    if m.rows != m.cols:
        raise ShapeError(f"determinant of a non-square {m.rows}x{m.cols} matrix")


def det_cofactor(m):
    """Laplace expansion along the first row."""
    _check_square(m)
    return _cofactor(m.ctx, [m.row(i) for i in range(m.rows)])


def _cofactor(ctx, rows):
    n = len(rows)
    if n == 0:
        return ctx.one()
    if n == 1:
        return rows[0][0]
    if n == 2:
        return rows[0][0] * rows[1][1] - rows[0][1] * rows[1][0]
    acc = ctx.zero()
    for j, a in enumerate(rows[0]):
        if not a:
            continue
        minor = [r[:j] + r[j + 1:] for r in rows[1:]]
        t = a * _cofactor(ctx, minor)
        acc = acc + t if j % 2 == 0 else acc - t
    return acc


def det_minors(m):
    """Laplace expansion with every minor on the bottom rows computed once.

    Division-free, about ``n * 2^n`` products; the fast path for small sizes.
    """
    _check_square(m)
    n = m.rows
    rows = [m.row(i) for i in range(n)]
    # minors[cols] = det of the last len(cols) rows restricted to the column set cols
    minors = {(): m.ctx.one()}
    for size in range(1, n + 1):
        r = rows[n - size]
        nxt = {}
        for cols in combinations(range(n), size):
            acc = m.ctx.zero()
            for k, c in enumerate(cols):
                a = r[c]
                if not a:
                    continue
                sub = minors[cols[:k] + cols[k + 1:]]
                if not sub:
                    continue
                t = a * sub
                acc = acc + t if k % 2 == 0 else acc - t
            nxt[cols] = acc
        minors = nxt
    return minors[tuple(range(n))]


def det_bareiss(m):
    """Fraction-free Gaussian elimination; every division is exact."""
    _check_square(m)
    n = m.rows
    ctx = m.ctx
    if n == 0:
        return ctx.one()
    a = [m.row(i) for i in range(n)]
    sign = 1
    prev = ctx.one()
    for k in range(n - 1):
        if not a[k][k]:
            for p in range(k + 1, n):
                if a[p][k]:
                    a[k], a[p] = a[p], a[k]
                    sign = -sign
                    break
            else:
                return ctx.zero()
        piv = a[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = piv * a[i][j] - a[i][k] * a[k][j]
                a[i][j] = exact_div(num, prev) if num else num
            a[i][k] = ctx.zero()
        prev = piv
    d = a[n - 1][n - 1]
    return d if sign > 0 else -d


def determinant(m):
    _check_square(m)
    if m.rows <= 4:
        return det_cofactor(m)
    if m.rows <= 10:
        return det_minors(m)
    return det_bareiss(m)


def wedge(q):
    """Signed maximal minors: entry ``i`` is ``(-1)^(i+1) det(q without column i)``."""
    if q.cols != q.rows + 1:
        raise ShapeError(f"wedge needs an r x (r+1) matrix, got {q.rows}x{q.cols}")
    out = []
    for i in range(q.cols):
        d = determinant(q.delete(col=i))
        out.append(d if i % 2 == 0 else -d)
    return out


def minor(m, rows, cols):
    return determinant(m.submatrix(rows, cols))


# -- Pfaffians --

def pfaffian(a):
    """Pfaffian of an even skew matrix by expansion along the first row."""
    if not isinstance(a, SkewMatrix):
        a = SkewMatrix.from_matrix(a)
    k = a.size
    if k % 2 or k < 2:
        raise ShapeError(f"pfaffian needs an even size >= 2, got {k}")
    memo = {}
    return _pf(a, tuple(range(k)), memo)


def _pf(a, idx, memo):
    if not idx:
        return a.ctx.one()
    if idx in memo:
        return memo[idx]
    first = idx[0]
    acc = a.ctx.zero()
    for pos in range(1, len(idx)):
        e = a[first, idx[pos]]
        if not e:
            continue
        rest = idx[1:pos] + idx[pos + 1:]
        t = e * _pf(a, rest, memo)
        # pos is the 0-based position of j, so (-1)^j with 1-based j = pos + 1
        acc = acc - t if pos % 2 == 0 else acc + t
    memo[idx] = acc
    return acc


def pfaffians(a):
    """The Pfaffians ``Pf(A_1), ..., Pf(A_k)`` of an odd skew matrix."""
    if not isinstance(a, SkewMatrix):
        a = SkewMatrix.from_matrix(a)
    k = a.size
    if k % 2 == 0 or k < 3:
        raise ShapeError(f"odd Pfaffians need an odd size >= 3, got {k}")
    memo = {}
    full = tuple(range(k))
    return [_pf(a, full[:i] + full[i + 1:], memo) for i in range(k)]


def signed_pfaffian_row(a):
    """``((-1)^(i+1) Pf(A_i))_i``, the first map of the Pfaffian complex."""
    return [p if i % 2 == 0 else -p for i, p in enumerate(pfaffians(a))]


def all_minors(m, n):
    """Matrix of ``n x n`` minors, rows and columns indexed by sorted subsets.

    Subsets are enumerated in colex order (sorted by largest element first,
    then the rest), which is the basis order of the Koszul complexes.
    """
    rs = colex_subsets(m.rows, n)
    cs = colex_subsets(m.cols, n)
    return PolyMatrix(m.ctx, len(rs), len(cs), [minor(m, r, c) for r in rs for c in cs])


def colex_subsets(n, k):
    return sorted(combinations(range(n), k), key=lambda s: tuple(reversed(s)))
