"""
Sparse multivariate polynomials over the integers.

A :class:`VarContext` fixes the variable names and the monomial order. A
:class:`Polynomial` is an immutable map from exponent tuples to nonzero
Python ints, tied to one context.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from math import gcd
from typing import Iterable, Mapping, Sequence

MAX_EXPONENT = 2**32 - 1
ORDERS = ("grevlex", "lex")
_NAME_RE = re.compile(r"[A-Za-z][A-Za-z0-9_]*\Z")


class ContextMismatch(ValueError):
    pass


class ParseError(ValueError):
    def __init__(self, msg, text, pos):
        self.text = text
        self.pos = pos
        super().__init__(f"{msg} at position {pos}: {text!r}")


class InexactDivision(ArithmeticError):
    """Raised by :func:`exact_div`; ``remainder`` is a nonzero witness."""

    def __init__(self, dividend, divisor, remainder):
        self.dividend = dividend
        self.divisor = divisor
        self.remainder = remainder
        super().__init__(f"{divisor} does not divide {dividend} (remainder {remainder})")


class ExponentOverflow(OverflowError):
    pass


class NotLinearError(ValueError):
    def __init__(self, poly, term):
        self.poly = poly
        self.term = term
        super().__init__(f"term {term} of {poly} does not have degree 1 in the given variables")


def grevlex_key(e):
    return (sum(e), tuple(-x for x in reversed(e)))


def lex_key(e):
    return e


def order_key(order):
    if order == "grevlex":
        return grevlex_key
    if order == "lex":
        return lex_key
    raise ValueError(f"unknown monomial order {order!r}")


@dataclass(frozen=True)
class VarContext:
    names: tuple[str, ...]
    order: str = "grevlex"
    _index: dict = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        names = tuple(self.names)
        object.__setattr__(self, "names", names)
        for n in names:
            if not isinstance(n, str) or not _NAME_RE.match(n):
                raise ValueError(f"invalid variable name {n!r}")
        if len(set(names)) != len(names):
            raise ValueError(f"duplicate variable names in {names}")
        if self.order not in ORDERS:
            raise ValueError(f"unknown monomial order {self.order!r}")
        object.__setattr__(self, "_index", {n: i for i, n in enumerate(names)})

    def __len__(self):
        return len(self.names)

    def __contains__(self, name):
        return name in self._index

    def index(self, name):
        try:
            return self._index[name]
        except KeyError:
            raise KeyError(f"undeclared variable {name!r}") from None

    @property
    def key(self):
        return order_key(self.order)

    def var(self, name):
        e = [0] * len(self.names)
        e[self.index(name)] = 1
        return Polynomial(self, {tuple(e): 1})

    def gens(self):
        return tuple(self.var(n) for n in self.names)

    def zero(self):
        return Polynomial(self, {})

    def one(self):
        return self.const(1)

    def const(self, c):
        c = int(c)
        return Polynomial(self, {(0,) * len(self.names): c} if c else {})

    def extend(self, *names):
        for n in names:
            if n in self._index:
                raise ValueError(f"variable {n!r} already in context")
        return VarContext(self.names + tuple(names), self.order)

    def with_order(self, order):
        return VarContext(self.names, order)

    def parse(self, text):
        return parse(self, text)

    def poly(self, value):
        """Coerce an int, str or Polynomial into this context."""
        if isinstance(value, Polynomial):
            if value.ctx != self:
                raise ContextMismatch(f"polynomial in {value.ctx.names}, expected {self.names}")
            return value
        if isinstance(value, bool):
            raise TypeError("bool is not a polynomial")
        if isinstance(value, int):
            return self.const(value)
        if isinstance(value, str):
            return parse(self, value)
        raise TypeError(f"cannot make a polynomial from {type(value).__name__}")


class Polynomial:
    __slots__ = ("ctx", "_terms", "_hash", "_maxexp")

    def __init__(self, ctx, terms):
        # trusted: callers pass exponent tuples of the right length and
        # nonzero int coefficients
        self.ctx = ctx
        self._terms = terms
        self._hash = None
        self._maxexp = None

    @classmethod
    def from_terms(cls, ctx, terms):
        n = len(ctx)
        out = {}
        for e, c in dict(terms).items():
            e = tuple(int(x) for x in e)
            if len(e) != n:
                raise ValueError(f"exponent {e} has length {len(e)}, context has {n} variables")
            if any(x < 0 for x in e):
                raise ValueError(f"negative exponent in {e}")
            if any(x > MAX_EXPONENT for x in e):
                raise ExponentOverflow(f"exponent {e} exceeds {MAX_EXPONENT}")
            c = int(c)
            if c:
                out[e] = out.get(e, 0) + c
                if not out[e]:
                    del out[e]
        return cls(ctx, out)

    # -- inspection --

    @property
    def terms(self):
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def is_zero(self):
        return not self._terms

    def is_constant(self):
        return not self._terms or (len(self._terms) == 1 and not any(next(iter(self._terms))))

    def sorted_terms(self):
        return sorted(self._terms.items(), key=lambda t: self.ctx.key(t[0]), reverse=True)

    def leading_term(self):
        if not self._terms:
            raise ValueError("zero polynomial has no leading term")
        e = max(self._terms, key=self.ctx.key)
        return e, self._terms[e]

    def total_degree(self):
        if not self._terms:
            return -1
        return max(sum(e) for e in self._terms)

    def degree_in(self, names):
        idx = [self.ctx.index(n) for n in names]
        if not self._terms:
            return -1
        return max(sum(e[i] for i in idx) for e in self._terms)

    def variables(self):
        used = set()
        for e in self._terms:
            used.update(i for i, x in enumerate(e) if x)
        return tuple(self.ctx.names[i] for i in sorted(used))

    def content(self):
        g = 0
        for c in self._terms.values():
            g = gcd(g, c)
        return g

    def max_exponent(self):
        if self._maxexp is None:
            self._maxexp = max((max(e, default=0) for e in self._terms), default=0)
        return self._maxexp

    # -- arithmetic --

    def _coerce(self, other):
        if isinstance(other, Polynomial):
            if other.ctx is not self.ctx and other.ctx != self.ctx:
                raise ContextMismatch(f"contexts differ: {self.ctx.names} vs {other.ctx.names}")
            return other
        if isinstance(other, int) and not isinstance(other, bool):
            return self.ctx.const(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self._terms)
        for e, c in other._terms.items():
            s = out.get(e, 0) + c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        return Polynomial(self.ctx, out)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial(self.ctx, {e: -c for e, c in self._terms.items()})

    def __pos__(self):
        return self

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self._terms)
        for e, c in other._terms.items():
            s = out.get(e, 0) - c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        return Polynomial(self.ctx, out)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other - self

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if not self._terms or not other._terms:
            return Polynomial(self.ctx, {})
        if self.max_exponent() + other.max_exponent() > MAX_EXPONENT:
            raise ExponentOverflow("product exponent exceeds 32 bits")
        out = {}
        get = out.get
        for ea, ca in self._terms.items():
            for eb, cb in other._terms.items():
                e = tuple([x + y for x, y in zip(ea, eb)])
                out[e] = get(e, 0) + ca * cb
        return Polynomial(self.ctx, {e: c for e, c in out.items() if c})

    __rmul__ = __mul__

    def scale(self, k):
        if not k:
            return Polynomial(self.ctx, {})
        return Polynomial(self.ctx, {e: c * k for e, c in self._terms.items()})

    def __pow__(self, n):
        if not isinstance(n, int) or n < 0:
            raise ValueError("exponent must be a non-negative int")
        if n and self.max_exponent() * n > MAX_EXPONENT:
            raise ExponentOverflow(f"power {n} exceeds exponent bound")
        result = self.ctx.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.ctx == other.ctx and self._terms == other._terms
        if isinstance(other, int) and not isinstance(other, bool):
            return self._terms == self.ctx.const(other)._terms
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.ctx.names, frozenset(self._terms.items())))
        return self._hash

    # -- printing --

    def __str__(self):
        return to_string(self)

    def __repr__(self):
        return f"Polynomial({to_string(self)!r})"

    # -- conversions --

    def embed(self, ctx):
        """Same polynomial viewed in a context whose names include ours."""
        if ctx == self.ctx:
            return self
        pos = [ctx.index(n) for n in self.ctx.names]
        n = len(ctx)
        out = {}
        for e, c in self._terms.items():
            f = [0] * n
            for i, x in zip(pos, e):
                f[i] = x
            out[tuple(f)] = c
        return Polynomial(ctx, out)

    def primitive(self):
        """Divide by the content and make the leading coefficient positive."""
        if not self._terms:
            return self
        g = self.content()
        if self.leading_term()[1] < 0:
            g = -g
        if g == 1:
            return self
        return Polynomial(self.ctx, {e: c // g for e, c in self._terms.items()})


def _monomial_str(names, e):
    parts = []
    for n, x in zip(names, e):
        if x == 1:
            parts.append(n)
        elif x:
            parts.append(f"{n}^{x}")
    return "*".join(parts)


def to_string(p):
    if not p._terms:
        return "0"
    out = []
    for k, (e, c) in enumerate(p.sorted_terms()):
        mono = _monomial_str(p.ctx.names, e)
        a = abs(c)
        if not mono:
            body = str(a)
        elif a == 1:
            body = mono
        else:
            body = f"{a}*{mono}"
        if k == 0:
            out.append(body if c > 0 else "-" + body)
        else:
            out.append((" + " if c > 0 else " - ") + body)
    return "".join(out)


# -- parsing --

_TOKEN_RE = re.compile(r"\s*(?:(\d+)|([A-Za-z][A-Za-z0-9_]*)|(.))")


def _tokenize(text):
    toks = []
    pos = 0
    n = len(text)
    while pos < n:
        m = _TOKEN_RE.match(text, pos)
        if m is None:
            break
        start = m.start(m.lastindex) if m.lastindex else m.end()
        if m.group(1) is not None:
            toks.append(("int", int(m.group(1)), start))
        elif m.group(2) is not None:
            toks.append(("name", m.group(2), start))
        elif m.group(3) is not None:
            ch = m.group(3)
            if ch not in "+-*^()":
                raise ParseError(f"unexpected character {ch!r}", text, start)
            toks.append((ch, ch, start))
        pos = m.end()
    toks.append(("end", None, len(text)))
    return toks


class _Parser:
    def __init__(self, ctx, text):
        self.ctx = ctx
        self.text = text
        self.toks = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.toks[self.i]

    def take(self):
        t = self.toks[self.i]
        self.i += 1
        return t

    def error(self, msg, tok=None):
        tok = tok or self.peek()
        raise ParseError(msg, self.text, tok[2])

    def parse(self):
        if self.peek()[0] == "end":
            self.error("empty expression")
        p = self.expr()
        tok = self.peek()
        if tok[0] != "end":
            if tok[0] in ("int", "name", "("):
                self.error("implicit multiplication is not allowed")
            self.error(f"unexpected {tok[1]!r}")
        return p

    def expr(self):
        p = self.term()
        while self.peek()[0] in ("+", "-"):
            op = self.take()[0]
            q = self.term()
            p = p + q if op == "+" else p - q
        return p

    def term(self):
        p = self.factor()
        while self.peek()[0] == "*":
            self.take()
            p = p * self.factor()
        return p

    def factor(self):
        kind = self.peek()[0]
        if kind == "-":
            self.take()
            return -self.factor()
        if kind == "+":
            self.take()
            return self.factor()
        return self.power()

    def power(self):
        base = self.atom()
        if self.peek()[0] == "^":
            self.take()
            tok = self.peek()
            if tok[0] == "-":
                self.error("negative exponent")
            if tok[0] != "int":
                self.error("exponent must be a non-negative integer literal")
            self.take()
            if tok[1] > MAX_EXPONENT:
                raise ExponentOverflow(f"exponent {tok[1]} exceeds {MAX_EXPONENT}")
            base = base ** tok[1]
            if self.peek()[0] == "^":
                self.error("chained exponents need parentheses")
        return base

    def atom(self):
        tok = self.take()
        kind = tok[0]
        if kind == "int":
            return self.ctx.const(tok[1])
        if kind == "name":
            if tok[1] not in self.ctx:
                raise ParseError(f"undeclared variable {tok[1]!r}", self.text, tok[2])
            return self.ctx.var(tok[1])
        if kind == "(":
            p = self.expr()
            if self.peek()[0] != ")":
                self.error("expected ')'")
            self.take()
            return p
        if kind == "end":
            self.error("unexpected end of expression", tok)
        self.error(f"unexpected {tok[1]!r}", tok)


def parse(ctx, text):
    """Parse an expression such as ``"x3*z2 - x4*z1"`` in ``ctx``."""
    if not isinstance(text, str):
        raise TypeError("expression must be a string")
    return _Parser(ctx, text).parse()


# -- operations --

def arith(a, b, op):
    if a.ctx != b.ctx:
        raise ContextMismatch(f"contexts differ: {a.ctx.names} vs {b.ctx.names}")
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    raise ValueError(f"unknown op {op!r}")


def _divides(a, b):
    return all(x <= y for x, y in zip(a, b))


def exact_div(a, d):
    """Return ``q`` with ``a == q * d``; raise :class:`InexactDivision` otherwise."""
    if d.ctx != a.ctx:
        raise ContextMismatch("dividend and divisor live in different contexts")
    if not d:
        raise ZeroDivisionError("division by the zero polynomial")
    key = a.ctx.key
    ld, lc = d.leading_term()
    q = {}
    r = a
    while r:
        e, c = max(r._terms.items(), key=lambda t: key(t[0]))
        if not _divides(ld, e) or c % lc:
            raise InexactDivision(a, d, r)
        m = tuple(x - y for x, y in zip(e, ld))
        k = c // lc
        q[m] = k
        r = r - Polynomial(a.ctx, {m: k}) * d
    return Polynomial(a.ctx, q)


def substitute(p, assignment, target=None):
    """Ring homomorphism sending each variable of ``p.ctx`` to its image.

    ``assignment`` maps variable names to polynomials (or ints) of one
    common target context. Every variable of ``p``'s context needs an image.
    """
    images = {}
    for name in p.ctx.names:
        if name not in assignment:
            raise KeyError(f"no image given for variable {name!r}")
        images[name] = assignment[name]
    for v in images.values():
        if isinstance(v, Polynomial):
            if target is None:
                target = v.ctx
            elif v.ctx != target:
                raise ContextMismatch("images live in different contexts")
    if target is None:
        raise ValueError("cannot infer target context; pass target=")
    imgs = [target.poly(images[n]) for n in p.ctx.names]
    powers = [dict() for _ in imgs]

    def pw(i, k):
        cache = powers[i]
        if k not in cache:
            cache[k] = imgs[i] ** k
        return cache[k]

    acc = {}
    for e, c in p._terms.items():
        t = target.const(c)
        for i, k in enumerate(e):
            if k:
                t = t * pw(i, k)
                if not t:
                    break
        for f, d in t._terms.items():
            s = acc.get(f, 0) + d
            if s:
                acc[f] = s
            else:
                acc.pop(f, None)
    return Polynomial(target, acc)


def linear_coeffs(p, zvars):
    """Write ``p = sum(c_k * z_k)`` with every ``c_k`` free of the ``zvars``."""
    ctx = p.ctx
    idx = [ctx.index(z) for z in zvars]
    slot = {i: k for k, i in enumerate(idx)}
    out = [dict() for _ in idx]
    for e, c in p._terms.items():
        hits = [i for i in idx if e[i]]
        if len(hits) != 1 or e[hits[0]] != 1:
            raise NotLinearError(p, to_string(Polynomial(ctx, {e: c})))
        i = hits[0]
        f = list(e)
        f[i] = 0
        out[slot[i]][tuple(f)] = c
    return [Polynomial(ctx, d) for d in out]


def polys(ctx, texts: Iterable) -> list:
    return [ctx.poly(t) for t in texts]


def make_context(names: Sequence[str] | str, order: str = "grevlex") -> VarContext:
    if isinstance(names, str):
        names = names.replace(",", " ").split()
    return VarContext(tuple(names), order)


def sum_polys(ctx, items):
    acc = ctx.zero()
    for p in items:
        acc = acc + p
    return acc


def assignment_from(ctx: VarContext, mapping: Mapping) -> dict:
    """Identity on ``ctx`` overridden by ``mapping`` (values parsed in ``ctx``)."""
    out = {n: ctx.var(n) for n in ctx.names}
    for k, v in mapping.items():
        out[k] = ctx.poly(v)
    return out
