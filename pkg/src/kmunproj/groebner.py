"""
Buchberger's algorithm over the rationals with integer-only arithmetic.

Polynomials are kept primitive (content 1, positive leading coefficient);
reductions are fraction free. Used as an independent membership and
ideal-equality oracle.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from math import gcd

from .ring import ContextMismatch, Polynomial, substitute

DEFAULT_MAX_PAIRS = 200_000
SOFT_VARIABLE_LIMIT = 16


class ResourceLimitExceeded(RuntimeError):
    def __init__(self, msg, stats):
        self.stats = stats
        super().__init__(f"{msg} ({', '.join(f'{k}={v}' for k, v in stats.items())})")


class Ideal:
    """A context plus an ordered list of generators."""

    def __init__(self, ctx, gens):
        self.ctx = ctx
        self.gens = tuple(ctx.poly(g) for g in gens)

    def __iter__(self):
        return iter(self.gens)

    def __len__(self):
        return len(self.gens)

    def __getitem__(self, i):
        return self.gens[i]

    def __eq__(self, other):
        # generator lists, not ideals; use ideal_equal for the latter
        if not isinstance(other, Ideal):
            return NotImplemented
        return self.ctx == other.ctx and self.gens == other.gens

    def __hash__(self):
        return hash(self.gens)

    def __repr__(self):
        return f"Ideal({[str(g) for g in self.gens]})"

    def __str__(self):
        return "(" + ", ".join(str(g) for g in self.gens) + ")"

    def embed(self, ctx):
        return Ideal(ctx, [g.embed(ctx) for g in self.gens])

    def map(self, assignment, target=None):
        target = target or self.ctx
        return Ideal(target, [substitute(g, assignment, target) for g in self.gens])


# -- internal fraction-free helpers on raw term dicts --

def _content(terms):
    g = 0
    for c in terms.values():
        g = gcd(g, c)
        if g == 1:
            break
    return g


def _lead(terms, key):
    return max(terms, key=key)


def _primitive(terms, key):
    if not terms:
        return terms
    g = _content(terms)
    if terms[_lead(terms, key)] < 0:
        g = -g
    if g == 1:
        return terms
    return {e: c // g for e, c in terms.items()}


def _divides(a, b):
    for x, y in zip(a, b):
        if x > y:
            return False
    return True


def _lcm(a, b):
    return tuple(x if x > y else y for x, y in zip(a, b))


def _axpy(f, a, g, b, shift):
    """``a*f - b*shift*g`` on term dicts."""
    out = {e: a * c for e, c in f.items()} if a != 1 else dict(f)
    for e, c in g.items():
        m = tuple(x + y for x, y in zip(e, shift))
        s = out.get(m, 0) - b * c
        if s:
            out[m] = s
        else:
            out.pop(m, None)
    return out


class _Elem:
    __slots__ = ("terms", "lm", "lc", "deg")

    def __init__(self, terms, key):
        self.terms = terms
        self.lm = _lead(terms, key)
        self.lc = terms[self.lm]
        self.deg = sum(self.lm)


def _reduce(terms, basis, key, full=True):
    """Fraction-free reduction.

    Returns ``(d, r)`` with ``d > 0`` and ``d * terms - r`` in the ideal of
    ``basis``; ``r`` has no term divisible by a leading monomial of the
    basis when ``full`` (otherwise only its leading term is irreducible).
    """
    d = 1
    f = dict(terms)
    rem = {}
    while f:
        e = _lead(f, key)
        c = f[e]
        for b in basis:
            if _divides(b.lm, e):
                g = gcd(c, b.lc)
                mult = b.lc // g
                if mult < 0:
                    mult = -mult
                    fac = -(c // g)
                else:
                    fac = c // g
                shift = tuple(x - y for x, y in zip(e, b.lm))
                f = _axpy(f, mult, b.terms, fac, shift)
                if mult != 1:
                    d *= mult
                    if rem:
                        rem = {k: v * mult for k, v in rem.items()}
                break
        else:
            if not full:
                rem.update(f)
                return d, rem
            rem[e] = c
            del f[e]
        # keep numbers small: strip the common content of f, rem and d
        if f and d > 1:
            g = gcd(_content(f), d)
            if rem:
                g = gcd(g, _content(rem))
            if g > 1:
                f = {k: v // g for k, v in f.items()}
                rem = {k: v // g for k, v in rem.items()}
                d //= g
    return d, rem


def _spoly(a, b):
    lcm = _lcm(a.lm, b.lm)
    sa = tuple(x - y for x, y in zip(lcm, a.lm))
    sb = tuple(x - y for x, y in zip(lcm, b.lm))
    g = gcd(a.lc, b.lc)
    left = {tuple(x + y for x, y in zip(e, sa)): c * (b.lc // g) for e, c in a.terms.items()}
    return _axpy(left, 1, b.terms, a.lc // g, sb)


@dataclass(frozen=True)
class GroebnerBasis:
    ctx: object
    basis: tuple
    source: Ideal
    stats: dict

    def __iter__(self):
        return iter(self.basis)

    def __len__(self):
        return len(self.basis)

    def leading_monomials(self):
        return [b.leading_term()[0] for b in self.basis]


def buchberger(ideal, max_pairs=DEFAULT_MAX_PAIRS):
    """Reduced Groebner basis of ``ideal`` over the rationals (primitive integer form).

    Pairs are processed by smallest lcm degree, ties broken by index.
    Raises :class:`ResourceLimitExceeded` after ``max_pairs`` S-pairs.
    """
    ctx = ideal.ctx
    if len(ctx) > SOFT_VARIABLE_LIMIT:
        warnings.warn(f"Groebner basis in {len(ctx)} variables may be slow", RuntimeWarning, stacklevel=2)
    key = ctx.key
    G = []
    pairs = set()
    processed = 0
    zero_reductions = 0

    def add(terms):
        new = _Elem(_primitive(terms, key), key)
        k = len(G)
        G.append(new)
        for i in range(k):
            if G[i] is not None:
                pairs.add((i, k))

    for g in ideal.gens:
        if g:
            d, r = _reduce(dict(g._terms), [b for b in G if b is not None], key, full=False)
            if r:
                add(r)

    while pairs:
        i, j = min(pairs, key=lambda p: (sum(_lcm(G[p[0]].lm, G[p[1]].lm)), p[1], p[0]))
        pairs.discard((i, j))
        a, b = G[i], G[j]
        lcm = _lcm(a.lm, b.lm)
        # product criterion
        if all(x == 0 or y == 0 for x, y in zip(a.lm, b.lm)):
            continue
        # chain criterion
        skip = False
        for k, c in enumerate(G):
            if k in (i, j):
                continue
            if _divides(c.lm, lcm):
                pik = (min(i, k), max(i, k))
                pjk = (min(j, k), max(j, k))
                if pik not in pairs and pjk not in pairs:
                    skip = True
                    break
        if skip:
            continue
        processed += 1
        if processed > max_pairs:
            raise ResourceLimitExceeded("S-pair budget exhausted",
                                        {"pairs_processed": processed - 1, "pairs_pending": len(pairs) + 1,
                                         "basis_size": len(G), "max_pairs": max_pairs})
        s = _spoly(a, b)
        if not s:
            zero_reductions += 1
            continue
        _, r = _reduce(s, G, key, full=False)
        if not r:
            zero_reductions += 1
            continue
        add(r)

    basis = _interreduce(G, key)
    polys = tuple(Polynomial(ctx, b.terms) for b in basis)
    stats = {"pairs_processed": processed, "zero_reductions": zero_reductions, "size": len(polys)}
    return GroebnerBasis(ctx, polys, ideal, stats)


def _interreduce(G, key):
    # minimal basis: drop elements whose leading monomial is divisible by another's
    elems = sorted(G, key=lambda b: key(b.lm))
    minimal = []
    for b in elems:
        if not any(_divides(m.lm, b.lm) for m in minimal):
            minimal.append(b)
    out = []
    for idx, b in enumerate(minimal):
        others = minimal[:idx] + minimal[idx + 1:]
        lead = {b.lm: b.terms[b.lm]}
        tail = {e: c for e, c in b.terms.items() if e != b.lm}
        d, r = _reduce(tail, others, key, full=True)
        terms = {e: c * d for e, c in lead.items()}
        terms.update(r)
        out.append(_Elem(_primitive(terms, key), key))
    out.sort(key=lambda b: key(b.lm))
    return out


def _basis_elems(G):
    key = G.ctx.key
    return [_Elem(dict(b._terms), key) for b in G.basis]


def reduce_with_denominator(p, G):
    """Return ``(d, r)``: the rational normal form of ``p`` is ``r / d``."""
    if p.ctx != G.ctx:
        raise ContextMismatch("polynomial and basis live in different contexts")
    if not p:
        return 1, p
    d, r = _reduce(dict(p._terms), _basis_elems(G), G.ctx.key, full=True)
    if not r:
        return 1, Polynomial(p.ctx, {})
    g = gcd(_content(r), d)
    if g > 1:
        r = {e: c // g for e, c in r.items()}
        d //= g
    return d, Polynomial(p.ctx, r)


def normal_form(p, G):
    """Remainder of ``p`` modulo ``G`` with denominators cleared.

    Zero exactly when ``p`` lies in the ideal. When the rational remainder
    is already integral (always the case for bases with unit leading
    coefficients) this is the remainder itself, so ``p - normal_form(p)``
    lies in the ideal; in general see :func:`reduce_with_denominator`.
    """
    return reduce_with_denominator(p, G)[1]


def is_member(p, G):
    return not normal_form(p, G)


def contains(ideal_or_basis, p, max_pairs=DEFAULT_MAX_PAIRS):
    G = ideal_or_basis if isinstance(ideal_or_basis, GroebnerBasis) else buchberger(ideal_or_basis, max_pairs)
    return is_member(p, G)


def is_groebner(G):
    """Every S-polynomial of the basis reduces to zero."""
    key = G.ctx.key
    elems = _basis_elems(G)
    for i in range(len(elems)):
        for j in range(i + 1, len(elems)):
            s = _spoly(elems[i], elems[j])
            if s and _reduce(s, elems, key, full=True)[1]:
                return False
    return True


def is_reduced(G):
    key = G.ctx.key
    elems = _basis_elems(G)
    for i, a in enumerate(elems):
        for j, b in enumerate(elems):
            if i != j and any(_divides(b.lm, e) for e in a.terms):
                return False
        if a.lc <= 0 or _content(a.terms) != 1:
            return False
    return True


@dataclass
class Equality:
    equal: bool
    witness: Polynomial | None = None
    witness_nf: Polynomial | None = None
    flipped: bool = False
    side: str | None = None

    def __bool__(self):
        return self.equal

    def __str__(self):
        if self.equal:
            return "equal" + (" (after sign flip)" if self.flipped else "")
        return f"not equal: {self.side} generator {self.witness} has normal form {self.witness_nf}"


def _compare(I, J, max_pairs):
    GJ = buchberger(J, max_pairs)
    for g in I.gens:
        nf = normal_form(g, GJ)
        if nf:
            return Equality(False, g, nf, side="left")
    GI = buchberger(I, max_pairs)
    for g in J.gens:
        nf = normal_form(g, GI)
        if nf:
            return Equality(False, g, nf, side="right")
    return Equality(True)


def ideal_equal(I, J, flip=None, max_pairs=DEFAULT_MAX_PAIRS):
    """Decide ``I == J`` as ideals over the rationals.

    With ``flip`` set to a variable name, also accept equality after
    substituting ``flip -> -flip`` in ``I``. On failure the witness is the
    first non-member generator (from the unflipped comparison).
    """
    if I.ctx != J.ctx:
        raise ContextMismatch("ideals live in different contexts")
    res = _compare(I, J, max_pairs)
    if res or flip is None:
        return res
    ctx = I.ctx
    assignment = {n: ctx.var(n) for n in ctx.names}
    assignment[flip] = -ctx.var(flip)
    res2 = _compare(I.map(assignment, ctx), J, max_pairs)
    if res2:
        res2.flipped = True
        return res2
    return res
