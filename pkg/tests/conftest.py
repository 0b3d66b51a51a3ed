import random
from itertools import permutations
from pathlib import Path

import pytest

from kmunproj.ring import make_context

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"

_ACCEPTANCE = []


@pytest.fixture
def record():
    def _record(number, title, ok, detail=""):
        _ACCEPTANCE.append((number, title, ok, detail))
    return _record


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for number, title, ok, detail in sorted(_ACCEPTANCE):
        line = f"[{'PASS' if ok else 'FAIL'}] {number:>2}. {title}"
        if detail:
            line += f"  ({detail})"
        terminalreporter.write_line(line)


# -- independent oracles, deliberately naive --

def perm_sign(p):
    sign = 1
    p = list(p)
    for i in range(len(p)):
        while p[i] != i:
            j = p[i]
            p[i], p[j] = p[j], p[i]
            sign = -sign
    return sign


def leibniz_det(rows, one):
    """Determinant as the signed sum over all permutations."""
    n = len(rows)
    acc = one - one
    for p in permutations(range(n)):
        t = one
        for i in range(n):
            t = t * rows[i][p[i]]
        acc = acc + t if perm_sign(p) > 0 else acc - t
    return acc


def matchings(idx):
    if not idx:
        yield []
        return
    a = idx[0]
    for k in range(1, len(idx)):
        rest = idx[1:k] + idx[k + 1:]
        for m in matchings(rest):
            yield [(a, idx[k])] + m


def matching_pfaffian(rows, one):
    """Pfaffian as the sum over perfect matchings, signed by crossing parity."""
    n = len(rows)
    acc = one - one
    for m in matchings(list(range(n))):
        crossings = sum(1 for (a, b) in m for (c, d) in m if a < c < b < d)
        t = one
        for a, b in m:
            t = t * rows[a][b]
        acc = acc + t if crossings % 2 == 0 else acc - t
    return acc


def random_poly(rng, ctx, max_deg=2, max_terms=4, coeff=9):
    n = len(ctx)
    p = ctx.zero()
    for _ in range(rng.randint(0, max_terms)):
        e = [0] * n
        for _ in range(rng.randint(0, max_deg)):
            e[rng.randrange(n)] += 1
        c = rng.randint(-coeff, coeff)
        t = ctx.const(c)
        for i, k in enumerate(e):
            if k:
                t = t * ctx.gens()[i] ** k
        p = p + t
    return p


@pytest.fixture
def rng():
    return random.Random(20261018)


@pytest.fixture
def xyz():
    return make_context("x y z")
