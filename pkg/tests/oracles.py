"""Independent brute-force oracles.  They share no arithmetic with the library beyond reading
structure constants and generator lists out of the objects under test."""
from __future__ import annotations

from fractions import Fraction
from itertools import product as iproduct

from tropical_lie.membership import BOTTOM
from tropical_lie.doubling import DoubledElement


# -- membership ------------------------------------------------------------------------------


def brute_member_nat(gens, v):
    """Enumerate coefficient vectors; a coefficient above max(v) overshoots any nonzero generator."""
    top = max(v, default=0)
    live = [g for g in gens if any(g)]
    for cs in iproduct(range(top + 1), repeat=len(live)):
        if all(sum(c * g[j] for c, g in zip(cs, live)) == v[j] for j in range(len(v))):
            return True
    return not any(v)


def _mp_add(a, b):
    if a is BOTTOM:
        return b
    if b is BOTTOM:
        return a
    return max(a, b)


def _mp_mul(a, b):
    return BOTTOM if a is BOTTOM or b is BOTTOM else a + b


MP_GRID = [BOTTOM] + [Fraction(k, 2) for k in range(-16, 17)]


def brute_member_maxplus(gens, v, grid=MP_GRID):
    """Search coefficients over a rational grid (half-integers in [-8, 8] plus -inf)."""
    for cs in iproduct(grid, repeat=len(gens)):
        ok = True
        for j, target in enumerate(v):
            acc = BOTTOM
            for c, g in zip(cs, gens):
                acc = _mp_add(acc, _mp_mul(c, g[j]))
            if acc != target:
                ok = False
                break
        if ok:
            return True
    return False


def null_member(sr, gens, v):
    """Membership in the span of gens for the small nulls used by the fixtures."""
    v = tuple(v)
    if all(sr.is_zero(x) for x in v):
        return True
    gens = [tuple(g) for g in gens if not all(sr.is_zero(x) for x in g)]
    k = sr.kind
    if k == "naturals":
        return brute_member_nat(gens, v)
    if k == "booleans":
        for mask in iproduct((0, 1), repeat=len(gens)):
            acc = tuple(int(any(m and g[j] for m, g in zip(mask, gens))) for j in range(len(v)))
            if acc == v:
                return True
        return False
    if k == "nonneg_rationals":
        if len(gens) != 1:
            raise NotImplementedError("oracle handles one generator over Q+")
        g = gens[0]
        j = next(i for i, x in enumerate(g) if x)
        c = Fraction(v[j]) / g[j]
        return c >= 0 and all(Fraction(a) == c * b for a, b in zip(v, g))
    if k == "integers":
        if gens:
            raise NotImplementedError("oracle handles the zero null over the integers")
        return False
    raise NotImplementedError(k)


# -- Lie axioms ------------------------------------------------------------------------------


def axiom_failures(lp):
    """(axiom, index) pairs whose vector falls outside the null, recomputed from the table."""
    sr, n = lp.sr, lp.rank
    T = lp.sc.table

    def add(a, b):
        return tuple(sr.add(x, y) for x, y in zip(a, b))

    def br(a, b):
        out = tuple(sr.zero for _ in range(n))
        for i in range(n):
            for j in range(n):
                c = sr.mul(a[i], b[j])
                if sr.is_zero(c):
                    continue
                out = add(out, tuple(sr.mul(c, t) for t in T[i][j]))
        return out

    E = [tuple(sr.one if k == i else sr.zero for k in range(n)) for i in range(n)]
    gens = lp.null.generators
    bad = set()

    def test(axiom, idx, v):
        if not null_member(sr, gens, v):
            bad.add((axiom, idx))

    for i in range(n):
        test("fgen-1", (i,), br(E[i], E[i]))
    for i in range(n):
        for j in range(i + 1, n):
            test("fgen-2", (i, j), add(br(E[i], E[j]), br(E[j], E[i])))
    for i, j, k in iproduct(range(n), repeat=3):
        x, y, z = E[i], E[j], E[k]
        test("fgen-3", (i, j, k), add(add(br(br(x, y), z), br(br(y, z), x)), br(br(z, x), y)))
        test("fgen-4", (i, j, k), add(add(br(z, br(y, x)), br(x, br(z, y))), br(y, br(x, z))))
    for gi, g in enumerate(gens):
        for j in range(n):
            test("LieD-f", (f"g{gi}", j, "L"), br(g, E[j]))
            test("LieD-f", (f"g{gi}", j, "R"), br(E[j], g))
    return bad


# -- doubling --------------------------------------------------------------------------------


def _matmul(a, b):
    n = int(round(len(a) ** 0.5))
    return tuple(sum(a[i * n + l] * b[l * n + j] for l in range(n)) for i in range(n) for j in range(n))


def twist_oracle(x: DoubledElement, y: DoubledElement) -> DoubledElement:
    """(A + B t)(A' + B' t) in M_n(N)[t]/(t^2 - 1)."""
    (a, b), (c, d) = (x.pos, x.neg), (y.pos, y.neg)
    one = tuple(p + q for p, q in zip(_matmul(a, c), _matmul(b, d)))
    tee = tuple(p + q for p, q in zip(_matmul(a, d), _matmul(b, c)))
    return DoubledElement(one, tee)
