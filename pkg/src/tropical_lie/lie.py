"""Lie pairs given by structure constants, and the axiom checkers."""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from itertools import product as iproduct

from .membership import DEFAULT_BOUND
from .modules import (NegationSpec, PairDef, PairError, Submodule, fmt_vec, is_zero_vec, unit_vec,
                      vadd, vscale, vsum, zero_vec)
from .reports import CheckReport
from .semiring import SemiringSpec


class DegeneratePairError(PairError):
    pass


@dataclass(frozen=True)
class StructureConstants:
    """table[i][j] is the coefficient vector of b_i * b_j (a bilinear product or bracket)."""

    sr: SemiringSpec
    rank: int
    table: tuple

    def __post_init__(self):
        t = tuple(tuple(tuple(self.sr.coerce(x) for x in v) for v in row) for row in self.table)
        if len(t) != self.rank or any(len(r) != self.rank or any(len(v) != self.rank for v in r) for r in t):
            raise PairError("structure constants have the wrong shape")
        object.__setattr__(self, "table", t)

    @staticmethod
    def from_dict(sr, rank, entries: dict):
        z = zero_vec(sr, rank)
        rows = [[entries.get((i, j), z) for j in range(rank)] for i in range(rank)]
        return StructureConstants(sr, rank, rows)

    @staticmethod
    def from_function(sr, rank, f):
        return StructureConstants(sr, rank, [[f(i, j) for j in range(rank)] for i in range(rank)])

    def apply(self, x, y):
        sr, n = self.sr, self.rank
        acc = [sr.zero] * n
        for i, a in enumerate(x):
            if sr.is_zero(a):
                continue
            row = self.table[i]
            for j, b in enumerate(y):
                if sr.is_zero(b):
                    continue
                c = sr.mul(a, b)
                for k, t in enumerate(row[j]):
                    if not sr.is_zero(t):
                        acc[k] = sr.add(acc[k], sr.mul(c, t))
        return tuple(acc)

    def entry(self, i, j):
        return self.table[i][j]

    def with_entry(self, i, j, v):
        rows = [list(r) for r in self.table]
        rows[i][j] = tuple(v)
        return StructureConstants(self.sr, self.rank, rows)


@dataclass(frozen=True)
class LiePairDef:
    pair: PairDef
    sc: StructureConstants
    flags: frozenset = frozenset({"bilinear"})
    negation: NegationSpec | None = None
    meta: dict = field(default_factory=dict, compare=False, hash=False)

    def __post_init__(self):
        if self.sc.rank != self.pair.rank or self.sc.sr != self.pair.sr:
            raise PairError("structure constants do not match the carrier")
        if not self.meta.get("allow_degenerate"):
            if self.is_degenerate():
                raise DegeneratePairError("L = L0: every basis element is null")

    @property
    def sr(self):
        return self.pair.sr

    @property
    def rank(self):
        return self.pair.rank

    @property
    def names(self):
        return self.pair.names

    @property
    def null(self) -> Submodule:
        return self.pair.null

    def bracket(self, x, y):
        return self.sc.apply(x, y)

    def basis(self, i):
        return self.pair.basis(i)

    def is_degenerate(self):
        return all(self.null.contains(self.basis(i)) == "in" for i in range(self.rank))


def bracket_eval(lp: LiePairDef, x, y):
    if hasattr(x, "values"):
        x = x.values
    if hasattr(y, "values"):
        y = y.values
    return lp.bracket(x, y)


# -- null saturation ---------------------------------------------------------------------


def saturate_null(sr, sc: StructureConstants, gens, max_rounds=8, bound=DEFAULT_BOUND,
                  extra=(), stop_if_degenerate=False, max_gens=None):
    """Close span(gens) under brackets with basis elements on both sides.

    Returns (Submodule, reached_fixpoint).  Stops early, unsaturated, once more than
    max_gens generators have accumulated.
    """
    n = sc.rank
    sub = Submodule(sr, n, tuple(gens) + tuple(extra))
    units = [unit_vec(sr, n, j) for j in range(n)]

    def degenerate(s):
        return all(s.contains(u, bound) == "in" for u in units)

    if stop_if_degenerate and degenerate(sub):
        raise DegeneratePairError("L0 = L before saturation")
    frontier = list(sub.generators)
    for _ in range(max_rounds):
        new = []
        for g in frontier:
            added = False
            for e in units:
                for v in (sc.apply(g, e), sc.apply(e, g)):
                    if is_zero_vec(sr, v) or v in new:
                        continue
                    if sub.contains(v, bound) != "in":
                        new.append(v)
                        sub = sub.with_generators([v])
                        added = True
                        if max_gens is not None and len(sub.generators) > max_gens:
                            return Submodule(sr, n, sub.generators, False), False
            if added and stop_if_degenerate and degenerate(sub):
                raise DegeneratePairError("saturation reached L0 = L")
        if not new:
            return Submodule(sr, n, sub.generators, True), True
        frontier = new
    return Submodule(sr, n, sub.generators, False), False


# -- axiom vectors -------------------------------------------------------------------------

AXIOMS = ("fgen-1", "fgen-2", "fgen-3", "fgen-4", "LieD-f")


def axiom_vectors(lp: LiePairDef):
    """Yield (axiom, index, vector) whose membership in L0 the Lie-pair axioms demand.

    fgen-3 is the cyclic left-nested Jacobi sum, fgen-4 the same for the reflected bracket
    (x, y) -> [y x]; LieD-f asks [g b_j] and [b_j g] to be null for each null generator g.
    """
    sr, n = lp.sr, lp.rank
    sc = lp.sc
    t = sc.table
    for i in range(n):
        yield "fgen-1", (i,), t[i][i]
    for i in range(n):
        for j in range(i + 1, n):
            yield "fgen-2", (i, j), vadd(sr, t[i][j], t[j][i])
    # [[b_i b_j] b_k] is column k of ad^right applied to t[i][j]
    E = [unit_vec(sr, n, k) for k in range(n)]
    left = {}
    for i in range(n):
        for j in range(n):
            for k in range(n):
                left[i, j, k] = sc.apply(t[i][j], E[k])
    right = {}
    for i in range(n):
        for j in range(n):
            for k in range(n):
                right[i, j, k] = sc.apply(E[k], t[i][j])  # [b_k [b_i b_j]]
    for i, j, k in iproduct(range(n), repeat=3):
        yield "fgen-3", (i, j, k), vsum(sr, [left[i, j, k], left[j, k, i], left[k, i, j]], n)
    for i, j, k in iproduct(range(n), repeat=3):
        # reflected bracket x o y = [y x]: (x o y) o z = [z [y x]]
        yield "fgen-4", (i, j, k), vsum(sr, [right[j, i, k], right[k, j, i], right[i, k, j]], n)
    for gi, g in enumerate(lp.null.generators):
        for j in range(n):
            yield "LieD-f", (f"g{gi}", j, "L"), sc.apply(g, E[j])
            yield "LieD-f", (f"g{gi}", j, "R"), sc.apply(E[j], g)


def _record(rep, lp, axiom, idx, v, bound, parts):
    sr = lp.sr
    if parts is not None:
        bad = []
        unknown = False
        for m, x in enumerate(v):
            if sr.is_zero(x):
                continue
            from .membership import membership
            verdict = membership(sr, [(p,) for p in parts[m]], (x,), bound)
            if verdict.is_not_in:
                bad.append((m, x))
            elif verdict.is_unknown:
                unknown = True
        if bad:
            for m, x in bad:
                rep.add(axiom, idx + (m,), "fail", f"coefficient {sr.format(x)}")
        elif unknown:
            rep.add(axiom, idx, "inconclusive", "membership bound exhausted")
        else:
            rep.add(axiom, idx, "pass")
        return
    st = lp.null.contains(v, bound)
    if st == "in":
        rep.add(axiom, idx, "pass")
    elif st == "not_in":
        rep.add(axiom, idx, "fail", fmt_vec(sr, v, lp.names))
    else:
        rep.add(axiom, idx, "inconclusive", "membership bound exhausted")


def check_lie_axioms(lp: LiePairDef, bound: int = DEFAULT_BOUND, axioms=AXIOMS) -> CheckReport:
    """One entry per axiom instance.  When L0 is spanned by single-coordinate vectors a
    failure names the offending coordinate as the last index."""
    rep = CheckReport(mode="exhaustive")
    parts = lp.null.coordinate_parts()
    for axiom, idx, v in axiom_vectors(lp):
        if axiom in axioms:
            _record(rep, lp, axiom, idx, v, bound, parts)
    return rep


def check_jacobi_preceq(lp: LiePairDef, bound: int = DEFAULT_BOUND) -> CheckReport:
    """[[x y] z] <=_0 [x [y z]] + [y [z x]] on basis triples."""
    sr, n = lp.sr, lp.rank
    rep = CheckReport(mode="exhaustive")
    E = [lp.basis(i) for i in range(n)]
    br = lp.bracket
    for i, j, k in iproduct(range(n), repeat=3):
        lhs = br(br(E[i], E[j]), E[k])
        rhs = vadd(sr, br(E[i], br(E[j], E[k])), br(E[j], br(E[k], E[i])))
        verdict = lp.null.surpasses(lhs, rhs, bound)
        st = {"in": "pass", "not_in": "fail", "unknown": "inconclusive"}[verdict.status]
        rep.add("jacobi-preceq", (i, j, k), st,
                None if st == "pass" else f"{fmt_vec(sr, lhs, lp.names)} vs {fmt_vec(sr, rhs, lp.names)}")
    if not lp.null.ideal_closed:
        rep.note("L0 not known to be bracket-closed; basis-triple verdicts do not extend automatically")
    return rep


def check_dagger_reversibility(lp: LiePairDef) -> CheckReport:
    """[[y z] x] = [x [z y]] exactly, on basis triples."""
    sr, n = lp.sr, lp.rank
    rep = CheckReport(mode="exhaustive")
    E = [lp.basis(i) for i in range(n)]
    br = lp.bracket
    for x, y, z in iproduct(range(n), repeat=3):
        a = br(br(E[y], E[z]), E[x])
        b = br(E[x], br(E[z], E[y]))
        if a == b:
            rep.add("dagger", (x, y, z), "pass")
        else:
            m = next(m for m in range(n) if a[m] != b[m])
            rep.add("dagger", (x, y, z, m), "fail",
                    f"{fmt_vec(sr, a, lp.names)} != {fmt_vec(sr, b, lp.names)}")
    return rep


def check_L0_reversibility(lp: LiePairDef, samples: int = 50, seed: int = 0,
                           bound: int = DEFAULT_BOUND) -> CheckReport:
    """[x y] null implies [y x] null, on basis pairs and seeded random pairs."""
    sr, n = lp.sr, lp.rank
    rep = CheckReport(mode="basis+sampled", seed=seed)
    rng = random.Random(seed)
    cases = [((i,), (j,), lp.basis(i), lp.basis(j)) for i in range(n) for j in range(n)]
    for s in range(samples):
        x = tuple(sr.sample(rng, 2) for _ in range(n))
        y = tuple(sr.sample(rng, 2) for _ in range(n))
        cases.append((("s", s), ("s", s), x, y))
    for ix, iy, x, y in cases:
        a = lp.null.membership(lp.bracket(x, y), bound)
        if not a.is_in:
            if a.is_unknown:
                rep.add("L0-reversible", ix + iy, "inconclusive", a.reason)
            else:
                rep.add("L0-reversible", ix + iy, "pass")
            continue
        b = lp.null.membership(lp.bracket(y, x), bound)
        st = {"in": "pass", "not_in": "fail", "unknown": "inconclusive"}[b.status]
        rep.add("L0-reversible", ix + iy, st,
                None if st == "pass" else fmt_vec(sr, lp.bracket(y, x), lp.names))
    return rep


# -- adjoints and morphisms -----------------------------------------------------------------


@dataclass(frozen=True)
class AdjointMatrix:
    sr: SemiringSpec
    side: str
    columns: tuple  # columns[j] = image of b_j

    def apply(self, v):
        n = len(self.columns)
        return vsum(self.sr, [vscale(self.sr, c, col) for c, col in zip(v, self.columns)], n)

    def as_vector(self):
        """Row-major entries, for embedding into End(L)."""
        n = len(self.columns)
        return tuple(self.columns[j][i] for i in range(n) for j in range(n))


def adjoint(lp: LiePairDef, x, side: str = "left") -> AdjointMatrix:
    if hasattr(x, "values"):
        x = x.values
    cols = []
    for j in range(lp.rank):
        e = lp.basis(j)
        cols.append(lp.bracket(x, e) if side == "left" else lp.bracket(e, x))
    return AdjointMatrix(lp.sr, side, tuple(cols))


def check_L0_symmetric(lp: LiePairDef) -> CheckReport:
    """ad_g = ad^dagger_g for null generators g, i.e. [g y] = [y g]."""
    rep = CheckReport()
    for gi, g in enumerate(lp.null.generators):
        a, b = adjoint(lp, g, "left"), adjoint(lp, g, "right")
        ok = a.columns == b.columns
        rep.add("L0-symmetric", (f"g{gi}",), "pass" if ok else "fail",
                None if ok else fmt_vec(lp.sr, g, lp.names))
    return rep


def check_lie_morphism(src: LiePairDef, dst: LiePairDef, f, kind: str = "weak",
                       bound: int = DEFAULT_BOUND) -> CheckReport:
    """f is a list of images of the source basis (vectors in dst)."""
    sr = src.sr
    if dst.sr != sr:
        raise PairError("morphism between different semirings")
    n, m = src.rank, dst.rank
    imgs = [tuple(v) for v in f]
    if len(imgs) != n or any(len(v) != m for v in imgs):
        raise PairError("morphism has the wrong shape")

    def F(v):
        return vsum(sr, [vscale(sr, c, imgs[i]) for i, c in enumerate(v)], m)

    rep = CheckReport(mode="exhaustive")
    for i in range(n):
        for j in range(n):
            a = F(src.bracket(src.basis(i), src.basis(j)))
            b = dst.bracket(imgs[i], imgs[j])
            rep.add("morph-bracket", (i, j), "pass" if a == b else "fail",
                    None if a == b else f"{fmt_vec(sr, a, dst.names)} != {fmt_vec(sr, b, dst.names)}")
    for gi, g in enumerate(src.null.generators):
        verdict = dst.null.membership(F(g), bound)
        st = {"in": "pass", "not_in": "fail", "unknown": "inconclusive"}[verdict.status]
        rep.add(f"morph-{kind}-null", (f"g{gi}",), st, None if st == "pass" else fmt_vec(sr, F(g), dst.names))
    if kind in ("preceq", "homomorphism"):
        rep.note("additivity and order preservation follow from linearity once null generators map to null")
    return rep
