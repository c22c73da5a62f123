"""Doubling: A x A with the twist product, the switch negation, the doubled null and the
doubled Lie brackets.  The doubled basis is (b_i, 0) at index i and (0, b_i) at index n + i."""
from __future__ import annotations

from dataclasses import dataclass
from itertools import product as iproduct

from .constructions import AlgebraPair, build_psi_commutator
from .lie import LiePairDef, StructureConstants, check_lie_axioms
from .membership import DEFAULT_BOUND, MembershipVerdict, surpasses
from .modules import (NegationSpec, PairDef, PairError, Submodule, fmt_vec, unit_vec, vadd, vscale,
                      vsum, zero_vec)
from .reports import CheckReport

NULL_MODES = ("sum", "diag")
SEARCH_CAP = 20000


@dataclass(frozen=True)
class DoubledElement:
    pos: tuple
    neg: tuple

    def __add__(self, o):
        raise TypeError("use add(sr, x, y)")

    def vector(self):
        return tuple(self.pos) + tuple(self.neg)

    @staticmethod
    def from_vector(v):
        h = len(v) // 2
        return DoubledElement(tuple(v[:h]), tuple(v[h:]))


def add(sr, x: DoubledElement, y: DoubledElement) -> DoubledElement:
    return DoubledElement(vadd(sr, x.pos, y.pos), vadd(sr, x.neg, y.neg))


def switch(x):
    if isinstance(x, DoubledElement):
        return DoubledElement(x.neg, x.pos)
    h = len(x) // 2
    return tuple(x[h:]) + tuple(x[:h])


def double_mul(sr, x: DoubledElement, y: DoubledElement, mul=None) -> DoubledElement:
    """Twist product (b1,b2)(b1',b2') = (b1b1' + b2b2', b1b2' + b2b1').  `mul` multiplies two
    components; by default components are scalars of sr."""
    if mul is None:
        def mul(a, b):
            return sr.mul(a, b)
        plus = sr.add
    else:
        def plus(a, b):
            return vadd(sr, a, b)
    return DoubledElement(plus(mul(x.pos, y.pos), mul(x.neg, y.neg)),
                          plus(mul(x.pos, y.neg), mul(x.neg, y.pos)))


def scalar_twist(sr, c, b: DoubledElement) -> DoubledElement:
    """Doubled scalar (c1, c2) acting on (b1, b2): (c1b1 + c2b2, c1b2 + c2b1)."""
    c1, c2 = c
    return DoubledElement(vadd(sr, vscale(sr, c1, b.pos), vscale(sr, c2, b.neg)),
                          vadd(sr, vscale(sr, c1, b.neg), vscale(sr, c2, b.pos)))


def twist_constants(sr, product: StructureConstants) -> StructureConstants:
    n = product.rank
    N = 2 * n

    def f(i, j):
        (a, sa), (b, sb) = divmod(i, n)[::-1], divmod(j, n)[::-1]
        v = product.table[a][b]
        z = zero_vec(sr, n)
        return (v + z) if sa == sb else (z + v)
    return StructureConstants.from_function(sr, N, f)


# -- the doubled null ---------------------------------------------------------------------


@dataclass(frozen=True)
class DoubledNull(Submodule):
    """Diag + {(b1, b2): b1 + b2 in A0} (mode 'sum') or Diag alone (mode 'diag').

    Membership is the span of the listed generators, or the direct criterion pos + neg in A0,
    or a search over the diagonal part (a, a) with (pos - a) + (neg - a) in A0."""

    half: Submodule | None = None
    mode: str = "sum"

    def with_generators(self, extra, ideal_closed=None):
        return DoubledNull(self.semiring, self.rank, self.generators + tuple(extra),
                           self.ideal_closed if ideal_closed is None else ideal_closed,
                           self.half, self.mode)

    def coordinate_parts(self):
        return None

    def _split(self, v):
        h = self.rank // 2
        return tuple(v[:h]), tuple(v[h:])

    def _candidates(self, pos, neg):
        """Sums b1 + b2 over decompositions (pos, neg) = (a, a) + (b1, b2), per coordinate.
        Returns a list of per-coordinate candidate lists, or None when not enumerable."""
        sr = self.semiring
        k = sr.kind
        out = []
        for u, v in zip(pos, neg):
            if k == "naturals":
                out.append([u + v - 2 * a for a in range(min(u, v) + 1)])
            elif sr.is_finite:
                c = set()
                E = sr.elements()
                for a in E:
                    b1s = [b for b in E if sr.add(a, b) == u]
                    b2s = [b for b in E if sr.add(a, b) == v]
                    c |= {sr.add(x, y) for x in b1s for y in b2s}
                out.append(sorted(c))
            else:
                return None
        return out

    def contains(self, v, bound: int = DEFAULT_BOUND) -> str:
        v = tuple(getattr(v, "values", v))
        st = super().contains(v, bound)
        if st == "in" or self.mode == "diag" or self.half is None:
            return st
        sr = self.semiring
        pos, neg = self._split(v)
        direct = self.half.contains(vadd(sr, pos, neg), bound)
        if direct == "in":
            return "in"
        unknown = "unknown" in (st, direct)
        k = sr.kind
        if k == "integers":
            h = self.rank // 2
            lat = self.half.with_generators([vscale(sr, 2, unit_vec(sr, h, i)) for i in range(h)])
            return lat.contains(vadd(sr, pos, neg), bound)
        if k == "maxplus":
            tgt = vadd(sr, pos, neg)
            b1 = tuple(t if p == q else sr.zero for t, p, q in zip(tgt, pos, neg))
            ver = surpasses(sr, self.half.generators, b1, tgt, bound)
            return "in" if ver.is_in else ("unknown" if unknown or ver.is_unknown else "not_in")
        cands = self._candidates(pos, neg)
        if cands is None:
            return "unknown"
        total = 1
        for c in cands:
            total *= len(c)
        if total > SEARCH_CAP:
            return "unknown"
        for s in iproduct(*cands):
            r = self.half.contains(s, bound)
            if r == "in":
                return "in"
            unknown = unknown or r == "unknown"
        return "unknown" if unknown else "not_in"

    def membership(self, v, bound: int = DEFAULT_BOUND) -> MembershipVerdict:
        v = tuple(getattr(v, "values", v))
        ver = super().membership(v, bound)
        if ver.is_in or self.mode == "diag":
            return ver
        st = self.contains(v, bound)
        if st == "in":
            return MembershipVerdict("in", None, "doubled-null criterion (pos + neg, up to a diagonal part)")
        if st == "unknown":
            return MembershipVerdict.unknown("doubled-null search not decided")
        return MembershipVerdict.not_member("no decomposition into a diagonal and a null-sum part")

    def surpasses(self, b1, b2, bound: int = DEFAULT_BOUND) -> MembershipVerdict:
        sr = self.semiring
        b1, b2 = tuple(b1), tuple(b2)
        if sr.kind in ("naturals", "integers", "nonneg_rationals"):
            z = tuple(y - x for x, y in zip(b1, b2))
            if sr.kind != "integers" and any(x < 0 for x in z):
                return MembershipVerdict.not_member("b2 is below b1 in some coordinate")
            return self.membership(z, bound)
        ver = super().surpasses(b1, b2, bound)
        if ver.is_in or self.mode == "diag":
            return ver
        if sr.kind == "booleans":
            if any(x > y for x, y in zip(b1, b2)):
                return MembershipVerdict.not_member("b1 is not below b2")
            free = [i for i, (x, y) in enumerate(zip(b1, b2)) if x and y]
            need = tuple(y & (1 - x) for x, y in zip(b1, b2))
            for bits in iproduct((0, 1), repeat=len(free)):
                z = list(need)
                for i, t in zip(free, bits):
                    z[i] = t
                if self.contains(tuple(z), bound) == "in":
                    return MembershipVerdict("in", None, f"z = {fmt_vec(sr, z)}")
            return MembershipVerdict.not_member("no null z with b1 + z = b2")
        return MembershipVerdict.unknown("surpassing in the doubled null is not decided for this semiring")


def doubled_pair(pair: PairDef, null_mode: str = "sum") -> PairDef:
    if null_mode not in NULL_MODES:
        raise PairError(f"null mode must be one of {NULL_MODES}")
    sr, n = pair.sr, pair.rank
    z = zero_vec(sr, n)
    gens = [unit_vec(sr, n, i) * 2 for i in range(n)]  # (b_i, b_i)
    if null_mode == "sum":
        for g in pair.null.generators:
            gens += [tuple(g) + z, z + tuple(g)]
        if sr.kind == "integers":
            gens += [unit_vec(sr, n, i) + vscale(sr, -1, unit_vec(sr, n, i)) for i in range(n)]
    null = DoubledNull(sr, 2 * n, tuple(gens), pair.null.ideal_closed, pair.null, null_mode)
    names = tuple(f"{a}+" for a in pair.names) + tuple(f"{a}-" for a in pair.names)
    return PairDef(pair.base, 2 * n, null, names)


def double_algebra(alg: AlgebraPair, null_mode: str = "sum") -> AlgebraPair:
    return AlgebraPair(doubled_pair(alg.pair, null_mode), twist_constants(alg.sr, alg.product),
                       None, f"double({alg.name})")


def double_lie(x, null_mode: str = "sum", bound: int = DEFAULT_BOUND, verify: bool = False) -> LiePairDef:
    """An AlgebraPair gets the bracket XY + switch(YX) on the doubled algebra, i.e.
    (x1x2 + y1y2 + x2y1 + y2x1, x1y2 + y1x2 + x2x1 + y2y1).
    A LiePairDef gets ([x1y1] + [x2y2], [x1y2] + [x2y1])."""
    if isinstance(x, AlgebraPair):
        lp = build_psi_commutator(double_algebra(x, null_mode), NegationSpec.switch(), bound, verify)
        lp.meta["family"] = "doubled-algebra"
        return lp
    lp = x
    sr = lp.sr
    pair = doubled_pair(lp.pair, null_mode)
    sc = twist_constants(sr, lp.sc)
    out = LiePairDef(pair, sc, frozenset({"bilinear"}), NegationSpec.switch(),
                     {"family": "doubled-lie", "null_mode": null_mode})
    if verify:
        rep = check_lie_axioms(out, bound)
        if not rep.ok:
            raise PairError("doubled Lie pair failed re-verification")
    return out


def embedding(lp: LiePairDef):
    """Images of b_i under y -> (y, 0)."""
    n = lp.rank
    return [unit_vec(lp.sr, 2 * n, i) for i in range(n)]


def check_grading(sr, product: StructureConstants, exhaustive: bool = False) -> CheckReport:
    """(A,0)(A,0) and (0,A)(0,A) land in (A,0); mixed products land in (0,A).  On basis pairs,
    or over every homogeneous element when exhaustive (finite semirings)."""
    n = product.rank
    tw = twist_constants(sr, product)
    rep = CheckReport(mode="exhaustive" if exhaustive else "basis")
    if exhaustive:
        if not sr.is_finite:
            raise PairError("exhaustive grading check needs a finite semiring")
        elems = list(iproduct(sr.elements(), repeat=n))
    else:
        elems = [unit_vec(sr, n, i) for i in range(n)]
    z = zero_vec(sr, n)
    for (i, a), (j, b) in iproduct(enumerate(elems), repeat=2):
        for sa, sb in iproduct((0, 1), repeat=2):
            x = (a + z) if sa == 0 else (z + a)
            y = (b + z) if sb == 0 else (z + b)
            p = tw.apply(x, y)
            want_neg = sa != sb
            wrong = p[:n] if want_neg else p[n:]
            ok = all(sr.is_zero(t) for t in wrong)
            rep.add("grading", (i, sa, j, sb), "pass" if ok else "fail", None if ok else fmt_vec(sr, p))
    return rep


def check_negated(lp: LiePairDef) -> CheckReport:
    """switch([x y]) = [y x] on basis pairs; the doubled Lie pair need not satisfy it."""
    rep = CheckReport()
    n = lp.rank
    for i, j in iproduct(range(n), repeat=2):
        a = switch(lp.bracket(lp.basis(i), lp.basis(j)))
        b = lp.bracket(lp.basis(j), lp.basis(i))
        rep.add("negated", (i, j), "pass" if a == b else "fail",
                None if a == b else f"{fmt_vec(lp.sr, a, lp.names)} != {fmt_vec(lp.sr, b, lp.names)}")
    return rep


def check_null_ideal(alg: AlgebraPair, bound: int = DEFAULT_BOUND) -> CheckReport:
    """Products of basis elements with null generators, on both sides, stay null."""
    rep = CheckReport()
    sr, n = alg.sr, alg.rank
    for gi, g in enumerate(alg.pair.null.generators):
        for j in range(n):
            e = unit_vec(sr, n, j)
            for side, v in (("L", alg.mul(e, g)), ("R", alg.mul(g, e))):
                st = alg.pair.null.contains(v, bound)
                rep.add("null-ideal", (f"g{gi}", j, side),
                        {"in": "pass", "not_in": "fail", "unknown": "inconclusive"}[st])
    return rep


# -- transfer of multilinear identities -------------------------------------------------------


@dataclass(frozen=True)
class MultilinearIdentity:
    """Bracket words over variables 0..arity-1 (an int is a variable, a pair is a bracket).
    kind 'null': the sum of lhs lies in L0; kind 'preceq': sum(lhs) <=_0 sum(rhs)."""

    name: str
    arity: int
    lhs: tuple
    rhs: tuple = ()
    kind: str = "null"

    def leaves(self, t):
        return [t] if isinstance(t, int) else self.leaves(t[0]) + self.leaves(t[1])

    def is_multilinear(self):
        return all(sorted(self.leaves(t)) == list(range(self.arity)) for t in self.lhs + self.rhs)


FGEN2 = MultilinearIdentity("antisymmetry", 2, ((0, 1), (1, 0)))
JACOBI = MultilinearIdentity("jacobi", 3, (((0, 1), 2), ((1, 2), 0), ((2, 0), 1)))
JACOBI_REFLECTED = MultilinearIdentity("jacobi-reflected", 3, ((2, (1, 0)), (0, (2, 1)), (1, (0, 2))))
SQUARE = MultilinearIdentity("square", 2, ((0, 0),))
JACOBI_PRECEQ = MultilinearIdentity("jacobi-preceq", 3, (((0, 1), 2),), ((0, (1, 2)), (1, (2, 0))), "preceq")


def evaluate_identity(lp: LiePairDef, ident: MultilinearIdentity, bound=DEFAULT_BOUND, label=None) -> CheckReport:
    if not ident.is_multilinear():
        raise ValueError(f"identity {ident.name!r} is not multilinear")
    sr, n = lp.sr, lp.rank
    label = label or ident.name
    rep = CheckReport(mode="basis tuples")

    def ev(t, xs):
        return xs[t] if isinstance(t, int) else lp.bracket(ev(t[0], xs), ev(t[1], xs))

    for idx in iproduct(range(n), repeat=ident.arity):
        xs = [lp.basis(i) for i in idx]
        lhs = vsum(sr, [ev(t, xs) for t in ident.lhs], n)
        if ident.kind == "null":
            st = lp.null.contains(lhs, bound)
        else:
            rhs = vsum(sr, [ev(t, xs) for t in ident.rhs], n)
            st = lp.null.surpasses(lhs, rhs, bound).status
        rep.add(label, idx, {"in": "pass", "not_in": "fail", "unknown": "inconclusive"}[st],
                None if st == "in" else fmt_vec(sr, lhs, lp.names))
    return rep


def transfer_identities(lp: LiePairDef, identity: MultilinearIdentity, bound=DEFAULT_BOUND,
                        null_mode: str = "sum") -> CheckReport:
    """Evaluate a multilinear identity on lp and on its double; 'transfer' passes when the
    original holding implies the doubled one holding."""
    if not identity.is_multilinear():
        raise ValueError(f"identity {identity.name!r} is not multilinear")
    orig = evaluate_identity(lp, identity, bound, identity.name)
    dbl = evaluate_identity(double_lie(lp, null_mode), identity, bound, identity.name + "-doubled")
    rep = CheckReport(mode="basis tuples")
    rep.extend(orig)
    rep.extend(dbl)
    ok = (not orig.ok) or dbl.ok
    rep.add("transfer", (identity.name,), "pass" if ok else "fail",
            None if ok else f"holds on the pair, {len(dbl.failures)} failures after doubling")
    return rep
