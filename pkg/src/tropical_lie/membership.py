"""Exact submodule membership and surpassing, one procedure per semiring family.

Vectors are tuples of raw semiring values; generators are lists of such tuples.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations

from . import linalg
from .semiring import BOTTOM, SemiringSpec

DEFAULT_BOUND = 32


@dataclass(frozen=True)
class MembershipVerdict:
    status: str  # in | not_in | unknown
    witness: tuple | None = None
    reason: str | None = None

    @staticmethod
    def member(witness):
        return MembershipVerdict("in", tuple(witness))

    @staticmethod
    def not_member(reason=None):
        return MembershipVerdict("not_in", None, reason)

    @staticmethod
    def unknown(reason):
        return MembershipVerdict("unknown", None, reason)

    @property
    def is_in(self):
        return self.status == "in"

    @property
    def is_not_in(self):
        return self.status == "not_in"

    @property
    def is_unknown(self):
        return self.status == "unknown"

    def __bool__(self):
        raise TypeError("use .is_in / .is_not_in; a verdict has three values")


def combine(sr: SemiringSpec, gens, coeffs, rank):
    acc = [sr.zero] * rank
    for c, g in zip(coeffs, gens):
        if sr.is_zero(c):
            continue
        for j, x in enumerate(g):
            acc[j] = sr.add(acc[j], sr.mul(c, x))
    return tuple(acc)


def membership(sr: SemiringSpec, gens, v, bound: int = DEFAULT_BOUND) -> MembershipVerdict:
    """Is v in the submodule spanned by gens?  Witness = coefficient list over gens."""
    v = tuple(v)
    gens = [tuple(g) for g in gens]
    if any(len(g) != len(v) for g in gens):
        raise ValueError("generator and query ranks differ")
    if all(sr.is_zero(x) for x in v):
        return MembershipVerdict.member([sr.zero] * len(gens))
    if not gens:
        return MembershipVerdict.not_member("no generators")
    fn = {
        "naturals": _mem_naturals,
        "booleans": _mem_booleans,
        "maxplus": _mem_maxplus,
        "integers": _mem_integers,
        "nonneg_rationals": _mem_qplus,
        "finite_table": _mem_table,
    }[sr.kind]
    out = fn(sr, gens, v, bound)
    if out.is_in:
        assert combine(sr, gens, out.witness, len(v)) == v, "membership witness does not recombine"
    return out


# -- naturals: exact bounded enumeration ----------------------------------------


def _components(gens, v):
    """Split generator indices into groups whose supports are connected."""
    n = len(v)
    parent = list(range(n))

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for g in gens:
        sup = [j for j, x in enumerate(g) if x]
        for j in sup[1:]:
            parent[find(j)] = find(sup[0])
    groups = {}
    for i, g in enumerate(gens):
        sup = [j for j, x in enumerate(g) if x]
        if sup:
            groups.setdefault(find(sup[0]), []).append(i)
    coords = {}
    for j in range(n):
        coords.setdefault(find(j), []).append(j)
    return groups, coords


def _mem_naturals(sr, gens, v, bound):
    covered = set(j for g in gens for j, x in enumerate(g) if x)
    for j, x in enumerate(v):
        if x and j not in covered:
            return MembershipVerdict.not_member(f"coordinate {j} is not reachable")
    groups, coords = _components(gens, v)
    wit = [0] * len(gens)
    for root, idx in groups.items():
        cs = coords[root]
        sub = tuple(tuple(gens[i][j] for j in cs) for i in idx)
        target = tuple(v[j] for j in cs)
        sol = _nat_solver(sub).solve(target)
        if sol is None:
            return MembershipVerdict.not_member("no natural combination")
        for i, c in zip(idx, sol):
            wit[i] = c
    return MembershipVerdict.member(wit)


@lru_cache(maxsize=512)
def _nat_solver(gens):
    return _NatSolver(gens)


class _NatSolver:
    """Lexicographically smallest c in N^k with sum c_i gens[i] = target.

    Feasibility of a remainder using generators i.. is memoised across queries; each step
    branches on the coordinate with the fewest generators able to reduce it.
    """

    def __init__(self, gens):
        self.gens = gens
        self.k = len(gens)
        self.m = len(gens[0]) if gens else 0
        self.supp = [[j for j, x in enumerate(g) if x] for g in gens]
        self.weight = [sum(g) for g in gens]
        self.memo = {}

    def feasible(self, i, rem):
        if not any(rem):
            return True
        key = (i, rem)
        hit = self.memo.get(key)
        if hit is not None:
            return hit
        gens, supp = self.gens, self.supp
        best = None
        for j in range(self.m):
            if rem[j]:
                cands = [t for t in range(i, self.k) if gens[t][j] and
                         all(gens[t][q] <= rem[q] for q in supp[t])]
                if not cands:
                    self.memo[key] = False
                    return False
                if best is None or len(cands) < len(best):
                    best = cands
        ok = False
        best.sort(key=lambda t: -self.weight[t])
        for t in best:
            if self.feasible(i, tuple(a - b for a, b in zip(rem, gens[t]))):
                ok = True
                break
        self.memo[key] = ok
        return ok

    def solve(self, target):
        target = tuple(target)
        if not self.feasible(0, target):
            return None
        coef = []
        rem = target
        for i, g in enumerate(self.gens):
            c = 0
            while not self.feasible(i + 1, rem):
                c += 1
                rem = tuple(a - b for a, b in zip(rem, g))
            coef.append(c)
        return coef


def contains(sr: SemiringSpec, gens, v, bound: int = DEFAULT_BOUND) -> str:
    """Status only ('in', 'not_in', 'unknown'); skips witness minimisation where that is costly."""
    if sr.kind != "naturals":
        return membership(sr, gens, v, bound).status
    v = tuple(v)
    if not any(v):
        return "in"
    gens = [tuple(g) for g in gens]
    covered = set(j for g in gens for j, x in enumerate(g) if x)
    if any(x and j not in covered for j, x in enumerate(v)):
        return "not_in"
    groups, coords = _components(gens, v)
    for root, idx in groups.items():
        cs = coords[root]
        sub = tuple(tuple(gens[i][j] for j in cs) for i in idx)
        if not _nat_solver(sub).feasible(0, tuple(v[j] for j in cs)):
            return "not_in"
    return "in"


# -- booleans: closure ---------------------------------------------------------


def _mem_booleans(sr, gens, v, bound):
    usable = [all(x <= y for x, y in zip(g, v)) for g in gens]
    k = len(gens)
    suffix = [tuple(0 for _ in v)] * (k + 1)
    for i in range(k - 1, -1, -1):
        g = gens[i] if usable[i] else suffix[i + 1]
        suffix[i] = tuple(a | b for a, b in zip(g, suffix[i + 1]))
    if suffix[0] != v:
        return MembershipVerdict.not_member("union of generators below v misses a coordinate")
    covered = tuple(0 for _ in v)
    wit = []
    for i in range(k):
        if tuple(a | b for a, b in zip(covered, suffix[i + 1])) == v:
            wit.append(0)
        else:
            wit.append(1)
            covered = tuple(a | b for a, b in zip(covered, gens[i]))
    return MembershipVerdict.member(wit)


# -- max-plus: residuation ---------------------------------------------------------


def _residual(sr, gens, v):
    """Principal solution c_i = min_j (v_j - g_ij) over the finite entries of g_i."""
    cs = []
    for g in gens:
        best = None
        for x, y in zip(g, v):
            if x is BOTTOM:
                continue
            d = BOTTOM if y is BOTTOM else y - x
            if d is BOTTOM:
                best = BOTTOM
                break
            best = d if best is None or d < best else best
        cs.append(BOTTOM if best is None else best)
    return cs


def _mem_maxplus(sr, gens, v, bound):
    cs = _residual(sr, gens, v)
    if combine(sr, gens, cs, len(v)) == v:
        return MembershipVerdict.member(cs)
    return MembershipVerdict.not_member("principal solution falls short")


# -- integers: lattice elimination ------------------------------------------------


def _mem_integers(sr, gens, v, bound):
    c = linalg.int_span_solve(gens, v)
    if c is None:
        return MembershipVerdict.not_member("not in the integer span")
    return MembershipVerdict.member(c)


# -- nonnegative rationals: exact elimination over supports ----------------------------


def _mem_qplus(sr, gens, v, bound):
    if linalg.solve(gens, v) is None:
        return MembershipVerdict.not_member("not in the rational span")
    idx = [i for i, g in enumerate(gens) if any(g)]
    r = linalg.rank([gens[i] for i in idx])
    tried = 0
    for size in range(1, r + 1):
        for sub in combinations(idx, size):
            tried += 1
            if tried > bound:
                return MembershipVerdict.unknown(f"support search exceeded bound {bound}")
            cols = [gens[i] for i in sub]
            if linalg.rank(cols) < size:
                continue
            x = linalg.solve(cols, v)
            if x is not None and all(a >= 0 for a in x):
                wit = [Fraction(0)] * len(gens)
                for i, a in zip(sub, x):
                    wit[i] = a
                return MembershipVerdict.member(wit)
    return MembershipVerdict.not_member("no nonnegative basic solution")


# -- finite tables: reachable-set dynamic programme ---------------------------------


def reachable(sr, gens, rank):
    """Map each element of the span to its lexicographically smallest coefficient vector."""
    states = {tuple([sr.zero] * rank): ()}
    els = sr.elements()
    order = sorted(els)
    for g in gens:
        nxt = {}
        for vec, pre in states.items():
            for c in order:
                w = tuple(sr.add(a, sr.mul(c, b)) for a, b in zip(vec, g))
                cand = pre + (c,)
                old = nxt.get(w)
                if old is None or cand < old:
                    nxt[w] = cand
        states = nxt
    return states


def _mem_table(sr, gens, v, bound):
    if sr.kind == "booleans":
        return _mem_booleans(sr, gens, v, bound)
    st = reachable(sr, gens, len(v))
    if v in st:
        return MembershipVerdict.member(st[v])
    return MembershipVerdict.not_member(f"not among {len(st)} reachable vectors")


# -- surpassing: b1 + z = b2 with z in the span ---------------------------------------


def surpasses(sr: SemiringSpec, gens, b1, b2, bound: int = DEFAULT_BOUND) -> MembershipVerdict:
    """Decide b1 <=_0 b2, i.e. b2 = b1 + z for some z in span(gens).  Witness recombines z."""
    b1, b2 = tuple(b1), tuple(b2)
    n = len(b1)
    gens = [tuple(g) for g in gens]
    k = sr.kind
    if k in ("naturals", "nonneg_rationals", "integers"):
        z = tuple(y - x for x, y in zip(b1, b2))
        if k != "integers" and any(x < 0 for x in z):
            return MembershipVerdict.not_member("b2 is below b1 in some coordinate")
        return membership(sr, gens, z, bound)
    if k == "maxplus":
        if not all(sr.le(x, y) for x, y in zip(b1, b2)):
            return MembershipVerdict.not_member("b1 exceeds b2 in some coordinate")
        cs = _residual(sr, gens, b2) if gens else []
        z = combine(sr, gens, cs, n)
        strict = [j for j in range(n) if b1[j] != b2[j]]
        if all(z[j] == b2[j] for j in strict):
            return MembershipVerdict.member(cs)
        return MembershipVerdict.not_member("largest null element below b2 misses a coordinate")
    if k == "booleans":
        if not all(x <= y for x, y in zip(b1, b2)):
            return MembershipVerdict.not_member("b1 is not below b2")
        need = tuple(y & (1 - x) for x, y in zip(b1, b2))
        usable = [i for i, g in enumerate(gens) if all(a <= b for a, b in zip(g, b2))]
        wit = [0] * len(gens)
        # lexicographically smallest: drop a generator whenever the later ones still cover
        cov = tuple(0 for _ in range(n))
        for pos, i in enumerate(usable):
            rest = tuple(0 for _ in range(n))
            for i2 in usable[pos + 1:]:
                rest = tuple(a | b for a, b in zip(rest, gens[i2]))
            both = tuple(a | b for a, b in zip(cov, rest))
            if not all(a >= b for a, b in zip(both, need)):
                wit[i] = 1
                cov = tuple(a | b for a, b in zip(cov, gens[i]))
        if all(a >= b for a, b in zip(cov, need)):
            return MembershipVerdict.member(wit)
        return MembershipVerdict.not_member("null elements below b2 cannot cover b2 - b1")
    st = reachable(sr, gens, n)
    best = None
    for z, pre in st.items():
        if tuple(sr.add(a, b) for a, b in zip(b1, z)) == b2 and (best is None or pre < best):
            best = pre
    if best is None:
        return MembershipVerdict.not_member(f"none of {len(st)} null vectors works")
    return MembershipVerdict.member(best)
