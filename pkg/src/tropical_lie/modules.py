"""Free modules, null submodules, pairs (L, L0) and pre-negation maps."""
from __future__ import annotations

from dataclasses import dataclass

from .membership import DEFAULT_BOUND, MembershipVerdict, combine, contains, membership, surpasses
from .reports import CheckReport
from .semiring import BasePair, SemiringSpec


class PairError(ValueError):
    pass


class PreNegationError(PairError):
    def __init__(self, msg, report=None):
        super().__init__(msg)
        self.report = report


# -- vectors --------------------------------------------------------------------


@dataclass(frozen=True)
class ModuleElement:
    base: BasePair
    values: tuple

    @property
    def sr(self) -> SemiringSpec:
        return self.base.semiring

    @property
    def rank(self):
        return len(self.values)

    @property
    def coefficients(self):
        from .semiring import Scalar
        return tuple(Scalar(self.sr, v) for v in self.values)

    def _other(self, o):
        if not isinstance(o, ModuleElement) or o.base.semiring != self.sr or o.rank != self.rank:
            raise PairError("incompatible module elements")
        return o

    def __add__(self, o):
        o = self._other(o)
        return ModuleElement(self.base, vadd(self.sr, self.values, o.values))

    def scale(self, c):
        return ModuleElement(self.base, vscale(self.sr, self.sr.coerce(c), self.values))

    def __rmul__(self, c):
        return self.scale(c)

    def fmt(self, names=None):
        return fmt_vec(self.sr, self.values, names)


def zero_vec(sr, n):
    return tuple([sr.zero] * n)


def unit_vec(sr, n, i):
    return tuple(sr.one if j == i else sr.zero for j in range(n))


def vadd(sr, a, b):
    return tuple(sr.add(x, y) for x, y in zip(a, b))


def vsum(sr, vecs, n):
    acc = zero_vec(sr, n)
    for v in vecs:
        acc = vadd(sr, acc, v)
    return acc


def vscale(sr, c, a):
    return tuple(sr.mul(c, x) for x in a)


def is_zero_vec(sr, a):
    return all(sr.is_zero(x) for x in a)


def fmt_vec(sr, v, names=None):
    if names is None:
        return "(" + " ".join(sr.format(x) for x in v) + ")"
    terms = []
    for x, nm in zip(v, names):
        if sr.is_zero(x):
            continue
        terms.append(nm if x == sr.one else f"{sr.format(x)}*{nm}")
    return "+".join(terms) if terms else "0"


# -- submodules -----------------------------------------------------------------------


@dataclass(frozen=True)
class Submodule:
    """The C-span of finitely many generator vectors in C^rank."""

    semiring: SemiringSpec
    rank: int
    generators: tuple = ()
    ideal_closed: bool = False

    def __post_init__(self):
        gens = []
        seen = set()
        for g in self.generators:
            g = tuple(self.semiring.coerce(x) for x in g)
            if len(g) != self.rank:
                raise PairError(f"generator of length {len(g)} in a rank-{self.rank} module")
            if is_zero_vec(self.semiring, g) or g in seen:
                continue
            seen.add(g)
            gens.append(g)
        object.__setattr__(self, "generators", tuple(gens))

    def membership(self, v, bound: int = DEFAULT_BOUND) -> MembershipVerdict:
        if isinstance(v, ModuleElement):
            v = v.values
        return membership(self.semiring, self.generators, v, bound)

    def contains(self, v, bound: int = DEFAULT_BOUND) -> str:
        """Membership status only: 'in', 'not_in' or 'unknown'."""
        if isinstance(v, ModuleElement):
            v = v.values
        return contains(self.semiring, self.generators, v, bound)

    def surpasses(self, b1, b2, bound: int = DEFAULT_BOUND) -> MembershipVerdict:
        return surpasses(self.semiring, self.generators, b1, b2, bound)

    def recombine(self, witness):
        return combine(self.semiring, self.generators, witness, self.rank)

    def with_generators(self, extra, ideal_closed=None):
        return Submodule(self.semiring, self.rank, self.generators + tuple(extra),
                         self.ideal_closed if ideal_closed is None else ideal_closed)

    def coordinate_parts(self):
        """If every generator has support of size one, return per-coordinate scalar generators."""
        parts = [[] for _ in range(self.rank)]
        for g in self.generators:
            sup = [j for j, x in enumerate(g) if not self.semiring.is_zero(x)]
            if len(sup) != 1:
                return None
            parts[sup[0]].append(g[sup[0]])
        return parts


def submodule_membership(sub: Submodule, v, bound: int = DEFAULT_BOUND) -> MembershipVerdict:
    return sub.membership(v, bound)


# -- pairs -------------------------------------------------------------------------------


@dataclass(frozen=True)
class PairDef:
    base: BasePair
    rank: int
    null: Submodule
    names: tuple = ()

    def __post_init__(self):
        if self.null.rank != self.rank or self.null.semiring != self.base.semiring:
            raise PairError("null submodule does not live in the carrier")
        if not self.names:
            object.__setattr__(self, "names", tuple(f"b{i}" for i in range(self.rank)))
        if len(self.names) != self.rank:
            raise PairError("wrong number of basis names")

    @property
    def sr(self):
        return self.base.semiring

    def element(self, values) -> ModuleElement:
        return ModuleElement(self.base, tuple(self.sr.coerce(x) for x in values))

    def basis(self, i):
        return unit_vec(self.sr, self.rank, i)

    def zero(self):
        return zero_vec(self.sr, self.rank)

    def c0_condition(self, bound=DEFAULT_BOUND) -> CheckReport:
        """C0 * b_i must be null for every basis element and C0 generator."""
        rep = CheckReport()
        sr = self.sr
        for m in self.base.c0_generators:
            for i in range(self.rank):
                v = vscale(sr, m, self.basis(i))
                verdict = self.null.membership(v, bound)
                rep.add("c0-null", (i,), _status(verdict), None if verdict.is_in else sr.format(m))
        return rep


def make_pair(base: BasePair, rank: int, null_gens=(), names=(), ideal_closed=False,
              check_c0=True, bound=DEFAULT_BOUND) -> PairDef:
    null = Submodule(base.semiring, rank, tuple(null_gens), ideal_closed)
    p = PairDef(base, rank, null, tuple(names))
    if check_c0:
        rep = p.c0_condition(bound)
        if rep.failures:
            raise PairError("C0 * L is not inside L0: " + rep.failures[0].line(p.names))
    return p


def c0_generators(base: BasePair, rank: int):
    sr = base.semiring
    return [vscale(sr, m, unit_vec(sr, rank, i)) for m in base.c0_generators for i in range(rank)]


def _status(v: MembershipVerdict) -> str:
    return {"in": "pass", "not_in": "fail", "unknown": "inconclusive"}[v.status]


def surpasses_in(pair: PairDef, b1, b2, bound=DEFAULT_BOUND) -> MembershipVerdict:
    if isinstance(b1, ModuleElement):
        b1 = b1.values
    if isinstance(b2, ModuleElement):
        b2 = b2.values
    return pair.null.surpasses(b1, b2, bound)


# -- pre-negation --------------------------------------------------------------------------


@dataclass(frozen=True)
class NegationSpec:
    kind: str  # scalar | switch | matrix
    eps: object = None
    matrix: tuple | None = None  # rows; column j is the image of b_j
    order_two: bool | None = None

    @staticmethod
    def scalar(eps):
        return NegationSpec("scalar", eps)

    @staticmethod
    def switch():
        return NegationSpec("switch", order_two=True)

    def apply(self, sr, v):
        v = tuple(v)
        if self.kind == "scalar":
            return vscale(sr, sr.coerce(self.eps), v)
        if self.kind == "switch":
            h = len(v) // 2
            return v[h:] + v[:h]
        rows = self.matrix
        return tuple(sr.sum(sr.mul(rows[i][j], v[j]) for j in range(len(v))) for i in range(len(rows)))

    def describe(self, sr):
        if self.kind == "scalar":
            return f"scalar {sr.format(sr.coerce(self.eps))}"
        return self.kind

    def is_order_two(self, sr, rank):
        return all(self.apply(sr, self.apply(sr, unit_vec(sr, rank, i))) == unit_vec(sr, rank, i)
                   for i in range(rank))


def verify_pre_negation(pair: PairDef, psi: NegationSpec, product=None,
                        bound=DEFAULT_BOUND) -> CheckReport:
    """b + psi(b) null, psi(L0) inside L0 and, given a product table, psi commuting with it."""
    sr, n = pair.sr, pair.rank
    rep = CheckReport()
    for i in range(n):
        b = pair.basis(i)
        v = psi.apply(sr, b)
        verdict = pair.null.membership(vadd(sr, b, v), bound)
        rep.add("psi-null-sum", (i,), _status(verdict),
                None if verdict.is_in else fmt_vec(sr, vadd(sr, b, v), pair.names))
    for gi, g in enumerate(pair.null.generators):
        verdict = pair.null.membership(psi.apply(sr, g), bound)
        rep.add("psi-preserves-null", (f"g{gi}",), _status(verdict),
                None if verdict.is_in else fmt_vec(sr, psi.apply(sr, g), pair.names))
    if product is not None:
        for i in range(n):
            for j in range(n):
                bi, bj = pair.basis(i), pair.basis(j)
                a = psi.apply(sr, product.apply(bi, bj))
                b = product.apply(bi, psi.apply(sr, bj))
                c = product.apply(psi.apply(sr, bi), bj)
                ok = a == b == c
                rep.add("psi-product", (i, j), "pass" if ok else "fail",
                        None if ok else f"{fmt_vec(sr, a)} {fmt_vec(sr, b)} {fmt_vec(sr, c)}")
    return rep


def weak_property_N(pair: PairDef, search_bound=DEFAULT_BOUND) -> CheckReport:
    """For each basis b find b' with b + b' null; the witness b' is reported."""
    sr, n = pair.sr, pair.rank
    rep = CheckReport()
    gens = pair.null.generators
    for i in range(n):
        b = pair.basis(i)
        found = None
        if sr.kind == "integers":
            found = tuple(-x for x in b)
        elif sr.kind == "finite_table":
            from .membership import reachable
            for z in sorted(reachable(sr, gens, n)):
                parts = []
                for x, y in zip(b, z):
                    opts = [c for c in sr.elements() if sr.add(x, c) == y]
                    if not opts:
                        break
                    parts.append(min(opts))
                else:
                    found = tuple(parts)
                    break
        else:
            for g in gens:
                if sr.is_zero(g[i]):
                    continue
                if sr.kind == "naturals":
                    if g[i] <= search_bound:
                        found = tuple(x - (1 if j == i else 0) for j, x in enumerate(g))
                elif sr.kind == "nonneg_rationals":
                    s = [x / g[i] for x in g]
                    s[i] -= 1
                    found = tuple(s)
                elif sr.kind == "maxplus":
                    found = tuple(sr.mul(-g[i], x) for x in g)
                else:
                    found = g
                if found is not None:
                    break
        if found is not None:
            assert pair.null.membership(vadd(sr, b, found)).is_in
            rep.add("weak-N", (i,), "pass", fmt_vec(sr, found, pair.names))
        else:
            rep.add("weak-N", (i,), "fail", "no complement found")
    return rep


def direct_product_pair(p1: PairDef, p2: PairDef) -> PairDef:
    if p1.sr != p2.sr:
        raise PairError("direct product needs a common semiring")
    sr = p1.sr
    z1, z2 = zero_vec(sr, p1.rank), zero_vec(sr, p2.rank)
    gens = [g + z2 for g in p1.null.generators] + [z1 + g for g in p2.null.generators]
    return make_pair(p1.base, p1.rank + p2.rank, gens, p1.names + p2.names,
                     p1.null.ideal_closed and p2.null.ideal_closed, check_c0=False)
