"""Builders for Lie pairs: psi-commutators, pre-Lie and involution pairs, classical
families, cross products, bilinear-form pairs, filiform pairs and a low-dimensional catalog."""
from __future__ import annotations

import logging
import random
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product as iproduct

from . import linalg
from .lie import (DegeneratePairError, LiePairDef, StructureConstants, check_lie_axioms,
                  saturate_null)
from .membership import DEFAULT_BOUND
from .modules import (NegationSpec, PairDef, PairError, PreNegationError, c0_generators,
                      fmt_vec, make_pair, unit_vec, vadd, vscale, vsum, zero_vec,
                      verify_pre_negation)
from .reports import CheckReport
from .semiring import BasePair, SemiringSpec

log = logging.getLogger(__name__)


class ConstructionError(PairError):
    def __init__(self, msg, report=None):
        super().__init__(msg)
        self.report = report


class PreLieError(ConstructionError):
    pass


class InvolutionError(ConstructionError):
    pass


class DegreeConstraintError(ConstructionError):
    pass


@dataclass(frozen=True)
class AlgebraPair:
    """A pair (A, A0) with a bilinear product, optionally an involution (columns = images)."""

    pair: PairDef
    product: StructureConstants
    involution: tuple | None = None
    name: str = ""

    @property
    def sr(self):
        return self.pair.sr

    @property
    def rank(self):
        return self.pair.rank

    def mul(self, x, y):
        return self.product.apply(x, y)

    def star(self, x):
        n = self.rank
        return vsum(self.sr, [vscale(self.sr, c, self.involution[i]) for i, c in enumerate(x)], n)


def matrix_names(n):
    return tuple(f"e{i}{j}" for i in range(n) for j in range(n))


def matrix_algebra(base: BasePair, n: int, null_gens=None, eps=None, with_transpose=True) -> AlgebraPair:
    """M_n(C) on the basis e_ij (index i*n + j).  Default null: C0 * M_n plus (1+eps) M_n."""
    sr = base.semiring
    N = n * n
    entries = {}
    for i, j, l in iproduct(range(n), repeat=3):
        entries[i * n + j, j * n + l] = unit_vec(sr, N, i * n + l)
    prod = StructureConstants.from_dict(sr, N, entries)
    gens = list(c0_generators(base, N))
    if eps is not None:
        m = sr.add(sr.one, sr.coerce(eps))
        gens += [vscale(sr, m, unit_vec(sr, N, k)) for k in range(N)]
    if null_gens:
        gens += list(null_gens)
    pair = make_pair(base, N, gens, matrix_names(n), ideal_closed=True)
    inv = None
    if with_transpose:
        inv = tuple(unit_vec(sr, N, j * n + i) for i in range(n) for j in range(n))
    return AlgebraPair(pair, prod, inv, f"M{n}({sr.name})")


def mat_of(sr, n, v):
    return [[v[i * n + j] for j in range(n)] for i in range(n)]


def vec_of(m):
    return tuple(x for row in m for x in row)


# -- psi-commutator pairs -----------------------------------------------------------------


def psi_bracket_constants(alg: AlgebraPair, psi: NegationSpec) -> StructureConstants:
    sr, n = alg.sr, alg.rank
    E = [unit_vec(sr, n, i) for i in range(n)]
    return StructureConstants.from_function(
        sr, n, lambda i, j: vadd(sr, alg.mul(E[i], E[j]), psi.apply(sr, alg.mul(E[j], E[i]))))


def build_psi_commutator(alg: AlgebraPair, psi: NegationSpec, bound=DEFAULT_BOUND,
                         verify=True) -> LiePairDef:
    """The bracket xy + psi(y)x on a semiring pair carrying a pre-negation psi."""
    rep = verify_pre_negation(alg.pair, psi, alg.product, bound)
    if not rep.ok:
        raise PreNegationError("psi is not a pre-negation map here: " + rep.entries[
            next(i for i, e in enumerate(rep.entries) if e.status != "pass")].line(alg.pair.names), rep)
    sc = psi_bracket_constants(alg, psi)
    strong = psi.is_order_two(alg.sr, alg.rank)
    flags = {"bilinear"} | ({"dagger_reversible", "L0_reversible"} if strong else set())
    lp = LiePairDef(alg.pair, sc, frozenset(flags), psi, {"family": "psi-commutator", "strong": strong})
    if verify:
        chk = check_lie_axioms(lp, bound)
        if not chk.ok:
            raise ConstructionError("psi-commutator failed re-verification", chk)
    return lp


def check_leibniz(alg: AlgebraPair, psi: NegationSpec, triples, bound=DEFAULT_BOUND) -> CheckReport:
    """The three Leibniz psi-identities on the given element triples, exactly; the last also
    in its surpassing form."""
    sr = alg.sr
    mul = alg.mul

    def ps(v):
        return psi.apply(sr, v)

    def br(x, y):
        return vadd(sr, mul(x, y), ps(mul(y, x)))

    def add(*vs):
        return vsum(sr, vs, alg.rank)

    rep = CheckReport(mode="given triples")
    for t, (x, y, z) in enumerate(triples):
        yxz, zxy = mul(mul(y, x), z), mul(mul(z, x), y)
        lhs1 = add(mul(br(x, y), z), mul(y, br(x, z)))
        rhs1 = add(br(x, mul(y, z)), yxz, ps(yxz))
        lhs2 = add(mul(z, br(x, y)), mul(br(x, z), y))
        rhs2 = add(br(x, mul(z, y)), zxy, ps(zxy))
        lhs3 = add(br(x, br(y, z)), yxz, zxy, ps(add(yxz, zxy)))
        rhs3 = add(br(br(x, y), z), br(y, br(x, z)))
        for name, a, b in (("leibniz-i", lhs1, rhs1), ("leibniz-ii", lhs2, rhs2), ("leibniz-iii", lhs3, rhs3)):
            rep.add(name, (t,), "pass" if a == b else "fail", None if a == b else f"{fmt_vec(sr, a)} != {fmt_vec(sr, b)}")
        v = alg.pair.null.surpasses(br(x, br(y, z)), rhs3, bound)
        st = {"in": "pass", "not_in": "fail", "unknown": "inconclusive"}[v.status]
        rep.add("leibniz-preceq", (t,), st)
    return rep


# -- pre-Lie pairs ------------------------------------------------------------------------


def build_pre_lie(alg: AlgebraPair, psi: NegationSpec, bound=DEFAULT_BOUND) -> LiePairDef:
    """Check (x,y,z)_psi + psi((x,z,y)_psi) null on basis triples, then take xy + psi(yx)."""
    sr, n = alg.sr, alg.rank
    E = [unit_vec(sr, n, i) for i in range(n)]
    mul = alg.mul

    def assoc(x, y, z):
        return vadd(sr, mul(mul(x, y), z), psi.apply(sr, mul(x, mul(y, z))))

    rep = CheckReport()
    for i, j, k in iproduct(range(n), repeat=3):
        v = vadd(sr, assoc(E[i], E[j], E[k]), psi.apply(sr, assoc(E[i], E[k], E[j])))
        st = alg.pair.null.contains(v, bound)
        rep.add("pre-lie", (i, j, k), {"in": "pass", "not_in": "fail", "unknown": "inconclusive"}[st],
                None if st == "in" else fmt_vec(sr, v, alg.pair.names))
    if not rep.ok:
        bad = (rep.failures or rep.inconclusives)[0]
        raise PreLieError("pre-Lie condition fails at " + bad.line(alg.pair.names), rep)
    sc = psi_bracket_constants(alg, psi)
    lp = LiePairDef(alg.pair, sc, frozenset({"bilinear"}), psi, {"family": "pre-lie"})
    chk = check_lie_axioms(lp, bound)
    if not chk.ok:
        raise ConstructionError("pre-Lie bracket failed re-verification", chk)
    return lp


# -- involution pairs ------------------------------------------------------------------------


def check_involution(alg: AlgebraPair) -> CheckReport:
    sr, n = alg.sr, alg.rank
    rep = CheckReport()
    E = [unit_vec(sr, n, i) for i in range(n)]
    for i in range(n):
        ok = alg.star(alg.star(E[i])) == E[i]
        rep.add("involutive", (i,), "pass" if ok else "fail")
    for i in range(n):
        for j in range(n):
            a = alg.star(alg.mul(E[i], E[j]))
            b = alg.mul(alg.star(E[j]), alg.star(E[i]))
            rep.add("anti-multiplicative", (i, j), "pass" if a == b else "fail")
    return rep


def build_involution_pair(alg: AlgebraPair, eps=1, bound=DEFAULT_BOUND, max_rounds=8) -> LiePairDef:
    """Bracket xy + eps y* x; L0 generated by x + eps x* and its one- and two-sided multiples,
    then closed under brackets.  When this forces L0 = L the pair is returned flagged
    degenerate rather than refused."""
    if alg.involution is None:
        raise InvolutionError("algebra has no involution")
    rep = check_involution(alg)
    if not rep.ok:
        raise InvolutionError("not an involution: " + rep.failures[0].line(), rep)
    sr, n = alg.sr, alg.rank
    e = sr.coerce(eps)
    E = [unit_vec(sr, n, i) for i in range(n)]
    sc = StructureConstants.from_function(
        sr, n, lambda i, j: vadd(sr, alg.mul(E[i], E[j]), vscale(sr, e, alg.mul(alg.star(E[j]), E[i]))))
    s = [vadd(sr, E[i], vscale(sr, e, alg.star(E[i]))) for i in range(n)]
    gens = list(alg.pair.null.generators) + s
    for v in s:
        for k in range(n):
            gens.append(alg.mul(E[k], v))
            gens.append(alg.mul(v, E[k]))
            for l in range(n):
                gens.append(alg.mul(alg.mul(E[k], v), E[l]))
    null, fix = saturate_null(sr, sc, gens, max_rounds=max_rounds, bound=bound)
    pair = PairDef(alg.pair.base, n, null, alg.pair.names)
    meta = {"family": "involution", "saturated": fix, "allow_degenerate": True}
    lp = LiePairDef(pair, sc, frozenset({"bilinear"}), None, meta)
    meta["degenerate"] = lp.is_degenerate()
    if meta["degenerate"]:
        log.warning("involution pair on %s is degenerate: L0 = L", alg.name)
    return lp


# -- classical families ------------------------------------------------------------------------


@dataclass
class ClassicalPair:
    family: str
    size: int
    lie: LiePairDef                # ambient or restricted Lie pair
    carrier: list                  # spanning vectors of the carrier, in M_size coordinates
    restricted: bool               # lie is on a basis of the carrier itself
    closure: CheckReport = field(default_factory=CheckReport)
    involution: tuple | None = None


def _block_form(sr, n2, a, b):
    """Block-diagonal matrix with blocks [[0, a], [b, 0]] as a list of rows."""
    m = [[sr.zero] * n2 for _ in range(n2)]
    for k in range(0, n2, 2):
        m[k][k + 1] = a
        m[k + 1][k] = b
    return m


def _matmul(sr, a, b):
    n = len(a)
    return [[sr.sum(sr.mul(a[i][k], b[k][j]) for k in range(n)) for j in range(n)] for i in range(n)]


def _transpose(m):
    return [list(r) for r in zip(*m)]


def _unit_inverse(sr, e):
    for c in ([sr.one] + ([-1] if sr.kind == "integers" else []) +
              (sr.elements() if sr.is_finite else [])):
        if sr.mul(c, e) == sr.one:
            return c
    if sr.kind in ("nonneg_rationals",) and e != 0:
        return 1 / e
    if sr.kind == "maxplus" and e is not None and not sr.is_zero(e):
        return -e
    return None


def classical_predicate(family, size, sr, eps):
    """Linear maps x -> P(x) (as a list of functions on the entry vector) whose values must lie
    in C0, plus the involution used by the orthogonal and symplectic families."""
    n = size
    if family == "sl":
        return [lambda v: sr.sum(v[i * n + i] for i in range(n))], None
    if family == "so_odd":
        form = [[sr.one if i == j else sr.zero for j in range(n)] for i in range(n)]
        inv_form = form
    elif family == "so_even":
        form = _block_form(sr, n, sr.one, sr.one)
        inv_form = form
    elif family == "sp":
        ie = _unit_inverse(sr, sr.coerce(eps))
        if ie is None:
            raise ConstructionError(f"eps = {sr.format(sr.coerce(eps))} is not invertible; "
                                    "the symplectic involution needs eps^-1")
        form = _block_form(sr, n, sr.one, sr.coerce(eps))
        inv_form = _block_form(sr, n, ie, sr.one)
    else:
        raise ConstructionError(f"unknown classical family {family!r}")

    def star(v):
        x = mat_of(sr, n, v)
        return vec_of(_matmul(sr, _matmul(sr, inv_form, _transpose(x)), form))

    def pred_entry(a, b):
        def f(v):
            x = mat_of(sr, n, v)
            jx = _matmul(sr, form, x)
            xtj = _matmul(sr, _transpose(x), form)
            return sr.add(jx[a][b], xtj[a][b])
        return f

    return [pred_entry(a, b) for a in range(n) for b in range(n)], star


def _linear_rows(sr, preds, N):
    """Coefficient rows of linear predicates (evaluated on unit vectors)."""
    return [[p(unit_vec(sr, N, k)) for k in range(N)] for p in preds]


def _carrier_spanning_set(base: BasePair, preds, N):
    sr = base.semiring
    rows = _linear_rows(sr, preds, N)
    c0 = base.null_part
    if sr.kind == "integers" and all(sr.is_zero(c) for c in base.c0_generators):
        return linalg_kernel_int(rows, N), True
    if sr.kind == "naturals" and c0.kind == "principal":
        m = c0.values[0]
        # each predicate row is a sum over a group of entries; groups must be disjoint or equal
        groups = {}
        for r in rows:
            sup = tuple(k for k in range(N) if r[k])
            if sup:
                groups[sup] = [r[k] for k in sup]
        seen = set()
        for sup in groups:
            if seen & set(sup):
                if not any(set(sup) == set(s) for s in groups if s != sup):
                    raise ConstructionError("carrier constraints overlap; no generating set available")
            seen |= set(sup)
        gens = [unit_vec(sr, N, k) for k in range(N) if k not in seen]
        for sup, coeffs in groups.items():
            if m == 0:
                raise ConstructionError("C0 = 0 over the naturals leaves only zero in constrained slots")
            if len(sup) == 1:
                k, c = sup[0], coeffs[0]
                mult = next(t for t in range(1, m + 1) if (t * c) % m == 0)
                gens.append(vscale(sr, mult, unit_vec(sr, N, k)))
                continue
            # compositions t with sum_k coeffs_k t_k = m (coefficients here are all 1)
            if any(c != 1 for c in coeffs):
                raise ConstructionError("unsupported carrier constraint coefficients")
            for comp in iproduct(range(m + 1), repeat=len(sup)):
                if sum(comp) == m:
                    v = [0] * N
                    for k, t in zip(sup, comp):
                        v[k] = t
                    gens.append(tuple(v))
        return gens, False
    if c0.kind == "principal" and _unit_inverse(sr, c0.values[0]) is not None:
        return [unit_vec(sr, N, k) for k in range(N)], False
    raise ConstructionError(f"no carrier generating set for {base.describe()}")


def linalg_kernel_int(rows, N):
    basis = linalg.nullspace(rows, N)
    for b in basis:
        if any(isinstance(x, Fraction) and x.denominator != 1 for x in b):
            raise ConstructionError("carrier lattice basis is not integral")
    return [tuple(int(x) for x in b) for b in basis]


def build_classical(family: str, n: int, base: BasePair, eps, bound=DEFAULT_BOUND) -> ClassicalPair:
    """sl (size n), so_odd (2n+1), so_even (2n), sp (2n) with the eps-commutator xy + eps yx.

    The carrier is {x : P(x) in C0} for the family's linear predicate P.  Over the integers with
    C0 = 0 the pair is restricted to a lattice basis of the carrier; otherwise the ambient
    matrix pair is returned together with a spanning set of the carrier and a closure report.
    """
    sr = base.semiring
    e = sr.coerce(eps)
    m = sr.add(sr.one, e)
    size = {"sl": n, "so_odd": 2 * n + 1, "so_even": 2 * n, "sp": 2 * n}.get(family)
    if size is None:
        raise ConstructionError(f"unknown classical family {family!r}")
    c0 = base.c0_generators
    if not sr.is_zero(m) and base.null_part.kind != "set":
        from .semiring import scalar_in_C0
        if not scalar_in_C0(base, m).is_in:
            raise ConstructionError("1 + eps must lie in C0")
    preds, star = classical_predicate(family, size, sr, e)
    N = size * size
    alg = matrix_algebra(base, size, eps=e)
    psi = NegationSpec.scalar(e)
    sc_amb = psi_bracket_constants(alg, psi)
    carrier, free = _carrier_spanning_set(base, preds, N)

    def in_carrier(v):
        from .semiring import scalar_in_C0
        return all(scalar_in_C0(base, p(v)).is_in for p in preds)

    closure = CheckReport()
    for a, b in iproduct(range(len(carrier)), repeat=2):
        v = sc_amb.apply(carrier[a], carrier[b])
        closure.add("carrier-closed", (a, b), "pass" if in_carrier(v) else "fail",
                    None if in_carrier(v) else fmt_vec(sr, v, alg.pair.names))
    for a, v in enumerate(carrier):
        closure.add("carrier-member", (a,), "pass" if in_carrier(v) else "fail")
    if free and sr.kind == "integers":
        k = len(carrier)
        if any(not sr.is_zero(x) for x in c0) or not sr.is_zero(m):
            raise ConstructionError("lattice restriction needs C0 = 0 and 1 + eps = 0")
        cols = carrier

        def coords(v):
            c = linalg.int_span_solve(cols, v)
            if c is None:
                raise ConstructionError("bracket leaves the carrier lattice")
            return tuple(c)

        sc = StructureConstants.from_function(sr, k, lambda i, j: coords(sc_amb.apply(cols[i], cols[j])))
        names = tuple(f"{family}{i}" for i in range(k))
        pair = make_pair(base, k, (), names)
        lp = LiePairDef(pair, sc, frozenset({"bilinear"}), psi,
                        {"family": family, "size": size, "carrier": [tuple(c) for c in cols]})
        return ClassicalPair(family, size, lp, list(cols), True, closure, star)
    lp = LiePairDef(alg.pair, sc_amb, frozenset({"bilinear"}), psi, {"family": family, "size": size})
    return ClassicalPair(family, size, lp, carrier, False, closure, star)


def check_lie_axioms_span(lp: LiePairDef, vectors, bound=DEFAULT_BOUND) -> CheckReport:
    """The multilinear axioms on tuples drawn from a spanning family of a sub-carrier."""
    sr, n = lp.sr, lp.rank
    br = lp.bracket
    rep = CheckReport(mode="spanning family")
    V = list(vectors)

    def rec(ax, idx, v):
        st = lp.null.contains(v, bound)
        rep.add(ax, idx, {"in": "pass", "not_in": "fail", "unknown": "inconclusive"}[st],
                None if st == "in" else fmt_vec(sr, v, lp.names))

    for i, x in enumerate(V):
        rec("fgen-1", (i,), br(x, x))
    for i in range(len(V)):
        for j in range(i + 1, len(V)):
            rec("fgen-2", (i, j), vadd(sr, br(V[i], V[j]), br(V[j], V[i])))
    for i, j, k in iproduct(range(len(V)), repeat=3):
        x, y, z = V[i], V[j], V[k]
        rec("fgen-3", (i, j, k), vsum(sr, [br(br(x, y), z), br(br(y, z), x), br(br(z, x), y)], n))
        rec("fgen-4", (i, j, k), vsum(sr, [br(z, br(y, x)), br(x, br(z, y)), br(y, br(x, z))], n))
    return rep


# -- cross product and bilinear-form pairs ---------------------------------------------------


def bilinear_null_generators(sr, sc: StructureConstants):
    n = sc.rank
    t = sc.table
    gens = [t[i][i] for i in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            gens.append(vadd(sr, t[i][j], t[j][i]))
            gens.append(sc.apply(t[i][j], t[j][i]))
            gens.append(sc.apply(t[j][i], t[i][j]))
    return gens


def build_bilinear_form_pair(base: BasePair, table, names=(), bound=DEFAULT_BOUND, max_rounds=8,
                             extra_null=()) -> LiePairDef:
    """[b_i b_j] = a_ij; L0 generated by a_ii, a_ij + a_ji and both products of a_ij with a_ji,
    then closed under brackets with the basis."""
    sr = base.semiring
    n = len(table)
    sc = StructureConstants(sr, n, table)
    gens = bilinear_null_generators(sr, sc) + list(c0_generators(base, n)) + list(extra_null)
    null, fix = saturate_null(sr, sc, gens, max_rounds=max_rounds, bound=bound, stop_if_degenerate=True)
    pair = PairDef(base, n, null, tuple(names))
    return LiePairDef(pair, sc, frozenset({"bilinear"}), None,
                      {"family": "bilinear-form", "saturated": fix})


def cross_product_table(sr, c, d):
    E = [unit_vec(sr, 3, i) for i in range(3)]
    c = [tuple(sr.coerce(x) for x in v) for v in c]
    d = [tuple(sr.coerce(x) for x in v) for v in d]
    return [[d[0], E[2], c[1]],
            [c[2], d[1], E[0]],
            [E[1], c[0], d[2]]]


def build_cross_product(base: BasePair, c, d, bound=DEFAULT_BOUND, max_rounds=8, max_gens=None,
                        allow_degenerate=False) -> LiePairDef:
    """Rank-3 pair with bracket matrix [[d0, b2, c1], [c2, d1, b0], [b1, c0, d2]].

    L0 is generated by d_i, b_i + c_i, [b_i c_i] and [c_i b_i], then closed under brackets.
    With allow_degenerate a pair with L0 = L is returned (flagged) instead of rejected.
    """
    sr = base.semiring
    table = cross_product_table(sr, c, d)
    sc = StructureConstants(sr, 3, table)
    E = [unit_vec(sr, 3, i) for i in range(3)]
    cv = [tuple(sr.coerce(x) for x in v) for v in c]
    dv = [tuple(sr.coerce(x) for x in v) for v in d]
    gens = list(dv) + [vadd(sr, E[i], cv[i]) for i in range(3)]
    gens += [sc.apply(E[i], cv[i]) for i in range(3)] + [sc.apply(cv[i], E[i]) for i in range(3)]
    gens += c0_generators(base, 3)
    null, fix = saturate_null(sr, sc, gens, max_rounds=max_rounds, bound=bound,
                              stop_if_degenerate=not allow_degenerate, max_gens=max_gens)
    pair = PairDef(base, 3, null, ("b0", "b1", "b2"))
    meta = {"family": "cross-product", "saturated": fix, "c": cv, "d": dv}
    if allow_degenerate:
        meta["allow_degenerate"] = True
    return LiePairDef(pair, sc, frozenset({"bilinear"}), None, meta)


@dataclass
class DrawLog:
    degenerate: int = 0
    unsaturated: int = 0

    @property
    def redraws(self):
        return self.degenerate + self.unsaturated


def random_cross_product(base: BasePair, seed: int, hi: int = 2, max_tries: int = 500,
                         bound=DEFAULT_BOUND, max_gens: int = 30):
    """Draw (c, d) with entries in 0..hi from a seeded generator.  A draw is redrawn when the
    closed null is all of L, or when closure has not settled within max_gens generators.
    Returns (pair, DrawLog)."""
    rng = random.Random(seed)
    dl = DrawLog()
    for _ in range(max_tries):
        c = [tuple(rng.randint(0, hi) for _ in range(3)) for _ in range(3)]
        d = [tuple(rng.randint(0, hi) for _ in range(3)) for _ in range(3)]
        try:
            lp = build_cross_product(base, c, d, bound, max_gens=max_gens)
        except DegeneratePairError:
            dl.degenerate += 1
            continue
        if not lp.meta["saturated"]:
            dl.unsaturated += 1
            continue
        return lp, dl
    raise ConstructionError(f"no usable draw in {max_tries} tries")


def classical_cross_product() -> LiePairDef:
    """The real cross product, over the integers: c_i = -b_i, d_i = 0."""
    Z = SemiringSpec.named("int")
    base = BasePair(Z)
    c = [tuple(-1 if j == i else 0 for j in range(3)) for i in range(3)]
    d = [(0, 0, 0)] * 3
    return build_cross_product(base, c, d)


# -- filiform pairs ---------------------------------------------------------------------------


def build_filiform(n: int, base: BasePair, overrides=None, bound=DEFAULT_BOUND, max_rounds=8) -> LiePairDef:
    """Basis x1..xn with [x1 xi] = x_{i+1}.  `overrides` maps 1-based (i, j) to the value of
    [x_i x_j] for (i, 1) with i >= 2 and for i, j >= 2; for n >= 4 an override with i, j >= 2
    must be supported on x_k with k >= i + j.  L0 is generated by x3 + l21 (when n >= 3),
    l_ij + l_ji and C0 * L, then closed under brackets."""
    sr = base.semiring
    overrides = {k: tuple(sr.coerce(x) for x in v) for k, v in (overrides or {}).items()}
    E = [unit_vec(sr, n, i) for i in range(n)]
    entries = {}
    for i in range(1, n):
        entries[0, i] = E[i + 1] if i + 1 < n else zero_vec(sr, n)
    for (i, j), v in overrides.items():
        if len(v) != n:
            raise ConstructionError(f"override ({i},{j}) has the wrong length")
        if i == 1:
            raise ConstructionError(f"[x1 x{j}] is fixed by the filiform shape")
        if i >= 2 and j >= 2 and n >= 4:
            low = [k + 1 for k, x in enumerate(v) if not sr.is_zero(x) and k + 1 < i + j]
            if low:
                raise DegreeConstraintError(f"override ({i},{j}) uses x{low[0]} below degree {i + j}")
        entries[i - 1, j - 1] = v
    sc = StructureConstants.from_dict(sr, n, entries)
    gens = []
    if n >= 3:
        gens.append(vadd(sr, E[2], sc.table[1][0]))
    for i in range(n):
        for j in range(i, n):
            if (i, j) == (0, 1):
                continue
            if (i + 1, j + 1) in overrides or (j + 1, i + 1) in overrides or i == j:
                gens.append(vadd(sr, sc.table[i][j], sc.table[j][i]) if i != j else sc.table[i][i])
    gens += c0_generators(base, n)
    null, fix = saturate_null(sr, sc, gens, max_rounds=max_rounds, bound=bound)
    pair = PairDef(base, n, null, tuple(f"x{i + 1}" for i in range(n)))
    return LiePairDef(pair, sc, frozenset({"bilinear"}), None, {"family": "filiform", "saturated": fix})


# -- low-dimensional catalog ----------------------------------------------------------------


def _lp(base, n, entries, null_gens, names, family, negation=None):
    sr = base.semiring
    sc = StructureConstants.from_dict(sr, n, {k: tuple(sr.coerce(x) for x in v) for k, v in entries.items()})
    pair = make_pair(base, n, list(null_gens) + c0_generators(base, n), names)
    return LiePairDef(pair, sc, frozenset({"bilinear"}), negation, {"family": family})


def j_pair() -> LiePairDef:
    """Skew 3x3 matrices J_i(1, -1) over the integers with the bracket xy + y^T x."""
    Z = SemiringSpec.named("int")
    base = BasePair(Z)
    alg = matrix_algebra(base, 3)
    J = [(0, 1), (0, 2), (1, 2)]  # J0, J1, J2 supports
    vecs = []
    for a, b in J:
        v = [0] * 9
        v[a * 3 + b] = 1
        v[b * 3 + a] = -1
        vecs.append(tuple(v))

    def br(x, y):
        return vadd(Z, alg.mul(x, y), alg.mul(alg.star(y), x))

    def coords(v):
        c = linalg.int_span_solve(vecs, v)
        if c is None:
            raise ConstructionError("J bracket leaves the skew lattice")
        return tuple(c)

    sc = StructureConstants.from_function(Z, 3, lambda i, j: coords(br(vecs[i], vecs[j])))
    pair = make_pair(base, 3, (), ("J0", "J1", "J2"))
    return LiePairDef(pair, sc, frozenset({"bilinear"}), None, {"family": "J", "carrier": vecs})


def check_j_grading(base: BasePair, values) -> CheckReport:
    """For i != j, [J_i(a,a'), J_j(b,b')] with the bracket xy + y^T x lands in the third type
    J_k, k = -(i+j) mod 3 (entries constrained as well), for all parameters drawn from `values`
    with a + a' in C0.  J0, J1, J2 are supported on {01,10}, {02,20}, {12,21}."""
    from .semiring import scalar_in_C0
    sr = base.semiring
    alg = matrix_algebra(base, 3)
    sup = [(0, 1), (0, 2), (1, 2)]

    def J(i, a, a2):
        v = [sr.zero] * 9
        p, q = sup[i]
        v[p * 3 + q] = a
        v[q * 3 + p] = a2
        return tuple(v)

    def kind(v):
        for t, (p, q) in enumerate(sup):
            if all(sr.is_zero(v[k]) for k in range(9) if k not in (p * 3 + q, q * 3 + p)):
                return t, v[p * 3 + q], v[q * 3 + p]
        return None

    rep = CheckReport(mode="exhaustive over values")
    vals = [sr.coerce(x) for x in values]
    ok_pairs = [(a, b) for a in vals for b in vals if scalar_in_C0(base, sr.add(a, b)).is_in]
    for i, j in iproduct(range(3), repeat=2):
        if i == j:
            continue
        bad = None
        for (a, a2), (b, b2) in iproduct(ok_pairs, repeat=2):
            x, y = J(i, a, a2), J(j, b, b2)
            v = vadd(sr, alg.mul(x, y), alg.mul(alg.star(y), x))
            k = kind(v)
            target = (-i - j) % 3
            if k is None or (k[0] != target and any(not sr.is_zero(t) for t in v)) \
                    or not scalar_in_C0(base, sr.add(k[1], k[2])).is_in:
                bad = (a, a2, b, b2)
                break
        rep.add("j-grading", (i, j), "pass" if bad is None else "fail",
                None if bad is None else "(" + ",".join(sr.format(t) for t in bad) + ")")
    return rep


def catalog_low_dim() -> dict:
    """Named small Lie pairs; each value is a LiePairDef."""
    N = SemiringSpec.named("nat")
    Z = SemiringSpec.named("int")
    Q = SemiringSpec.named("qplus")
    B = SemiringSpec.named("bool")
    n0 = BasePair(N)
    out = {}
    out["dim1-trivial"] = _lp(n0, 1, {}, [], ("x",), "dim1")
    out["dim2-classical-int"] = _lp(BasePair(Z), 2, {(0, 1): (1, 0), (1, 0): (-1, 0)}, [], ("x", "y"), "dim2")
    out["dim2-abelian-nat"] = _lp(n0, 2, {}, [], ("x", "y"), "dim2")
    y = (0, 1)
    out["dim2-Cy-a"] = _lp(n0, 2, {(0, 0): y, (0, 1): y, (1, 0): y, (1, 1): y}, [y], ("x", "y"), "dim2")
    out["dim2-Cy-b"] = _lp(n0, 2, {(0, 0): y, (0, 1): y, (1, 0): y}, [y], ("x", "y"), "dim2")
    out["dim2-Cy-c"] = _lp(n0, 2, {(0, 0): y}, [y], ("x", "y"), "dim2")
    mu, nu = Fraction(1, 3), Fraction(2, 3)
    g = (mu, nu)
    out["dim2-mu-nu-qplus"] = _lp(BasePair(Q), 2, {(0, 1): g, (1, 0): g}, [g], ("x", "y"), "dim2")
    out["dim2-mu-nu-bool"] = _lp(BasePair(B), 2, {(0, 1): (1, 1), (1, 0): (1, 1)}, [(1, 1)], ("x", "y"), "dim2")
    names4 = ("x", "y", "z1", "z2")
    z1, z2 = (0, 0, 1, 0), (0, 0, 0, 1)
    base4 = {(0, 1): z1, (1, 0): z2}
    null4 = [z1, z2]
    out["dim4-1"] = _lp(n0, 4, base4, null4, names4, "dim4")
    heis = dict(base4)
    x, yy, a, b = 0, 1, 2, 3
    for k in [(x, a), (a, yy), (b, x), (yy, b)]:
        heis[k] = z1
    for k in [(x, b), (b, yy), (a, x), (yy, a)]:
        heis[k] = z2
    out["dim4-heisenberg"] = _lp(n0, 4, heis, null4, names4, "heisenberg")
    d3 = dict(heis)
    d3[a, b] = z1
    d3[b, a] = z2
    out["dim4-3"] = _lp(n0, 4, d3, null4, names4, "dim4")
    out["J-so3-int"] = j_pair()
    return out


def heisenberg_pair() -> LiePairDef:
    return catalog_low_dim()["dim4-heisenberg"]


def abelian_pair(base: BasePair, n: int, null_gens=()) -> LiePairDef:
    """Rank-n pair with zero bracket: over a zero-sum-free semiring with L0 = 0 this is the only
    Lie pair structure on a free module."""
    return _lp(base, n, {}, list(null_gens), tuple(f"x{i + 1}" for i in range(n)), "abelian")
