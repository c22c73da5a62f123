"""The nine acceptance criteria, one test each.

Run under pytest (a summary line per criterion is printed at the end of the session) or as a
script: `python3 tests/test_acceptance.py`."""
from __future__ import annotations

import contextlib
import io
import json
import random
import sys
import time
from fractions import Fraction
from functools import reduce
from itertools import product as iproduct
from pathlib import Path

from tropical_lie.cli import main as cli_main
from tropical_lie.constructions import (build_bilinear_form_pair, build_classical, build_filiform,
                                        build_involution_pair, build_psi_commutator, catalog_low_dim,
                                        check_leibniz, classical_cross_product, matrix_algebra,
                                        random_cross_product, abelian_pair)
from tropical_lie.doubling import (FGEN2, JACOBI, DoubledElement, check_grading, double_lie, double_mul,
                                   switch, transfer_identities)
from tropical_lie.krasner import KrasnerModel, check_krasner, matrix_table_f2
from tropical_lie.lie import DegeneratePairError, StructureConstants, check_jacobi_preceq, check_lie_axioms
from tropical_lie.membership import BOTTOM, membership
from tropical_lie.modules import NegationSpec, Submodule, submodule_membership
from tropical_lie.pairfile import load, loads_map
from tropical_lie.pbw import pbw_eps, pbw_preceq, pbw_weak
from tropical_lie.semiring import BasePair, SemiringSpec

from oracles import axiom_failures, brute_member_nat, brute_member_maxplus, twist_oracle

FIX = Path(__file__).parent / "fixtures"
NAT, INT, BOOL = (SemiringSpec.named(s) for s in ("nat", "int", "bool"))
MAXPLUS, QPLUS = SemiringSpec.named("maxplus"), SemiringSpec.named("qplus")

RESULTS: dict[int, tuple[bool, str]] = {}
TITLES = {
    1: "catalog soundness",
    2: "Leibniz identities",
    3: "doubling",
    4: "membership cross-validation",
    5: "PBW weak",
    6: "PBW preceq",
    7: "PBW eps",
    8: "Krasner model",
    9: "negative controls",
}


def record(n, problems, detail=""):
    ok = not problems
    RESULTS[n] = (ok, detail if ok else "; ".join(problems[:3]) + (f" (+{len(problems) - 3} more)" if len(problems) > 3 else ""))
    assert ok, RESULTS[n][1]


def criterion_lines():
    out = []
    for n in range(1, 10):
        if n in RESULTS:
            ok, d = RESULTS[n]
            out.append(f"criterion {n} ({TITLES[n]}): {'PASS' if ok else 'FAIL'} {d}".rstrip())
        else:
            out.append(f"criterion {n} ({TITLES[n]}): NOT RUN")
    return out


def _clean(name, rep, problems):
    if rep.failures or rep.inconclusives:
        bad = (rep.failures or rep.inconclusives)[0]
        problems.append(f"{name}: {rep.summary()}, first {bad.line()}")


# -- 1 ---------------------------------------------------------------------------------------


def test_criterion_1_catalog_soundness():
    problems, count = [], 0

    def chk(name, lp):
        nonlocal count
        count += 1
        _clean(name, check_lie_axioms(lp), problems)

    for name, lp in catalog_low_dim().items():
        chk(name, lp)
    chk("filiform (N,2N)", build_filiform(3, BasePair.from_eps(NAT, 1)))
    chk("filiform (N,2N) l21=x3", build_filiform(3, BasePair.from_eps(NAT, 1), {(2, 1): (0, 0, 1)}))
    for seed in range(20):
        lp, _ = random_cross_product(BasePair(NAT), seed)
        chk(f"cross product seed {seed}", lp)
    chk("cross product Z", classical_cross_product())
    # bilinear form pairs over the Booleans: every table for n <= 2, seeded tables for n = 3, 4
    # (tables whose null is everything are refused by the builder and produce no pair)
    rng = random.Random(0)
    tables = [(n, e) for n in (1, 2) for e in iproduct(iproduct((0, 1), repeat=n), repeat=n * n)]
    tables += [(n, [tuple(rng.randint(0, 1) for _ in range(n)) for _ in range(n * n)])
               for n in (3, 4) for _ in range(100)]
    refused = 0
    for n, entries in tables:
        table = [[entries[i * n + j] for j in range(n)] for i in range(n)]
        try:
            lp = build_bilinear_form_pair(BasePair(BOOL), table)
        except DegeneratePairError:
            refused += 1
            continue
        chk(f"bilinear n={n} {entries}", lp)
    chk("involution transpose M2(B)", build_involution_pair(matrix_algebra(BasePair(BOOL), 2), 1))
    chk("sl2 (N,2N)", build_classical("sl", 2, BasePair.from_eps(NAT, 1), 1).lie)
    zb = BasePair.from_eps(INT, -1)
    for fam, n in (("so_odd", 1), ("so_even", 2), ("sp", 1), ("sp", 2)):
        chk(f"{fam} n={n} Z", build_classical(fam, n, zb, -1).lie)
    chk("psi-commutator M2(N)",
        build_psi_commutator(matrix_algebra(BasePair.from_eps(NAT, 1), 2, eps=1), NegationSpec.scalar(1)))
    record(1, problems, f"{count} pairs, 0 fail, 0 inconclusive ({refused} degenerate Boolean tables refused)")


# -- 2 ---------------------------------------------------------------------------------------


def test_criterion_2_leibniz():
    problems = []
    alg = matrix_algebra(BasePair.from_eps(NAT, 1), 2, eps=1)
    psi = NegationSpec.scalar(1)
    rng = random.Random(2)
    triples = [tuple(tuple(rng.randint(0, 5) for _ in range(4)) for _ in range(3)) for _ in range(200)]
    rep = check_leibniz(alg, psi, triples)
    _clean("M2(N) seeded", rep, problems)
    n_exh = 0
    for size in (1, 2):
        balg = matrix_algebra(BasePair(BOOL), size)
        elems = list(iproduct((0, 1), repeat=size * size))
        trip = list(iproduct(elems, repeat=3))
        n_exh += len(trip)
        rep = check_leibniz(balg, psi, trip)
        # the equalities only: with null {0} the identity map is no pre-negation over B
        bad = [e for e in rep.entries if e.axiom != "leibniz-preceq" and e.status != "pass"]
        if bad:
            problems.append(f"M{size}(B): {len(bad)} failures, first {bad[0].line()}")
    record(2, problems, f"200 seeded M2(N) triples, {n_exh} Boolean triples")


# -- 3 ---------------------------------------------------------------------------------------


def test_criterion_3_doubling():
    problems = []
    rng = random.Random(3)
    # switch is an involution
    for _ in range(200):
        v = tuple(rng.randint(0, 9) for _ in range(6))
        x = DoubledElement.from_vector(v)
        if switch(switch(x)) != x or switch(switch(v)) != v:
            problems.append(f"switch twice moves {v}")
    # twist product against a polynomial oracle (A + B t with t^2 = 1)
    alg = matrix_algebra(BasePair(NAT), 2)
    for _ in range(100):
        x = DoubledElement(*(tuple(rng.randint(0, 4) for _ in range(4)) for _ in range(2)))
        y = DoubledElement(*(tuple(rng.randint(0, 4) for _ in range(4)) for _ in range(2)))
        got = double_mul(NAT, x, y, alg.mul)
        want = twist_oracle(x, y)
        if got != want:
            problems.append(f"twist {x} {y}: {got} != {want}")
        a, b = (rng.randint(0, 9), rng.randint(0, 9)), (rng.randint(0, 9), rng.randint(0, 9))
        got = double_mul(NAT, DoubledElement(*a), DoubledElement(*b))
        if (got.pos, got.neg) != (a[0] * b[0] + a[1] * b[1], a[0] * b[1] + a[1] * b[0]):
            problems.append(f"scalar twist {a} {b}")
    # grading, exhaustive over Boolean products
    products = [matrix_algebra(BasePair(BOOL), 2).product]
    for n in (1, 2):
        vecs = list(iproduct((0, 1), repeat=n))
        for entries in iproduct(vecs, repeat=n * n):
            products.append(StructureConstants.from_function(BOOL, n, lambda i, j: entries[i * n + j]))
    for p in products:
        _clean("grading", check_grading(BOOL, p, exhaustive=True), problems)
    # transfer of fgen(2) and Jacobi
    cat = catalog_low_dim()
    fil = build_filiform(3, BasePair.from_eps(NAT, 1))
    for name, lp in (("filiform", fil), ("heisenberg", cat["dim4-heisenberg"])):
        for ident in (FGEN2, JACOBI):
            rep = transfer_identities(lp, ident)
            _clean(f"transfer {ident.name} {name}", rep, problems)
    # double_lie outputs: Lie axioms always; Jacobi-preceq whenever the input satisfies it
    inputs = dict(cat)
    inputs["filiform"] = fil
    inputs["filiform-nat"] = build_filiform(3, BasePair(NAT))
    for name, lp in inputs.items():
        d = double_lie(lp)
        _clean(f"double {name} axioms", check_lie_axioms(d), problems)
        if check_jacobi_preceq(lp).ok:
            _clean(f"double {name} jacobi-preceq", check_jacobi_preceq(d), problems)
        elif check_jacobi_preceq(d).ok:
            problems.append(f"double {name}: input fails jacobi-preceq but the double passes")
    for sr in (NAT, BOOL):
        for n in (1, 2):
            d = double_lie(matrix_algebra(BasePair(sr), n))
            _clean(f"double M{n}({sr.name}) axioms", check_lie_axioms(d), problems)
            _clean(f"double M{n}({sr.name}) jacobi-preceq", check_jacobi_preceq(d), problems)
    record(3, problems, f"{len(products)} graded products, {len(inputs) + 4} doubled pairs")


# -- 4 ---------------------------------------------------------------------------------------


def test_criterion_4_membership():
    problems = []
    rng = random.Random(4)
    n_nat = 0
    # every single-generator instance of rank 1 and 2, then seeded instances up to rank 3
    cases = []
    for rank in (1, 2):
        for g in iproduct(range(4), repeat=rank):
            for v in iproduct(range(7), repeat=rank):
                cases.append(([g], v))
    for _ in range(1500):
        rank = rng.randint(1, 3)
        k = rng.randint(1, 3)
        gens = [tuple(rng.randint(0, 3) for _ in range(rank)) for _ in range(k)]
        cases.append((gens, tuple(rng.randint(0, 6) for _ in range(rank))))
    for gens, v in cases:
        n_nat += 1
        got = submodule_membership(Submodule(NAT, len(v), tuple(gens)), v)
        want = brute_member_nat(gens, v)
        if got.is_unknown or got.is_in != want:
            problems.append(f"N {gens} {v}: {got.status} vs oracle {want}")
    for t in range(500):
        rank = rng.randint(1, 3)
        k = rng.randint(1, 3)
        ent = lambda: BOTTOM if rng.random() < 0.2 else Fraction(rng.randint(0, 6), 2)
        gens = [tuple(ent() for _ in range(rank)) for _ in range(k)]
        if rng.random() < 0.5:   # a reachable query half of the time
            cs = [ent() for _ in range(k)]
            v = tuple(reduce(MAXPLUS.add, [MAXPLUS.mul(c, g[j]) for c, g in zip(cs, gens)]) for j in range(rank))
        else:
            v = tuple(ent() for _ in range(rank))
        got = membership(MAXPLUS, gens, v)
        want = brute_member_maxplus(gens, v)
        if got.is_unknown or got.is_in != want:
            problems.append(f"maxplus {gens} {v}: {got.status} vs oracle {want}")
    record(4, problems, f"{n_nat} naturals instances, 500 max-plus instances, 0 disagreements")


# -- 5 ---------------------------------------------------------------------------------------


def test_criterion_5_pbw_weak():
    problems = []
    for rank in (2, 3):
        res = pbw_weak(abelian_pair(BasePair(NAT), rank), 3)
        if res.injectivity != "established (LZS)" or not res.report.ok:
            problems.append(f"rank {rank}: {res.injectivity}, {res.report.summary()}")
        deg1 = [e for e in res.report.entries if e.axiom == "deg1-generator"]
        if deg1:
            problems.append(f"rank {rank}: {len(deg1)} degree-one null generators")
    res = pbw_weak(catalog_low_dim()["dim2-classical-int"], 3)
    if res.injectivity != "not established (LZS fails)":
        problems.append(f"integers instance: {res.injectivity}")
    if any(e.axiom == "iota-L0-injective" for e in res.report.entries):
        problems.append("integers instance: the degree argument ran despite the LZS gate")
    record(5, problems, "ranks 2 and 3 established (LZS); integers gated")


# -- 6 ---------------------------------------------------------------------------------------


def test_criterion_6_pbw_preceq():
    problems = []
    pairs = dict(catalog_low_dim())
    pairs["filiform"] = build_filiform(3, BasePair.from_eps(NAT, 1))
    n_words = n_overlaps = 0
    for name, lp in pairs.items():
        rep = pbw_preceq(lp, 3).report
        _clean(name, rep, problems)
        n_words += len(rep.by_axiom("rewrite-terminates"))
        n_overlaps += len(rep.by_axiom("overlap"))
        if lp.rank >= 3 and not rep.by_axiom("overlap"):
            problems.append(f"{name}: no overlap entries")
    record(6, problems, f"{n_words} monomials within the step bound, {n_overlaps} overlaps resolved")


# -- 7 ---------------------------------------------------------------------------------------


def test_criterion_7_pbw_eps():
    """The surpassing reduction is checked in the form stated by the criterion (middle term
    x [z x]).  That form is refuted in U by reduction mod 2, so this criterion fails; the form
    with x [z y], which has an explicit certificate, is checked alongside."""
    problems = []
    lp = load(FIX / "filiform-eps1.pair")
    good = loads_map((FIX / "f-good.map").read_text(), lp)
    bad = loads_map((FIX / "f-bad.map").read_text(), lp)
    res = pbw_eps(lp, 1, 3, good)
    rep = res.report
    sums = rep.by_axiom("eps-sum-null")
    if not sums or any(e.status != "pass" for e in sums):
        problems.append("eps-sum-null: " + rep.summary())
    fac = rep.by_axiom("factor")
    if len(fac) != lp.rank or any(e.status != "pass" for e in fac):
        problems.append("hand-built f does not factor through iota")
    for ax in ("fix", "psi_f-congruence", "psi_f-null", "surpassing-reduction"):
        if any(e.status != "pass" for e in rep.by_axiom(ax)):
            problems.append(f"{ax} fails for the hand-built f")
    brep = pbw_eps(lp, 1, 3, bad).report
    fx = [e for e in brep.by_axiom("fix") if e.status == "fail"]
    # the bad map sends x3 to e01; [x1 x2] = x3 is where the fix condition breaks first
    if not fx or fx[0].index != (0, 1) or "e02 != e01" not in (fx[0].witness or ""):
        problems.append(f"planted f: witness {fx[0].line() if fx else None}")
    lit = rep.by_axiom("surpassing-literal")
    if len(lit) != lp.rank ** 3:
        problems.append("surpassing-literal not checked on every basis triple")
    for e in lit:
        if e.status != "pass":
            problems.append(f"zxy <= xyz + x[zx] + [zx]y at (x,y,z)={e.index}: {e.status} ({e.witness})")
    record(7, problems, f"{len(sums)} monomial pairs, f factors, planted f rejected, {len(lit)} triples")


# -- 8 ---------------------------------------------------------------------------------------


def test_criterion_8_krasner():
    problems = []
    R = matrix_table_f2(2)
    I = 9
    t = time.time()
    model = KrasnerModel(R, (I,), eps=I)
    rep = check_krasner(model)
    dt = time.time() - t
    _clean("M2(F2), G={I}", rep, problems)
    if not rep.by_axiom("submultiplicative"):
        problems.append("sub-multiplicativity not checked")
    if dt >= 60:
        problems.append(f"took {dt:.1f}s")
    record(8, problems, f"{rep.summary()} in {dt:.1f}s")


# -- 9 ---------------------------------------------------------------------------------------


def run_cli(args):
    out = io.StringIO()
    with contextlib.redirect_stdout(out), contextlib.redirect_stderr(io.StringIO()):
        code = cli_main(args)
    return code, out.getvalue().splitlines()


def _base_index(axiom, idx, coordinate_split):
    arity = {"fgen-1": 1, "fgen-2": 2, "fgen-3": 3, "fgen-4": 3, "LieD-f": 3}[axiom]
    return tuple(idx[:arity]) if coordinate_split else tuple(idx)


def test_criterion_9_negative_controls():
    problems = []
    manifest = json.loads((FIX / "mutations.json").read_text())
    assert len(manifest) == 10
    for m in manifest:
        path = FIX / m["file"]
        lp = load(path)
        code, lines = run_cli(["check", str(path)])
        fails = [ln for ln in lines if " fail" in ln and not ln.startswith("#")]
        if code != 1 or not fails:
            problems.append(f"{m['file']}: exit {code}")
            continue
        split = lp.null.coordinate_parts() is not None
        got = set()
        for ln in fails:
            axiom, idx = ln.split()[0], ln.split()[1]
            if axiom == "c0-null":
                continue
            parts = tuple(p if not p.lstrip("-").isdigit() else int(p) for p in idx.strip("()").split(","))
            got.add((axiom, _base_index(axiom, parts, split)))
        want = axiom_failures(lp)
        if got != want:
            problems.append(f"{m['file']}: checker {sorted(got)[:3]} vs oracle {sorted(want)[:3]}")
        i, j, _ = m["entry"]
        first = fails[0].split()[1].strip("()").split(",")
        if not {str(i), str(j)} & set(first):
            problems.append(f"{m['file']}: first witness {fails[0]} misses the mutated entry")
    # the documented example: c^1_11 = 1 with C0 = 0 is caught by fgen-1 at (i, m) = (0, 0)
    code, lines = run_cli(["check", str(FIX / "mut01-filiform-c0zero.pair")])
    if not any(ln.startswith("fgen-1 (0,0) fail") for ln in lines):
        problems.append("mut01: no fgen-1 (0,0) failure line")
    record(9, problems, "10 mutations, exit 1, witnesses match the oracle")


if __name__ == "__main__":
    tests = [v for k, v in sorted(globals().items()) if k.startswith("test_criterion_")]
    for t in tests:
        try:
            t()
        except AssertionError:
            pass
    print("\n".join(criterion_lines()))
    sys.exit(0 if all(ok for ok, _ in RESULTS.values()) and len(RESULTS) == 9 else 1)
