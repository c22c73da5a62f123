"""tropical-lie: check, construct, double, pbw and catalog.

Exit codes: 0 all pass, 1 at least one fail, 2 inconclusive only, 3 structural error.
Verdict lines read `<axiom-id> <index-tuple> <pass|fail|inconclusive> [witness]`; indices are
0-based."""
from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .constructions import (ConstructionError, build_bilinear_form_pair, build_classical, build_cross_product,
                            build_filiform, build_involution_pair, build_psi_commutator, catalog_low_dim,
                            classical_cross_product, matrix_algebra, random_cross_product, abelian_pair)
from .doubling import NULL_MODES, double_lie
from .krasner import KrasnerError, KrasnerModel, check_krasner, f2_transpose
from .lie import LiePairDef, check_jacobi_preceq, check_lie_axioms
from .membership import DEFAULT_BOUND
from .modules import NegationSpec, PairError
from .pairfile import KrasnerSpec, PairFileError, dumps, load, loads_map, save
from .pbw import RewriteError, pbw_eps, pbw_preceq, pbw_weak
from .reports import CheckReport
from .semiring import BasePair, NullPart, SemiringError, SemiringSpec, load_table
from .tensor import free_lie_pair

EXIT = {"pass": 0, "fail": 1, "inconclusive": 2}
STRUCTURAL = (PairFileError, PairError, ConstructionError, KrasnerError, SemiringError, RewriteError,
              FileNotFoundError, ValueError)


class Structural(Exception):
    pass


def emit(rep: CheckReport, out=None):
    out = out or sys.stdout
    for line in rep.lines():
        print(line, file=out)
    for n in rep.notes:
        print(f"# {n}", file=out)
    print(f"# {rep.summary()}", file=out)
    return EXIT[rep.status]


def check_pair(lp: LiePairDef, bound, jacobi_preceq=False) -> CheckReport:
    rep = CheckReport(mode="exhaustive")
    rep.extend(lp.pair.c0_condition(bound))
    rep.extend(check_lie_axioms(lp, bound))
    if jacobi_preceq:
        rep.extend(check_jacobi_preceq(lp, bound))
    return rep


def krasner_model(ks: KrasnerSpec):
    return KrasnerModel(ks.table, ks.G, ks.eps, ks.M, ks.involution)


# -- commands ------------------------------------------------------------------------------


def cmd_check(args):
    obj = load(args.file)
    if isinstance(obj, KrasnerSpec):
        return emit(check_krasner(krasner_model(obj), args.samples, args.seed))
    return emit(check_pair(obj, args.membership_bound, args.jacobi_preceq))


def _base(name, c0=None, eps=None):
    sr = SemiringSpec.named(name)
    if eps is not None:
        return BasePair.from_eps(sr, sr.parse(eps))
    if c0:
        return BasePair(sr, NullPart.principal(sr.parse(c0)))
    return BasePair(sr)


def _ints(s, sr=None):
    toks = [t for t in s.replace(",", " ").split() if t]
    return [sr.parse(t) if sr else int(t) for t in toks]


def _cp_vectors(s, sr):
    """Three scalars a_i mean a_i * b_i; nine values are three vectors, row-major."""
    vals = _ints(s, sr)
    if len(vals) == 3:
        return [tuple(vals[i] if j == i else sr.zero for j in range(3)) for i in range(3)]
    if len(vals) == 9:
        return [tuple(vals[3 * i:3 * i + 3]) for i in range(3)]
    raise Structural("cross-product --c/--d take 3 scalars or 9 values")


def _write(obj, args):
    text = dumps(obj)
    if args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)


def cmd_construct(args):
    fam = args.family
    bound = args.membership_bound
    notes = CheckReport()
    if fam == "krasner":
        if not args.table:
            raise Structural("krasner needs --table")
        R = load_table(args.table)
        inv = f2_transpose(int(round(len(R.add_table) ** 0.5) ** 0.5)) if args.involution == "transpose" else None
        ks = KrasnerSpec(R, tuple(_ints(args.G)), tuple(_ints(args.M)) if args.M else None,
                         int(args.eps) if args.eps is not None else None, inv, R.label or "")
        krasner_model(ks)   # validates G, M and the involution
        _write(ks, args)
        return 0
    base = _base(args.base, args.c0, args.eps if fam in ("classical", "psi-commutator", "involution") else None)
    sr = base.semiring
    if fam == "cross-product":
        if args.random:
            lp, log = random_cross_product(base, args.seed)
            notes.note(f"seed {args.seed}: {log.redraws} redraws")
        elif args.classical:
            lp = classical_cross_product()
        else:
            lp = build_cross_product(base, _cp_vectors(args.c, sr), _cp_vectors(args.d, sr), bound,
                                     allow_degenerate=True)
            if lp.is_degenerate():
                notes.note("L0 = L: every bracket is null (degenerate pair, flagged in the file)")
    elif fam == "classical":
        if not args.kind:
            raise Structural("classical needs a family: sl, so_odd, so_even or sp")
        cp = build_classical(args.kind, args.n, base, sr.parse(args.eps or "-1"), bound)
        notes.extend(cp.closure)
        lp = cp.lie
    elif fam == "filiform":
        ov = {}
        for item in args.override or []:
            head, _, vec = item.partition(":")
            i, j = (int(x) for x in head.split(","))
            ov[i, j] = _ints(vec, sr)
        lp = build_filiform(args.n, base, ov, bound)
    elif fam == "bilinear":
        n = args.n
        vals = _ints(args.table_values or "", sr)
        if len(vals) != n * n * n:
            raise Structural(f"bilinear needs {n ** 3} table values (row-major [b_i b_j]_k)")
        table = [[tuple(vals[(i * n + j) * n:(i * n + j + 1) * n]) for j in range(n)] for i in range(n)]
        lp = build_bilinear_form_pair(base, table, bound=bound)
    elif fam == "involution":
        lp = build_involution_pair(matrix_algebra(base, args.n), sr.parse(args.eps or "1"), bound)
    elif fam == "psi-commutator":
        e = sr.parse(args.eps or "1")
        lp = build_psi_commutator(matrix_algebra(base, args.n, eps=e), NegationSpec.scalar(e), bound)
    elif fam == "abelian":
        lp = abelian_pair(base, args.n)
    elif fam == "free":
        lp = free_lie_pair(base, args.n, args.degree)
    else:
        raise Structural(f"unknown family {fam!r}")
    rep = check_pair(lp, bound)
    _write(lp, args)
    for n in notes.notes:
        print(f"# {n}", file=sys.stderr)
    if notes.failures:
        print(f"# carrier closure: {notes.summary()}", file=sys.stderr)
    print(f"# {rep.summary()}", file=sys.stderr)
    return EXIT[rep.status]


def cmd_double(args):
    lp = load(args.file)
    if isinstance(lp, KrasnerSpec):
        raise Structural("double expects a Lie pair file")
    d = double_lie(lp, args.null_mode)
    rep = check_pair(d, args.membership_bound, jacobi_preceq=True)
    if args.out:
        save(d, args.out)
    code = emit(rep)
    return code


def cmd_pbw(args):
    lp = load(args.file)
    if isinstance(lp, KrasnerSpec):
        raise Structural("pbw expects a Lie pair file")
    D = args.degree
    v = args.variant
    if v in ("weak", "weak_psi"):
        res = pbw_weak(lp, D, bound=args.membership_bound)
    elif v == "preceq":
        res = pbw_preceq(lp, D, bound=args.membership_bound)
    elif v == "eps":
        if args.eps is not None:
            eps = lp.sr.parse(args.eps)
        elif lp.negation is not None and lp.negation.kind == "scalar":
            eps = lp.negation.eps
        else:
            eps = lp.sr.one
        f = loads_map(Path(args.target).read_text(), lp) if args.target else None
        res = pbw_eps(lp, eps, D, f, bound=args.membership_bound)
    else:
        raise Structural(f"unknown variant {v!r}")
    lines = res.presentation.describe()
    if args.out:
        Path(args.out).write_text("\n".join(lines) + "\n")
    code = emit(res.report)
    print(f"injectivity: {res.injectivity}")
    return code


def cmd_catalog(args):
    cat = catalog_low_dim()
    if args.name:
        if args.name not in cat:
            raise Structural(f"unknown catalog entry {args.name!r}; try --list")
        lp = cat[args.name]
        rep = check_pair(lp, args.membership_bound)
        _write(lp, args)
        print(f"# {rep.summary()}", file=sys.stderr)
        return EXIT[rep.status]
    worst = 0
    for name, lp in cat.items():
        rep = check_pair(lp, args.membership_bound)
        print(f"{name} rank={lp.rank} {lp.pair.base.describe()} {rep.status} ({rep.summary()})")
        worst = max(worst, EXIT[rep.status])
    return worst


# -- argument parsing ----------------------------------------------------------------------------


def _globals(p, suppress):
    d = (lambda v: argparse.SUPPRESS) if suppress else (lambda v: v)
    p.add_argument("--membership-bound", type=int, default=d(DEFAULT_BOUND))
    p.add_argument("--degree", type=int, default=d(3))
    p.add_argument("--seed", type=int, default=d(0))
    p.add_argument("--null-mode", choices=NULL_MODES, default=d("sum"))


def build_parser():
    p = argparse.ArgumentParser(prog="tropical-lie", description="Lie pairs over commutative semirings.")
    _globals(p, False)
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("check", help="verify the Lie-pair axioms of a pair file")
    _globals(c, True)
    c.add_argument("file")
    c.add_argument("--jacobi-preceq", action="store_true")
    c.add_argument("--samples", type=int, default=2000, help="set-level samples for Krasner files")
    c.set_defaults(func=cmd_check)

    k = sub.add_parser("construct", help="build a pair and write its file")
    _globals(k, True)
    k.add_argument("family", choices=["cross-product", "classical", "filiform", "bilinear", "involution",
                                      "psi-commutator", "abelian", "free", "krasner"])
    k.add_argument("kind", nargs="?", help="classical family: sl, so_odd, so_even, sp")
    k.add_argument("--base", default="nat")
    k.add_argument("--c0", help="generator of a principal C0")
    k.add_argument("--eps")
    k.add_argument("--n", type=int, default=2)
    k.add_argument("--c", default="0,0,0")
    k.add_argument("--d", default="0,0,0")
    k.add_argument("--random", action="store_true")
    k.add_argument("--classical", action="store_true", help="the integer cross product")
    k.add_argument("--override", action="append", help="filiform entry `i,j:v1,v2,..` (1-based i, j)")
    k.add_argument("--table-values", help="bilinear structure constants, row-major")
    k.add_argument("--table", help="finite table file for krasner")
    k.add_argument("--G", default="")
    k.add_argument("--M")
    k.add_argument("--involution", choices=["transpose"])
    k.add_argument("--out")
    k.set_defaults(func=cmd_construct)

    d = sub.add_parser("double", help="double a pair")
    _globals(d, True)
    d.add_argument("file")
    d.add_argument("--out")
    d.set_defaults(func=cmd_double)

    b = sub.add_parser("pbw", help="truncated enveloping pair")
    _globals(b, True)
    b.add_argument("variant", choices=["weak", "weak_psi", "preceq", "eps"])
    b.add_argument("file")
    b.add_argument("--target", help="map file for the eps variant")
    b.add_argument("--eps")
    b.add_argument("--out", help="write the presentation here")
    b.set_defaults(func=cmd_pbw)

    g = sub.add_parser("catalog", help="list or write catalog pairs")
    _globals(g, True)
    g.add_argument("name", nargs="?")
    g.add_argument("--list", action="store_true")
    g.add_argument("--out")
    g.set_defaults(func=cmd_catalog)
    return p


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (Structural,) + STRUCTURAL as e:
        print(f"error: {e}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
