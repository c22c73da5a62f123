"""Regenerate tests/fixtures: passing pairs, single-constant mutations, the Q+ exhaustion pair,
map files for the eps enveloping pair and the Krasner table."""
from __future__ import annotations

import json
from fractions import Fraction
from pathlib import Path

from tropical_lie.constructions import (build_filiform, catalog_low_dim, classical_cross_product,
                                        matrix_algebra)
from tropical_lie.krasner import matrix_table_f2
from tropical_lie.lie import LiePairDef, StructureConstants
from tropical_lie.modules import PairDef, Submodule
from tropical_lie.pairfile import KrasnerSpec, dumps, dumps_map
from tropical_lie.pbw import TargetMap
from tropical_lie.semiring import BasePair, SemiringSpec, format_table
from tropical_lie.tensor import free_lie_pair

OUT = Path(__file__).resolve().parent.parent / "tests" / "fixtures"
NAT = SemiringSpec.named("nat")

# (fixture name, source pair, i, j, k, new value): [b_i b_j] gets coefficient `new` on b_k
MUTATIONS = [
    ("mut01-filiform-c0zero", "filiform-nat", 0, 0, 0, 1),
    ("mut02-filiform-2n", "filiform-nat2", 0, 1, 0, 1),
    ("mut03-heisenberg", "dim4-heisenberg", 0, 1, 0, 1),
    ("mut04-dim4-1", "dim4-1", 0, 0, 1, 1),
    ("mut05-cy-c", "dim2-Cy-c", 0, 1, 0, 1),
    ("mut06-classical-int", "dim2-classical-int", 0, 1, 1, 1),
    ("mut07-j-so3", "J-so3-int", 0, 1, 2, 2),
    ("mut08-cross-int", "cross-int", 0, 1, 2, 2),
    ("mut09-mu-nu-bool", "dim2-mu-nu-bool", 0, 0, 0, 1),
    ("mut10-mu-nu-qplus", "dim2-mu-nu-qplus", 0, 1, 1, Fraction(1)),
]


def sources():
    cat = catalog_low_dim()
    src = dict(cat)
    src["filiform-nat"] = build_filiform(3, BasePair(NAT))
    src["filiform-nat2"] = build_filiform(3, BasePair.from_eps(NAT, 1))
    src["cross-int"] = classical_cross_product()
    return src


def mutate(lp: LiePairDef, i, j, k, new) -> LiePairDef:
    v = list(lp.sc.entry(i, j))
    v[k] = lp.sr.coerce(new)
    sc = lp.sc.with_entry(i, j, v)
    return LiePairDef(lp.pair, sc, lp.flags, lp.negation, dict(lp.meta))


def qplus_exhaustion() -> LiePairDef:
    """Rank 2 over Q+ with [b0 b1] = (1, 2) and 40 null generators (k, 41 - k): (1, 2) lies in
    their cone but every support search runs past the default bound."""
    Q = SemiringSpec.named("qplus")
    gens = tuple((Fraction(k), Fraction(41 - k)) for k in range(1, 41))
    pair = PairDef(BasePair(Q), 2, Submodule(Q, 2, gens), ("b0", "b1"))
    sc = StructureConstants.from_dict(Q, 2, {(0, 1): (1, 2)})
    return LiePairDef(pair, sc, frozenset({"bilinear"}), None, {"family": "qplus-exhaustion"})


def eps_filiform():
    """Filiform over (N, 2N) with [x2 x1] = x3, an eps-Lie pair for eps = 1."""
    return build_filiform(3, BasePair.from_eps(NAT, 1), {(2, 1): (0, 0, 1)})


def filiform_maps():
    lp = eps_filiform()
    alg = matrix_algebra(lp.pair.base, 3, eps=1)
    e = lambda a, b: tuple(1 if m == 3 * a + b else 0 for m in range(9))
    good = TargetMap(alg, [e(0, 1), e(1, 2), e(0, 2)])
    bad = TargetMap(alg, [e(0, 1), e(1, 2), e(0, 1)])
    return lp, good, bad


def main():
    OUT.mkdir(parents=True, exist_ok=True)
    src = sources()
    passing = {
        "filiform-nat2": src["filiform-nat2"],
        "filiform-nat": src["filiform-nat"],
        "filiform-eps1": eps_filiform(),
        "heisenberg": src["dim4-heisenberg"],
        "abelian2-nat": src["dim2-abelian-nat"],
        "cross-int": src["cross-int"],
        "free2-nat-d3": free_lie_pair(BasePair(NAT), 2, 3),
    }
    for name, lp in passing.items():
        (OUT / f"{name}.pair").write_text(dumps(lp))
    manifest = []
    for name, s, i, j, k, new in MUTATIONS:
        lp = src[s]
        old = lp.sc.entry(i, j)[k]
        (OUT / f"{name}.pair").write_text(dumps(mutate(lp, i, j, k, new)))
        manifest.append({"file": f"{name}.pair", "source": s, "entry": [i, j, k],
                         "old": lp.sr.format(old), "new": lp.sr.format(lp.sr.coerce(new))})
    (OUT / "mutations.json").write_text(json.dumps(manifest, indent=1) + "\n")
    (OUT / "qplus-exhaust.pair").write_text(dumps(qplus_exhaustion()))
    lp, good, bad = filiform_maps()
    (OUT / "f-good.map").write_text(dumps_map(good, 1, 3))
    (OUT / "f-bad.map").write_text(dumps_map(bad, 1, 3))
    R = matrix_table_f2(2)
    (OUT / "f2m2.tbl").write_text(format_table(R))
    # index 9 is the identity matrix in the M2(F2) table
    (OUT / "krasner-f2m2.pair").write_text(dumps(KrasnerSpec(R, (9,), label=R.label or "f2m2")))
    print(f"wrote {len(list(OUT.iterdir()))} files to {OUT}")


if __name__ == "__main__":
    main()
