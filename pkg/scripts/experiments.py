"""Small experiment runners.

    python3 scripts/experiments.py cross-sweep --seeds 50
    python3 scripts/experiments.py free-pair --rank 3 --degree 3
    python3 scripts/experiments.py krasner --samples 2000
    python3 scripts/experiments.py literal-surpassing
"""
from __future__ import annotations

import argparse
import time
from dataclasses import dataclass

from tropical_lie.constructions import build_filiform, random_cross_product
from tropical_lie.doubling import double_lie
from tropical_lie.krasner import build_krasner, matrix_table_f2
from tropical_lie.lie import check_jacobi_preceq, check_lie_axioms
from tropical_lie.pbw import pbw_eps
from tropical_lie.semiring import BasePair, SemiringSpec
from tropical_lie.tensor import free_lie_pair

NAT = SemiringSpec.named("nat")


@dataclass
class SweepConfig:
    seeds: int = 50
    hi: int = 2
    c0: int = 2


def cross_sweep(cfg: SweepConfig):
    """Random cross products over (N, c0 N): redraw counts, axiom and doubling verdicts."""
    base = BasePair.from_eps(NAT, cfg.c0 - 1)
    redraws = bad = bad_double = jp = 0
    for seed in range(cfg.seeds):
        lp, log = random_cross_product(base, seed, cfg.hi)
        redraws += log.redraws
        bad += not check_lie_axioms(lp).ok
        bad_double += not check_lie_axioms(double_lie(lp)).ok
        jp += check_jacobi_preceq(lp).ok
    print(f"{cfg.seeds} draws, {redraws} redraws, {bad} axiom failures, "
          f"{bad_double} failures after doubling, {jp} satisfy jacobi-preceq")


@dataclass
class FreeConfig:
    rank: int = 2
    degree: int = 3


def free_pair(cfg: FreeConfig):
    """Axiom failures of the truncated free pair with and without the extra null generators."""
    for paper_only in (True, False):
        t = time.time()
        lp = free_lie_pair(BasePair(NAT), cfg.rank, cfg.degree, paper_only=paper_only)
        rep = check_lie_axioms(lp)
        label = "basic generators" if paper_only else "with reflected Jacobi and ideal closure"
        print(f"{label}: rank {lp.rank}, {len(rep.failures)} failures, {time.time() - t:.1f}s")


@dataclass
class KrasnerConfig:
    samples: int = 2000
    seed: int = 0


def krasner(cfg: KrasnerConfig):
    t = time.time()
    _, rep = build_krasner(matrix_table_f2(2), [9], samples=cfg.samples, seed=cfg.seed)
    print(f"M2(F2), G = {{1}}: {rep.summary()} in {time.time() - t:.1f}s")


def literal_surpassing(_=None):
    """Certified versus literal middle term on the eps = 1 filiform pair."""
    lp = build_filiform(3, BasePair.from_eps(NAT, 1), {(2, 1): (0, 0, 1)})
    rep = pbw_eps(lp, 1, 3).report
    for axiom in ("surpassing-reduction", "surpassing-literal"):
        es = rep.by_axiom(axiom)
        print(f"{axiom}: {sum(e.status == 'pass' for e in es)}/{len(es)} pass")
    for e in rep.by_axiom("surpassing-literal"):
        if e.status != "pass":
            print("  " + e.line(lp.names))


def main(argv=None):
    p = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    sub = p.add_subparsers(dest="cmd", required=True)
    s = sub.add_parser("cross-sweep")
    s.add_argument("--seeds", type=int, default=SweepConfig.seeds)
    s.add_argument("--hi", type=int, default=SweepConfig.hi)
    s.add_argument("--c0", type=int, default=SweepConfig.c0)
    f = sub.add_parser("free-pair")
    f.add_argument("--rank", type=int, default=FreeConfig.rank)
    f.add_argument("--degree", type=int, default=FreeConfig.degree)
    k = sub.add_parser("krasner")
    k.add_argument("--samples", type=int, default=KrasnerConfig.samples)
    k.add_argument("--seed", type=int, default=KrasnerConfig.seed)
    sub.add_parser("literal-surpassing")
    a = p.parse_args(argv)
    if a.cmd == "cross-sweep":
        cross_sweep(SweepConfig(a.seeds, a.hi, a.c0))
    elif a.cmd == "free-pair":
        free_pair(FreeConfig(a.rank, a.degree))
    elif a.cmd == "krasner":
        krasner(KrasnerConfig(a.samples, a.seed))
    else:
        literal_surpassing()


if __name__ == "__main__":
    main()
