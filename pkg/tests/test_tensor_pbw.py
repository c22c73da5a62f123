from pathlib import Path

import pytest
from hypothesis import given, strategies as st

from tropical_lie.constructions import build_filiform, build_psi_commutator, catalog_low_dim, matrix_algebra
from tropical_lie.lie import check_lie_axioms
from tropical_lie.modules import NegationSpec, make_pair
from tropical_lie.pairfile import load
from tropical_lie.pbw import (check_lie_subpair, check_lzs, free_preceq_lie, parity_refutes, pbw_eps,
                              pbw_preceq, pbw_weak, surpassing_certificate, zero_divisor_free)
from tropical_lie.semiring import BasePair, SemiringSpec
from tropical_lie.tensor import ASSOC, NONASSOC, Tensor, free_lie_null, free_lie_pair, tensor_mul

FIX = Path(__file__).parent / "fixtures"
NAT, INT = SemiringSpec.named("nat"), SemiringSpec.named("int")
F2 = SemiringSpec.from_tables([[0, 1], [1, 0]], [[0, 0], [0, 1]], 0, 1)


def test_tensor_products():
    a = Tensor.word(NAT, (0,), ASSOC, 3, 2)
    b = Tensor.word(NAT, (1,), ASSOC, 3, 3)
    assert (a * b).terms == {(0, 1): 6}
    x = Tensor.word(NAT, 0, NONASSOC, 2)
    cube = tensor_mul(tensor_mul(x, x), x)
    assert cube.is_zero() and cube.overflow == {((0, 0), 0): 1}


words = st.lists(st.integers(0, 2), min_size=1, max_size=2).map(tuple)


@given(words, words, words)
def test_assoc_product_is_associative(u, v, w):
    U, V, W = (Tensor.word(NAT, t, ASSOC, 6) for t in (u, v, w))
    assert (U * V) * W == U * (V * W)


def test_free_lie_null_sizes():
    V = make_pair(BasePair(NAT), 2)
    assert len(free_lie_null(V, 2).null.generators) == 3
    d3 = free_lie_null(V, 3)
    assert d3.module.rank == 22
    assert set(free_lie_null(V, 3, paper_only=True).null.generators) <= set(d3.null.generators)
    with pytest.raises(ValueError):
        free_lie_null(V, 0)


def test_free_lie_pair_needs_extra_generators():
    assert check_lie_axioms(free_lie_pair(BasePair(NAT), 2, 3)).ok
    assert len(check_lie_axioms(free_lie_pair(BasePair(NAT), 2, 3, paper_only=True)).failures) == 20


def test_free_preceq_lie():
    _, rep = free_preceq_lie(2, 3)
    assert rep.ok
    h = catalog_low_dim()["dim4-1"]
    _, rep = free_preceq_lie(2, 3, target=h, images=[h.basis(0), h.basis(1)])
    assert rep.ok


def test_lzs_and_zero_divisors():
    assert check_lzs(NAT) == (True, None)
    assert check_lzs(INT) == (False, (1, -1))
    assert check_lzs(F2) == (False, (1, 1))
    assert zero_divisor_free(F2) == (True, None)


def test_pbw_weak_and_preceq_on_abelian():
    ab = load(FIX / "abelian2-nat.pair")
    r = pbw_weak(ab, 3)
    assert r.report.ok and r.injectivity == "established (LZS)"
    r = pbw_preceq(ab, 3)
    assert r.report.ok and r.injectivity == "established (LZS)"


def test_pbw_eps_certificates():
    fe = load(FIX / "filiform-eps1.pair")
    rep = pbw_eps(fe, 1, 3).report
    assert all(e.status == "pass" for e in rep.by_axiom("surpassing-reduction"))
    lit = [e for e in rep.by_axiom("surpassing-literal") if e.status != "pass"]
    assert len(lit) == 8 and all(e.status == "fail" and "mod 2" in e.witness for e in lit)
    ok, _, _ = surpassing_certificate(fe, 1, 0, 1, 0)
    assert ok


def test_parity_refutes():
    fe = build_filiform(3, BasePair.from_eps(NAT, 1), {(2, 1): (0, 0, 1)})
    a = Tensor.word(NAT, (0, 1, 0), ASSOC, 3)
    b = Tensor.word(NAT, (0, 0, 1), ASSOC, 3)
    assert parity_refutes(fe, 1, a, b) == 2
    assert parity_refutes(fe, 1, a, a) is None
    assert parity_refutes(fe, 0, a, b) is None


@pytest.mark.parametrize("kind", ["weak_psi", "preceq", "psi"])
def test_subpair_of_own_commutator(kind):
    alg = matrix_algebra(BasePair.from_eps(NAT, 1), 2)
    lp = build_psi_commutator(alg, NegationSpec.scalar(1))
    assert check_lie_subpair(alg, lp, kind).ok


def test_subpair_rejects_unknown_kind():
    alg = matrix_algebra(BasePair.from_eps(NAT, 1), 2)
    lp = build_psi_commutator(alg, NegationSpec.scalar(1))
    with pytest.raises(ValueError):
        check_lie_subpair(alg, lp, "strong")
