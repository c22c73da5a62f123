import pytest
from hypothesis import given, settings, strategies as st

from tropical_lie.constructions import (DegreeConstraintError, build_bilinear_form_pair, build_classical,
                                        build_cross_product, build_filiform, build_involution_pair,
                                        build_pre_lie, build_psi_commutator, catalog_low_dim,
                                        check_involution, check_j_grading, check_leibniz,
                                        classical_cross_product, matrix_algebra, random_cross_product)
from tropical_lie.krasner import KrasnerError, KrasnerModel, build_krasner, matrix_table_f2
from tropical_lie.lie import DegeneratePairError, check_lie_axioms
from tropical_lie.modules import NegationSpec, PreNegationError
from tropical_lie.semiring import BasePair, SemiringSpec

NAT, INT = SemiringSpec.named("nat"), SemiringSpec.named("int")
TWO = BasePair.from_eps(NAT, 1)       # (N, 2N)
ZNEG = BasePair.from_eps(INT, -1)     # (Z, 0)
PSI = NegationSpec.scalar(1)


def test_psi_commutator_examples():
    alg = matrix_algebra(TWO, 2)
    lp = build_psi_commutator(alg, PSI)
    e00, e01, e10 = (1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0)
    assert lp.bracket(e00, e01) == e01
    assert lp.bracket(e01, e10) == (1, 0, 0, 1)
    assert lp.meta["strong"] is True
    assert check_leibniz(alg, PSI, [(e00, e01, e10)]).ok


def test_psi_commutator_needs_pre_negation():
    with pytest.raises(PreNegationError):
        build_psi_commutator(matrix_algebra(BasePair(NAT), 2), PSI)


def test_pre_lie_and_involution():
    alg = matrix_algebra(TWO, 2)
    assert check_lie_axioms(build_pre_lie(alg, PSI)).ok
    assert check_involution(alg).ok
    inv = build_involution_pair(alg)
    assert inv.meta["degenerate"] and inv.is_degenerate()


def test_classical_sl2_over_integers():
    cp = build_classical("sl", 2, ZNEG, -1)
    assert cp.restricted and cp.lie.rank == 3 and cp.closure.ok
    assert check_lie_axioms(cp.lie).ok
    for v in cp.carrier:
        assert v[0] + v[3] == 0


def test_classical_sl2_over_naturals_is_ambient():
    cp = build_classical("sl", 2, TWO, 1)
    assert not cp.restricted and cp.closure.ok
    for v in cp.carrier:
        assert (v[0] + v[3]) % 2 == 0


@pytest.mark.parametrize("family,rank", [("so_odd", 3), ("so_even", 1), ("sp", 3)])
def test_other_classical_families(family, rank):
    cp = build_classical(family, 1, ZNEG, -1)
    assert cp.lie.rank == rank and cp.closure.ok and check_lie_axioms(cp.lie).ok


def test_classical_cross_product():
    lp = classical_cross_product()
    assert lp.bracket((1, 0, 0), (0, 1, 0)) == (0, 0, 1)
    assert lp.bracket((0, 1, 0), (1, 0, 0)) == (0, 0, -1)
    assert check_lie_axioms(lp).ok


def test_cross_product_degenerate_flag():
    z = [(0, 0, 0)] * 3
    with pytest.raises(DegeneratePairError):
        build_cross_product(BasePair(NAT), z, z)
    lp = build_cross_product(BasePair(NAT), z, z, allow_degenerate=True)
    assert lp.is_degenerate()


@settings(max_examples=15, deadline=None)
@given(st.integers(0, 10_000))
def test_random_cross_products_are_lie_pairs(seed):
    lp, log = random_cross_product(TWO, seed)
    assert lp.meta["saturated"] and check_lie_axioms(lp).ok
    again, _ = random_cross_product(TWO, seed)
    assert again.sc == lp.sc


def test_filiform():
    f = build_filiform(4, TWO)
    e = [f.basis(i) for i in range(4)]
    assert f.bracket(e[0], e[1]) == e[2] and f.bracket(e[0], e[3]) == (0, 0, 0, 0)
    assert check_lie_axioms(f).ok
    with pytest.raises(DegreeConstraintError):
        build_filiform(4, TWO, {(2, 3): (1, 0, 0, 0)})


def test_bilinear_form_pair():
    lp = build_bilinear_form_pair(TWO, [[(0, 0), (1, 0)], [(1, 0), (0, 0)]])
    assert lp.null.generators == ((2, 0), (0, 2))
    assert check_lie_axioms(lp).ok


@pytest.mark.parametrize("name,lp", sorted(catalog_low_dim().items()))
def test_catalog_entries(name, lp):
    assert check_lie_axioms(lp).ok


def test_j_grading():
    assert check_j_grading(ZNEG, [-1, 0, 1]).ok
    assert check_j_grading(TWO, [0, 1, 2]).ok


F2 = SemiringSpec.from_tables([[0, 1], [1, 0]], [[0, 0], [0, 1]], 0, 1)


def test_krasner_over_f2():
    m, rep = build_krasner(F2, [1], samples=200)
    assert rep.ok
    assert m.is_null(m.mask([0])) and not m.is_null(m.mask([1]))


def test_krasner_rejects_bad_group():
    with pytest.raises(KrasnerError, match="no inverse"):
        KrasnerModel(matrix_table_f2(2), (0,))
