from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from oracles import brute_member_nat
from tropical_lie.membership import BOTTOM, combine, membership, surpasses
from tropical_lie.modules import (NegationSpec, PairError, Submodule, direct_product_pair, make_pair,
                                  verify_pre_negation, weak_property_N)
from tropical_lie.pairfile import load
from tropical_lie.semiring import BasePair, SemiringSpec

FIX = __import__("pathlib").Path(__file__).parent / "fixtures"
NAT, MP, BOOL, QP, INT = (SemiringSpec.named(n) for n in ("nat", "maxplus", "bool", "qplus", "int"))
F = Fraction


def test_nat_membership_examples():
    gens = [(2, 0), (0, 2)]
    assert membership(NAT, gens, (1, 1)).is_not_in
    v = membership(NAT, gens, (4, 2))
    assert v.is_in and combine(NAT, gens, v.witness, 2) == (4, 2)
    assert membership(NAT, gens, (0, 0)).is_in


def test_maxplus_membership_witness():
    gens = [(F(0), F(1)), (F(1), F(0))]
    v = membership(MP, gens, (F(1), F(1)))
    assert v.is_in and v.witness == (F(0), F(0))
    assert membership(MP, [(F(0), BOTTOM)], (BOTTOM, F(3))).is_not_in


def test_other_families():
    assert membership(INT, [(2, 4)], (1, 2)).is_not_in
    assert membership(INT, [(2, 4)], (-4, -8)).witness == (-2,)
    assert membership(QP, [(F(1), F(2))], (F(1, 2), F(1))).is_in
    assert membership(BOOL, [(1, 0), (1, 1)], (0, 1)).is_not_in
    assert membership(BOOL, [(1, 0), (0, 1)], (1, 1)).is_in


def test_qplus_support_budget_gives_unknown():
    lp = load(FIX / "qplus-exhaust.pair")
    v = lp.null.membership((F(1, 3), F(1, 5)), bound=4)
    assert v.is_unknown and "bound" in v.reason


def test_verdict_is_not_a_bool():
    with pytest.raises(TypeError):
        bool(membership(NAT, [], (0,)))


def test_surpassing():
    gens = [(1, 1)]
    assert surpasses(NAT, gens, (2, 1), (3, 2)).is_in
    assert surpasses(NAT, gens, (2, 1), (3, 1)).is_not_in
    assert surpasses(MP, [(F(0), F(0))], (F(-1), F(0)), (F(0), F(0))).is_in


def test_make_pair_checks_c0():
    two = BasePair.from_eps(NAT, 1)
    with pytest.raises(PairError):
        make_pair(two, 2, [(2, 0)])
    p = make_pair(two, 2, [(2, 0), (0, 2)])
    assert p.c0_condition().ok


def test_pre_negation():
    p = make_pair(BasePair.from_eps(NAT, 1), 2, [(2, 0), (0, 2)])
    assert verify_pre_negation(p, NegationSpec.scalar(1)).ok
    plain = make_pair(BasePair(NAT), 2, [])
    assert len(verify_pre_negation(plain, NegationSpec.scalar(1)).failures) == 2
    assert NegationSpec.switch().is_order_two(NAT, 4)


def test_weak_property_N():
    p = make_pair(BasePair.from_eps(NAT, 1), 2, [(2, 0), (0, 2)])
    rep = weak_property_N(p)
    assert rep.ok and [e.witness for e in rep.entries] == ["b0", "b1"]
    assert not weak_property_N(make_pair(BasePair(NAT), 1, [])).ok


def test_direct_product():
    p = make_pair(BasePair(NAT), 1, [(3,)])
    q = make_pair(BasePair(NAT), 2, [(1, 1)])
    d = direct_product_pair(p, q)
    assert d.rank == 3 and d.null.generators == ((3, 0, 0), (0, 1, 1))


def test_submodule_drops_zero_and_duplicates():
    s = Submodule(NAT, 2, ((0, 0), (1, 2), (1, 2)))
    assert s.generators == ((1, 2),)
    with pytest.raises(PairError):
        Submodule(NAT, 2, ((1,),))


small = st.lists(st.tuples(st.integers(0, 3), st.integers(0, 3)), max_size=3)
vec = st.tuples(st.integers(0, 6), st.integers(0, 6))


@settings(max_examples=150, deadline=None)
@given(small, vec)
def test_nat_membership_matches_oracle(gens, v):
    verdict = membership(NAT, gens, v)
    assert not verdict.is_unknown
    assert verdict.is_in == brute_member_nat(gens, v)
    if verdict.is_in:
        assert combine(NAT, gens, verdict.witness, 2) == v


@settings(max_examples=100, deadline=None)
@given(small, vec, vec, vec)
def test_surpassing_reflexive_and_transitive(gens, a, z1, z2):
    assert surpasses(NAT, gens, a, a).is_in
    g = [tuple(x) for x in gens]
    b = tuple(x + y for x, y in zip(a, combine(NAT, g, z1[:len(g)], 2)))
    c = tuple(x + y for x, y in zip(b, combine(NAT, g, z2[:len(g)], 2)))
    assert surpasses(NAT, g, a, b).is_in and surpasses(NAT, g, b, c).is_in
    assert surpasses(NAT, g, a, c).is_in
