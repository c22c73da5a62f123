from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from tropical_lie.semiring import (BOTTOM, BasePair, NullPart, SemiringError, SemiringSpec, TableError,
                                   format_table, parse_table, scalar_in_C0, verify_semiring_laws)

NAMES = ["nat", "bool", "maxplus", "qplus", "int"]
F2 = ([[0, 1], [1, 0]], [[0, 0], [0, 1]])


def sr(name):
    return SemiringSpec.named(name)


@pytest.mark.parametrize("name", NAMES)
def test_named_semirings_satisfy_laws(name):
    rep = verify_semiring_laws(sr(name))
    assert rep.ok, rep.lines()


def test_finite_table_exhaustive():
    rep = verify_semiring_laws(SemiringSpec.from_tables(*F2, 0, 1))
    assert rep.ok and rep.mode == "exhaustive"


def test_mutated_table_reports_witness():
    bad = SemiringSpec.from_tables(F2[0], [[0, 0], [1, 1]], 0, 1)
    rep = verify_semiring_laws(bad)
    fails = {e.axiom: e.witness for e in rep.failures}
    assert fails["zero-absorbing"] == "(1, 0)"
    assert "distributive" in fails


def test_table_round_trip():
    spec = SemiringSpec.from_tables(*F2, 0, 1)
    text = format_table(spec)
    again = parse_table([ln for ln in text.splitlines() if ln])
    assert again.add_table == spec.add_table and again.mul_table == spec.mul_table


@pytest.mark.parametrize("add,mul", [([[0, 2], [1, 0]], F2[1]), ([[0, 1]], F2[1]), ([[0, 1], [1]], F2[1])])
def test_bad_tables_rejected(add, mul):
    with pytest.raises(TableError):
        SemiringSpec.from_tables(add, mul, 0, 1)


def test_parse_and_format():
    mp = sr("maxplus")
    assert mp.parse("-inf") is BOTTOM
    assert mp.parse("3/2") == Fraction(3, 2)
    assert mp.format(mp.add(Fraction(1), BOTTOM)) == "1"
    assert mp.mul(Fraction(2), Fraction(-1)) == 1
    with pytest.raises(SemiringError):
        sr("nat").parse("1/2")
    with pytest.raises(SemiringError):
        sr("nat").coerce(-1)
    with pytest.raises(SemiringError):
        sr("qplus").coerce(0.5)


def test_scalar_in_C0():
    nat = sr("nat")
    two = BasePair.from_eps(nat, 1)
    assert scalar_in_C0(two, 4).is_in
    assert scalar_in_C0(two, 3).is_not_in
    assert scalar_in_C0(BasePair(nat), 0).is_in
    assert scalar_in_C0(BasePair(nat), 1).is_not_in
    b = sr("bool")
    assert scalar_in_C0(BasePair(b, NullPart("set", (0, 1))), 1).is_in


def test_set_null_must_be_ideal():
    t = SemiringSpec.from_tables(*F2, 0, 1)
    with pytest.raises(SemiringError):
        BasePair(t, NullPart("set", (1,)))


nats = st.integers(0, 50)
mps = st.one_of(st.just(BOTTOM), st.fractions(min_value=-20, max_value=20, max_denominator=4))


@given(nats, nats, nats)
def test_nat_distributive(a, b, c):
    n = sr("nat")
    assert n.mul(a, n.add(b, c)) == n.add(n.mul(a, b), n.mul(a, c))


@given(mps, mps, mps)
def test_maxplus_distributive_and_idempotent(a, b, c):
    m = sr("maxplus")
    assert m.mul(a, m.add(b, c)) == m.add(m.mul(a, b), m.mul(a, c))
    assert m.add(a, a) == a
    assert m.add(a, m.zero) == a and m.mul(a, m.one) == a
