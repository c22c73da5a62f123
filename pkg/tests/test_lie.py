import pytest
from hypothesis import given, settings, strategies as st

from oracles import axiom_failures
from tropical_lie.constructions import catalog_low_dim
from tropical_lie.lie import (DegeneratePairError, LiePairDef, StructureConstants, adjoint,
                              check_dagger_reversibility, check_jacobi_preceq, check_L0_reversibility,
                              check_L0_symmetric, check_lie_axioms, check_lie_morphism)
from tropical_lie.modules import PairError, make_pair
from tropical_lie.semiring import BasePair, SemiringSpec

NAT = SemiringSpec.named("nat")
CATALOG = catalog_low_dim()


def failure_set(lp):
    split = lp.null.coordinate_parts() is not None
    arity = {"fgen-1": 1, "fgen-2": 2, "fgen-3": 3, "fgen-4": 3, "LieD-f": 3}
    return {(e.axiom, tuple(e.index[:arity[e.axiom]]) if split else tuple(e.index))
            for e in check_lie_axioms(lp).failures}


@pytest.mark.parametrize("name", sorted(CATALOG))
def test_catalog_passes_axioms(name):
    rep = check_lie_axioms(CATALOG[name])
    assert rep.ok, rep.lines()[:5]


def test_bracket_and_adjoint():
    h = CATALOG["dim4-heisenberg"]
    e = [h.basis(i) for i in range(4)]
    assert h.bracket(e[0], e[1]) == (0, 0, 1, 0)
    left, right = adjoint(h, e[0]), adjoint(h, e[0], "right")
    assert left.apply(e[1]) == h.bracket(e[0], e[1])
    assert right.apply(e[1]) == h.bracket(e[1], e[0])
    assert len(left.as_vector()) == 16


def test_jacobi_preceq_and_dagger():
    assert check_jacobi_preceq(CATALOG["dim4-1"]).ok
    bad = CATALOG["dim4-3"]
    assert len(check_jacobi_preceq(bad).failures) == 6
    assert not check_dagger_reversibility(bad).ok
    assert check_dagger_reversibility(CATALOG["J-so3-int"]).ok


def test_L0_symmetry_and_reversibility():
    assert not check_L0_symmetric(CATALOG["dim4-heisenberg"]).ok
    assert check_L0_symmetric(CATALOG["dim4-1"]).ok
    assert check_L0_reversibility(CATALOG["dim4-heisenberg"]).ok


def test_morphisms():
    h = CATALOG["dim4-heisenberg"]
    ident = [h.basis(i) for i in range(4)]
    assert check_lie_morphism(h, h, ident).ok
    swap = [ident[1], ident[0], ident[2], ident[3]]
    assert check_lie_morphism(h, h, swap).failures[0].index == (0, 1)
    with pytest.raises(PairError):
        check_lie_morphism(h, h, ident[:3])


def test_degenerate_refused_unless_allowed():
    p = make_pair(BasePair(NAT), 1, [(1,)])
    sc = StructureConstants(NAT, 1, [[(0,)]])
    with pytest.raises(DegeneratePairError):
        LiePairDef(p, sc)
    assert LiePairDef(p, sc, meta={"allow_degenerate": True}).is_degenerate()


def test_structure_constant_shape():
    with pytest.raises(PairError):
        StructureConstants(NAT, 2, [[(0, 0)]])


def _random_pair(table, null):
    p = make_pair(BasePair(NAT), 2, null, check_c0=False)
    return LiePairDef(p, StructureConstants(NAT, 2, table))


entry = st.tuples(st.integers(0, 2), st.integers(0, 2))
tables = st.lists(st.lists(entry, min_size=2, max_size=2), min_size=2, max_size=2)
nulls = st.lists(st.tuples(st.integers(0, 2), st.integers(0, 2)), max_size=2)


@settings(max_examples=120, deadline=None)
@given(tables, nulls)
def test_checker_matches_oracle(table, null):
    try:
        lp = _random_pair(table, null)
    except DegeneratePairError:
        return
    assert failure_set(lp) == axiom_failures(lp)


@settings(max_examples=60, deadline=None)
@given(tables, nulls)
def test_reflected_bracket_swaps_fgen3_and_fgen4(table, null):
    try:
        lp = _random_pair(table, null)
    except DegeneratePairError:
        return
    refl = _random_pair([[table[j][i] for j in range(2)] for i in range(2)], null)
    f3 = {i for a, i in axiom_failures(lp) if a == "fgen-3"}
    f4 = {i for a, i in axiom_failures(refl) if a == "fgen-4"}
    assert f3 == f4
