import pytest
from hypothesis import given

from pervfrith import pervin as pv
from pervfrith.catalog import B4, C2, C3, INDISC, P3, POINT, SIER
from pervfrith.order import InvariantViolation, SubsetFamily
from strategies import pervin_spaces


def test_family_must_contain_the_empty_set():
    with pytest.raises(InvariantViolation, match="empty set"):
        pv.PervinSpace(("a", "b"), SubsetFamily(2, (0b01, 0b11)))


def test_family_must_be_union_closed():
    with pytest.raises(InvariantViolation, match="union"):
        pv.PervinSpace(("a", "b", "c"), SubsetFamily(3, (0, 0b001, 0b010, 0b111)))


def test_symmetrization():
    assert pv.symmetrize(SIER()).sets == (0, 1, 2, 3)
    assert len(pv.symmetrize(P3()).sets) == 8


def test_specialization_of_sierpinski():
    spec = pv.specialization(SIER())
    assert spec.leq(1, 0) and not spec.leq(0, 1)


def test_specialization_of_p3_is_a_chain():
    spec = pv.specialization(P3())
    assert spec.leq(2, 1) and spec.leq(1, 0) and not spec.leq(0, 1)


def test_separation_axioms():
    assert pv.is_T0(SIER()) and pv.is_TD(SIER())
    assert not pv.is_T0(INDISC()) and not pv.is_TD(INDISC())


def test_cauchy_filters_of_sierpinski():
    fs = pv.cauchy_filters(SIER())
    # principal filters on {a} and on {b}
    assert [F.generator for F in fs] == [0b01, 0b10]
    assert all(any(pv.converges(F, x) for x in range(2)) for F in fs)
    assert pv.is_cauchy_complete(SIER())


def test_cauchy_filters_of_indiscrete_space():
    fs = pv.cauchy_filters(INDISC())
    assert [F.generator for F in fs] == [0b01, 0b10, 0b11]
    assert pv.is_cauchy_complete(INDISC())


def test_neighborhood_map():
    n = pv.neighborhood_map(SIER())
    assert pv.is_iso(n)
    assert len(set(pv.neighborhood_map(INDISC()).map)) == 1
    assert pv.is_iso(pv.neighborhood_map(P3()))


def test_prime_filter_spaces():
    assert pv.pf_space(C2()).size == 1
    assert pv.find_pervin_iso(pv.pf_space(C3()), SIER()) is not None
    Q = pv.pf_space(B4())
    assert Q.size == 2 and len(Q.sets) == 4


def test_strongly_exact_examples():
    for P in (SIER(), P3(), POINT()):
        assert pv.is_strongly_exact(P)
        assert pv.open_intersection_closure(P) == P.family


def test_restriction_to_a_point_is_extremal_mono_not_epi():
    sub = pv.PervinSpace.of(["a"], [[], ["a"]])
    kind = pv.classify_map(pv.PervinMap(sub, SIER(), (0,)))
    assert kind.extremal_mono and not kind.epi and not kind.iso


@pytest.mark.parametrize("P", [SIER(), P3(), POINT()], ids=repr)
def test_char_report_all_true(P):
    rep = pv.theorem_char_report(P)
    assert rep.all_true
    assert rep.witnesses[4] is not None and rep.witnesses[5] is not None


def test_char_report_rejects_non_t0():
    with pytest.raises(pv.NotT0):
        pv.theorem_char_report(INDISC())


def test_char_report_search_counts_on_sierpinski():
    # frozen from the bounded search at its default bound
    rep = pv.theorem_char_report(SIER())
    assert (rep.stats[2].candidates, rep.stats[2].qualifying) == (20, 2)
    assert (rep.stats[3].candidates, rep.stats[3].qualifying) == (6, 0)


@pytest.mark.parametrize("P", [SIER(), P3(), POINT()], ids=repr)
def test_banaschewski_pultr_agrees(P):
    r = pv.banaschewski_pultr_check(P, 3)
    assert r.agrees and r.complete_side and r.td_side


def test_banaschewski_pultr_needs_t0():
    with pytest.raises(pv.NotT0):
        pv.banaschewski_pultr_check(INDISC(), 3)


# Pervin spaces up to isomorphism, frozen from the enumeration oracle
SPACE_COUNTS = {0: (1, 1), 1: (1, 1), 2: (3, 2), 3: (9, 5), 4: (33, 16)}


@pytest.mark.parametrize("n", sorted(SPACE_COUNTS))
def test_pervin_space_counts(n):
    total = sum(1 for _ in pv.pervin_spaces(n))
    t0 = sum(1 for _ in pv.pervin_spaces(n, t0_only=True))
    assert (total, t0) == SPACE_COUNTS[n]


@given(pervin_spaces())
def test_td_conditions_coincide(P):
    assert len(set(pv.td_conditions(P))) == 1


@given(pervin_spaces())
def test_finite_spaces_are_cauchy_complete(P):
    assert pv.is_cauchy_complete(P)


@given(pervin_spaces())
def test_symmetrization_is_boolean_and_contains_family(P):
    S = pv.symmetrize(P)
    assert S.family.is_boolean()
    assert set(P.sets) <= set(S.sets)


@given(pervin_spaces())
def test_neighborhood_map_is_iso_exactly_on_t0(P):
    assert pv.is_iso(pv.neighborhood_map(P)) == pv.is_T0(P)


@given(pervin_spaces())
def test_lperv_of_pf_space_recovers_family(P):
    # pf of the family lattice is the T0 reflection
    Q = pv.pf_space(pv.lperv(P))
    assert pv.is_T0(Q)
    assert len(Q.sets) == len(P.sets)
    assert Q.size == len({pv.neighborhood_map(P).map[x] for x in range(P.size)})
