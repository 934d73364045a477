import pytest
from hypothesis import given

from pervfrith import frith as fr
from pervfrith import pervin as pv
from pervfrith.catalog import B4, C2, C3, POINT, SIER
from pervfrith.order import InvariantViolation, LatticeHom, are_isomorphic, bits, mask_of
from strategies import frith_pairs, pervin_spaces

F2, F3, FB = (fr.FrithPair.full(L) for L in (C2(), C3(), B4()))
# (B4, {0, {a}, 1}): S is a bounded sublattice that does not join-generate B4
PRE = fr.FrithPair(B4(), mask_of([0, B4().index("{a}"), B4().top]))


def test_sub_must_contain_bounds():
    with pytest.raises(InvariantViolation):
        fr.FrithPair(C3(), mask_of([1, 2]))


def test_hom_classification():
    assert fr.classify_hom(fr.identity_frith(F3)).iso
    quot = fr.classify_hom(fr.FrithHom(F3, F2, LatticeHom(C3(), C2(), (0, 0, 1))))
    assert quot.extremal_epi and not quot.mono
    emb = fr.classify_hom(fr.FrithHom(F2, F3, LatticeHom(C2(), C3(), (0, 2))))
    assert emb.mono and not emb.extremal_epi


def test_points():
    assert fr.pt_functor(F2).size == 1
    assert pv.find_pervin_iso(fr.pt_functor(F3), SIER()) is not None
    Q = fr.pt_functor(FB)
    assert Q.size == 2 and len(Q.sets) == 4


def test_opens():
    O = fr.omega_functor(SIER())
    assert O.lattice.size == 3 and O.is_frith
    assert are_isomorphic(fr.omega_functor(POINT()).lattice, C2())


def test_hom_set_bijection_for_sierpinski():
    # 3 Pervin maps SIER -> SIER and 3 bounded homs C3 -> C3, matched by the adjunction
    r = fr.dual_adjunction_check(SIER(), F3)
    assert (r.perv_side, r.frame_side) == (3, 3)
    assert r.passed


def test_fsym():
    s = fr.fsym(F3)
    assert are_isomorphic(s.pair.lattice, B4()) and s.pair.is_frith
    assert fr.fsym(F2).pair.lattice.size == 2
    # frozen by the closure oracle
    sb = fr.fsym(FB).pair
    assert sb.lattice.size == 4 and sb.sub.bit_count() == 4


def test_completion_of_pre_frith_pair():
    C, h = fr.completion(PRE)
    assert C.lattice.size == 3 and C.is_frith
    assert not h.hom.is_surjective()


@pytest.mark.parametrize("F, expected", [(F3, True), (F2, True), (PRE, False)], ids=repr)
def test_completeness_routes_agree(F, expected):
    assert fr.is_complete(F) == fr.is_complete_by_coherence(F) == fr.is_complete_by_ideals(F) == expected


def test_strongly_exact_meets_of_c3():
    assert fr.strongly_exact_meets(F3) == F3.sub


def test_scott_report_on_c3():
    r = fr.scott_strong_exact_check(C3())
    assert (r.filters, r.all_scott_open, r.closed_under_sem) == (2, True, True)


def test_sublocale_of_c3_bounds_misses_middle():
    L = C3()
    K = fr.generated_sublocale(L, [0, 2])
    assert sorted(bits(K)) == [0, 2]
    assert not fr.is_locale_based(fr.FrithPair(L, mask_of([0, 2])))


def test_pre_frith_pair_is_locale_based():
    # {a} -> 0 = {b} lands in the closure
    assert sorted(bits(fr.generated_sublocale(B4(), bits(PRE.sub)))) == [0, 1, 2, 3]
    assert fr.is_locale_based(PRE)


@pytest.mark.parametrize("F", [F3, F2], ids=repr)
def test_frame_banaschewski_on_frith_frames(F):
    r = fr.frith_banaschewski_check(F, 4)
    assert r.agrees and r.complete_side and r.locale_based_side


def test_frame_banaschewski_on_pre_frith_pair_is_consistent_with_sublocale():
    r = fr.frith_banaschewski_check(PRE, 4)
    assert r.locale_based == fr.is_locale_based(PRE)


def test_right_adjoints_and_frobenius():
    quot = LatticeHom(C3(), C2(), (0, 0, 1))
    assert fr.right_adjoint(quot) == (1, 2)
    assert fr.frobenius_check(quot)
    emb = LatticeHom(C2(), C3(), (0, 2))
    assert fr.right_adjoint(emb) == (0, 0, 1)
    assert fr.frobenius_check(emb)
    assert fr.right_adjoint(LatticeHom(C3(), C3(), (0, 1, 2))) == (0, 1, 2)


@given(pervin_spaces())
def test_opens_are_complete(P):
    assert fr.is_complete(fr.omega_functor(P))


@given(pervin_spaces())
def test_unit_is_iso_exactly_on_t0(P):
    assert pv.is_iso(fr.omega_pt_unit(P)) == pv.is_T0(P)


@given(frith_pairs())
def test_sublocale_membership_matches_meet_formula(F):
    L = F.lattice
    K = fr.generated_sublocale(L, bits(F.sub))
    for a in L.elements:
        assert bool((K >> a) & 1) == (fr.locale_meet_formula(L, bits(F.sub), a) == a)


@given(frith_pairs())
def test_completion_is_complete_and_frith(F):
    C, _ = fr.completion(F)
    assert C.is_frith and fr.is_complete(C)


@given(frith_pairs())
def test_points_of_frith_frames_form_t0_spaces(F):
    # (C3, {0, 1}) has two points that no member of S separates
    if F.is_frith:
        assert pv.is_T0(fr.pt_functor(F))
