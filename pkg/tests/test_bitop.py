import pytest
from hypothesis import given

from pervfrith import bitop as bt
from pervfrith import frith as fr
from pervfrith import pervin as pv
from pervfrith.catalog import B4, C2, C3, INDISC, P3, POINT, SIER
from pervfrith.order import are_isomorphic
from strategies import frith_pairs, pervin_spaces

F2, F3 = fr.FrithPair.full(C2()), fr.FrithPair.full(C3())
SIER_BI = bt.catalog_bispaces()["SIER_BI"]


def test_three_three_two_point_counts():
    B = bt.three_three_two()
    assert fr.pt_functor(bt.bbplus(B)[0]).size == 1
    assert bt.clplus(bt.pt_b(B)).size == 2


def test_bbplus_of_three_three_two_keeps_only_the_bounds():
    G, _ = bt.bbplus(bt.three_three_two())
    assert G.lattice.size == 2 and G.is_frith


def test_skula_space_of_sierpinski():
    X = bt.skula_space(SIER())
    assert X.opens_pos.members == (0, 0b01, 0b11)
    assert X.opens_neg.members == (0, 0b10, 0b11)
    assert bt.patch(X).members == (0, 1, 2, 3)
    assert bt.pos_clopens(X).members == (0, 0b01, 0b11)
    assert bt.is_zero_dimensional(X)
    assert pv.find_pervin_iso(bt.clplus(X), SIER()) is not None


def test_sierpinski_as_bispace_is_not_zero_dimensional():
    assert bt.pos_clopens(SIER_BI).members == (0, 0b11)
    assert not bt.is_zero_dimensional(SIER_BI)
    assert bt.clplus(SIER_BI).sets == INDISC().sets


def test_discrete_bispace():
    X = bt.catalog_bispaces()["DISCRETE2"]
    assert bt.patch(X).members == (0, 1, 2, 3)
    assert bt.pos_clopens(X).members == (0, 1, 2, 3)


def test_skula_biframe_of_c3():
    B, _ = bt.skula_biframe(F3)
    assert are_isomorphic(B.main, B4())
    assert B.pos.bit_count() == 3 and B.neg.bit_count() == 3
    assert bt.is_compact_biframe(B) and bt.is_zero_dimensional_biframe(B)
    G, _ = bt.bbplus(B)
    assert fr.find_frith_iso(G, F3) is not None


@pytest.mark.parametrize("F, size", [(F3, 2), (F2, 1)], ids=repr)
def test_beta_is_homeomorphism(F, size):
    b = bt.beta(F)
    assert b.dom.size == size and b.is_homeomorphism()


def test_monotopological_membership():
    assert bt.in_perv_prime(pv.symmetrize(SIER()))
    assert not bt.in_perv_prime(SIER())


def test_complemented_part_of_b4():
    G = bt.complemented_pair(B4())
    assert G.lattice.size == 4 and G.is_frith
    assert bt.is_zero_dimensional_frame(B4())


def test_square_checks_on_catalog():
    spaces = list(bt.catalog_bispaces().values())
    r = bt.square_checks(spaces, [F2, F3, fr.FrithPair.full(B4())])
    assert r.left_square and r.beta_iso
    assert (r.points_pt_bb, r.points_cl_ptb) == (1, 2)


@pytest.mark.parametrize("P", [SIER(), P3(), POINT(), INDISC()], ids=repr)
def test_skula_adjunction_at_catalog_spaces(P):
    r = bt.skula_adjunction_check(bt.skula_space(P), P)
    assert r.triangles and r.idempotent and r.fix_bispace and r.fix_pervin


@pytest.mark.parametrize("F", [F2, F3], ids=repr)
def test_fsk_adjunction_at_chains(F):
    r = bt.fsk_adjunction_check(F, bt.three_three_two())
    assert r.counit_dense and r.counit_iso_when_expected and r.bicomplemented_lemma and r.triangles


@given(pervin_spaces(max_points=3))
def test_skula_spaces_are_compact_and_clplus_inverts_skula(P):
    X = bt.skula_space(P)
    assert bt.is_compact_bispace(X)
    assert bt.is_zero_dimensional(X)
    assert set(bt.clplus(X).sets) == set(P.sets)


@given(frith_pairs())
def test_skula_biframes_of_frith_frames_are_compact_zero_dimensional(F):
    if F.is_frith and len(F.lattice.ji) <= 3:
        B, _ = bt.skula_biframe(F)
        assert bt.is_compact_biframe(B) and bt.is_zero_dimensional_biframe(B)
