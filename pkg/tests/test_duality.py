import pytest
from hypothesis import given

from pervfrith import bitop as bt
from pervfrith import duality as du
from pervfrith import frith as fr
from pervfrith import pervin as pv
from pervfrith.catalog import INDISC, P3, POINT, SIER
from pervfrith.enumeration import pervin_instances
from pervfrith.order import InvariantViolation, SubsetFamily
from strategies import pervin_spaces

SPACES_3 = tuple(pervin_instances(3))


def test_spectral_examples():
    assert du.is_spectral(SIER().family)
    assert du.compact_opens(SIER().family).members == (0, 0b01, 0b11)
    # two generic points for the closed set X
    assert not du.is_spectral(INDISC().family)
    assert du.is_spectral(POINT().family)


def test_ko_and_u():
    back = du.ko(du.u(SIER()), SIER().ground)
    assert pv.find_pervin_iso(back, SIER()) is not None
    assert du.ko(POINT().family).size == 1
    top = pv.omega_topology(P3())
    assert du.u(du.ko(top)) == top


def test_ko_rejects_non_spectral():
    with pytest.raises(du.NotSpectral):
        du.ko(INDISC().family)


def test_priestley_space_of_sierpinski():
    Y = du.pp(SIER())
    assert Y.topology.members == (0, 1, 2, 3)
    # b <= a
    assert Y.order.covers == ((1, 0),)
    assert du.cup(Y).sets == SIER().sets
    assert du.pp(POINT()).size == 1


def test_pairwise_stone():
    assert du.is_pairwise_stone(bt.skula_space(SIER()))
    assert not du.is_pairwise_stone(bt.catalog_bispaces()["SIER_BI"])


def test_stone_and_priestley_checks_pass_on_three_points():
    tops = [P.family for P in SPACES_3]
    for r in du.stone_iso_check(SPACES_3, tops) + du.priestley_iso_check(SPACES_3, tops):
        assert r.passed, r.witness


def test_bitop_and_completeness_duality_on_small_instances():
    pairs = du.frith_pairs(5)
    for r in du.bitop_duality_check(SPACES_3, pairs) + du.completeness_duality_check(SPACES_3, pairs):
        assert r.passed, r.witness


def test_identity_adjunction_passes():
    fam = du.Family(SPACES_3[:6], SPACES_3[:6])
    for r in du.adjunction_verifier(du.identity_adjunction(), fam):
        assert r.passed, r.witness


def test_clplus_skula_on_all_spaces_up_to_three_points():
    bis = tuple(dict.fromkeys([*bt.catalog_bispaces().values(), *(bt.skula_space(P) for P in SPACES_3)]))
    for r in du.adjunction_verifier(du.clplus_skula(), du.Family(bis, SPACES_3)):
        assert r.passed, r.witness


def test_corrupted_counit_is_caught_with_witness():
    fam = du.Family(tuple(bt.skula_space(P) for P in SPACES_3), SPACES_3)
    reports = du.adjunction_verifier(du.corrupted(du.clplus_skula()), fam)
    failed = [r for r in reports if not r.passed]
    assert failed
    assert failed[0].witness


@pytest.mark.parametrize("index", range(7))
def test_small_battery(index):
    adj, fam = du.battery(max_points=2, max_family=4, max_lattice=4)[index]
    for r in du.adjunction_verifier(adj, fam):
        assert r.passed, r.witness


@pytest.mark.parametrize("index", range(7))
def test_small_battery_negative_control(index):
    adj, fam = du.battery(max_points=2, max_family=4, max_lattice=4)[index]
    assert not all(r.passed for r in du.adjunction_verifier(du.corrupted(adj), fam))


def test_law_report_serialization():
    r = du.LawReport("law", ("a", "b"), True, "long witness")
    d = r.as_dict()
    assert d["instances"] == 2 and d["pass"] is True
    assert r.witness_hash == du.LawReport("law", (), False, "long witness").witness_hash


def test_swap_two_points_changes_the_map():
    f = pv.identity_map(SIER())
    with pytest.raises(InvariantViolation):
        # swapping a and b is not a Pervin map of the Sierpinski space
        du.swap_two_points(f)
    P = pv.PervinSpace(("a", "b"), SubsetFamily(2, (0, 0b11)))
    assert du.swap_two_points(pv.identity_map(P)).map == (1, 0)


@given(pervin_spaces(max_points=3))
def test_spectral_iff_t0(P):
    assert du.is_spectral(P.family) == pv.is_T0(P)


@given(pervin_spaces(max_points=3))
def test_compact_opens_of_opens_equal_the_family_on_t0(P):
    if pv.is_T0(P):
        assert du.compact_opens(du.u(P)) == P.family


@given(pervin_spaces(max_points=3))
def test_cup_after_pp_is_identity(P):
    if pv.is_T0(P):
        assert set(du.cup(du.pp(P)).sets) == set(P.sets)


@given(pervin_spaces(max_points=3))
def test_omega_pt_round_trip(P):
    if pv.is_T0(P):
        assert pv.find_pervin_iso(fr.pt_functor(fr.omega_functor(P)), P) is not None
