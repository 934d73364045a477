from itertools import combinations

import pytest
from hypothesis import given, strategies as st

from pervfrith.catalog import B4, B8, C2, C3, LATTICES, M3, N5
from pervfrith.enumeration import distributive_lattices
from pervfrith.order import (
    FinPoset,
    LatticeHom,
    NotALattice,
    NotDistributive,
    are_isomorphic,
    birkhoff_roundtrip,
    bits,
    bounded_sublattices,
    complemented_elements,
    enumerate_homs,
    filters,
    generated_boolean_subalgebra,
    heyting_arrow,
    ideal_lattice,
    ideals,
    is_coherent_pair,
    is_compact_element,
    join_irreducibles,
    phi_embedding,
    prime_filters,
    prime_filters_bruteforce,
    pseudocomplement,
    validate_lattice,
)
from strategies import lattices


def names(L, mask):
    return [L.names[i] for i in bits(mask)]


def test_n5_is_a_lattice_but_not_distributive():
    L = N5()
    assert L.size == 5
    assert not L.distributive


def test_non_lattice_poset_is_rejected():
    # two maximal elements, no top
    with pytest.raises(NotALattice):
        validate_lattice(FinPoset.from_covers(3, [(0, 1), (0, 2)], ["0", "a", "b"]))


def test_heyting_arrows():
    C = C3()
    assert C.names[heyting_arrow(C, C.index("m"), C.index("0"))] == "0"
    B = B4()
    assert B.names[heyting_arrow(B, B.index("{a}"), B.index("{b}"))] == "{b}"


def test_pseudocomplement_and_complemented_elements_of_c3():
    C = C3()
    assert C.names[pseudocomplement(C, C.index("m"))] == "0"
    assert names(C, complemented_elements(C)) == ["0", "1"]


def test_join_irreducibles_and_coherence_of_c3():
    C = C3()
    assert [C.names[i] for i in join_irreducibles(C)] == ["m", "1"]
    assert is_coherent_pair(C, (1 << C.size) - 1)


def test_prime_filters_of_c3_and_b4():
    C, B = C3(), B4()
    assert [names(C, F) for F in prime_filters(C)] == [["1"], ["m", "1"]]
    assert [names(B, F) for F in prime_filters(B)] == [["{a}", "{a,b}"], ["{b}", "{a,b}"]]


@pytest.mark.parametrize("L, count", [(C3(), 3), (B4(), 4)])
def test_ideal_lattice_is_iso_on_finite_lattices(L, count):
    idl, emb = ideal_lattice(L)
    assert idl.size == count
    assert emb.is_bijective()
    assert are_isomorphic(idl, L)


def test_birkhoff_rejects_n5():
    with pytest.raises(NotDistributive):
        birkhoff_roundtrip(N5())


def test_boolean_closures():
    assert generated_boolean_subalgebra(2, [0, 0b01, 0b11]).members == (0, 1, 2, 3)
    assert len(generated_boolean_subalgebra(3, [0, 0b001, 0b011, 0b111])) == 8


def test_only_one_bounded_hom_from_c2_to_c3():
    assert [h.map for h in enumerate_homs(C2(), C3())] == [(0, 2)]


def test_phi_embedding_of_c3():
    fam, h = phi_embedding(C3())
    # prime filters: ^1 (index 0), ^m (index 1); 0 -> {}, m -> {^m}, 1 -> both
    assert fam.members == (0, 0b10, 0b11)
    assert h.map == (0, 1, 2)


def test_phi_embedding_of_b4_is_iso():
    fam, h = phi_embedding(B4())
    assert are_isomorphic(fam.lattice(), B4())


# oracle counts from exhaustive enumeration
CATALOG_COUNTS = {
    # name: (join-irreducibles, filters, ideals, bounded sublattices)
    "C2": (1, 2, 2, 1),
    "C3": (2, 3, 3, 2),
    "B4": (2, 4, 4, 4),
    "B8": (3, 8, 8, 29),
}


@pytest.mark.parametrize("name", sorted(CATALOG_COUNTS))
def test_catalog_counts(name):
    L = LATTICES[name]()
    got = (len(join_irreducibles(L)), len(filters(L)), len(ideals(L)), len(bounded_sublattices(L)))
    assert got == CATALOG_COUNTS[name]


def test_b8_bounded_sublattices_by_direct_subset_scan():
    L = B8()
    inner = [a for a in L.elements if a not in (L.bottom, L.top)]
    count = 0
    for r in range(len(inner) + 1):
        for extra in combinations(inner, r):
            S = {L.bottom, L.top, *extra}
            if all(L.meet[a][b] in S and L.join[a][b] in S for a in S for b in S):
                count += 1
    assert count == len(bounded_sublattices(L)) == 29


def test_m3_and_n5_are_not_distributive():
    assert not M3().distributive
    assert not N5().distributive


@pytest.mark.parametrize("L", distributive_lattices(8), ids=repr)
def test_prime_filters_fast_path_matches_brute_force(L):
    assert prime_filters_bruteforce(L) == list(prime_filters(L))
    assert len(prime_filters(L)) == len(join_irreducibles(L))


@pytest.mark.parametrize("L", distributive_lattices(8), ids=repr)
def test_birkhoff_roundtrip_is_iso(L):
    assert birkhoff_roundtrip(L).is_bijective()


@given(lattices)
def test_every_element_of_a_finite_lattice_is_compact(L):
    assert all(is_compact_element(L, a) for a in L.elements)


@given(lattices, st.data())
def test_heyting_arrow_is_residual(L, data):
    a, b, c = (data.draw(st.sampled_from(L.elements)) for _ in range(3))
    assert L.leq(L.meet[c][a], b) == L.leq(c, heyting_arrow(L, a, b))


@given(lattices)
def test_identity_hom_composes_to_itself(L):
    h = LatticeHom(L, L, tuple(L.elements))
    assert h.compose(h).map == h.map
    assert h.is_bijective()
