import pytest
from hypothesis import given, strategies as st

from pervfrith import congruence as cg
from pervfrith.catalog import B4, C2, C3, LATTICES
from pervfrith.enumeration import distributive_lattices
from pervfrith.order import LatticeHom, are_isomorphic
from strategies import lattices

M = 1  # the middle element of C3


def test_nabla_and_delta_on_c3():
    C = C3()
    assert cg.nabla(C, M).describe() == "0,m | 1"
    assert cg.delta(C, M).describe() == "0 | m,1"


def test_nabla_join_delta_is_total():
    C = C3()
    assert cg.congruence_join([cg.nabla(C, M), cg.delta(C, M)]) == cg.total(C)


def test_congruences_of_c3_form_b4():
    con = cg.all_congruences(C3())
    assert len(con) == 4
    assert are_isomorphic(con.lattice, B4())


def test_generated_subframe_of_c3_is_everything():
    C = C3()
    got = cg.generated_congruence_subframe(C, C.elements)
    assert {th.label for th in got.members} == {th.label for th in cg.all_congruences(C).members}


def test_generated_subframe_of_b4_has_four_members():
    # frozen by the closure oracle
    B = B4()
    assert len(cg.generated_congruence_subframe(B, B.elements)) == 4


def test_quotient_by_nabla_m_is_c2():
    q, h = cg.quotient(C3(), cg.nabla(C3(), M))
    assert are_isomorphic(q, C2())
    assert h.map == (0, 0, 1)


def test_universal_extension_sends_delta_m_to_complement():
    C, B = C3(), B4()
    h = LatticeHom(C, B, (0, B.index("{a}"), B.top))
    ext = cg.universal_extension(h, [M])
    C_S = cg.generated_congruence_subframe(C, [M])
    assert B.names[ext.map[C_S.position(cg.delta(C, M))]] == "{b}"


def test_universal_extension_needs_complements():
    C = C3()
    with pytest.raises(cg.NotComplemented):
        cg.universal_extension(LatticeHom(C, C, (0, 1, 2)), [M])


def test_size_guard():
    with pytest.raises(cg.SizeExceeded):
        cg.all_congruences(LATTICES["B8"](), size_bound=6)


# congruence counts, frozen from the partition oracle
CONGRUENCE_COUNTS = {"C2": 2, "C3": 4, "B4": 4, "B8": 8, "N5": 5, "M3": 2}


@pytest.mark.parametrize("name", sorted(CONGRUENCE_COUNTS))
def test_partition_and_principal_routes_agree(name):
    L = LATTICES[name]()
    by_part = cg.congruences_by_partition(L)
    by_princ = cg.congruences_by_principals(L)
    assert len(by_part) == len(by_princ) == CONGRUENCE_COUNTS[name]
    assert {th.label for th in by_part} == {th.label for th in by_princ}


@pytest.mark.parametrize("L", distributive_lattices(6), ids=repr)
def test_full_generated_subframe_is_all_congruences(L):
    got = cg.generated_congruence_subframe(L, L.elements)
    assert {th.label for th in got.members} == {th.label for th in cg.all_congruences(L).members}


@given(lattices, st.data())
def test_nabla_and_delta_are_complements(L, data):
    a = data.draw(st.sampled_from(L.elements))
    n, d = cg.nabla(L, a), cg.delta(L, a)
    assert cg.congruence_join([n, d], L) == cg.total(L)
    assert cg.congruence_meet([n, d], L) == cg.diagonal(L)


@given(lattices, st.data())
def test_nabla_is_monotone(L, data):
    a = data.draw(st.sampled_from(L.elements))
    b = data.draw(st.sampled_from(L.elements))
    if L.leq(a, b):
        assert cg.nabla(L, a) <= cg.nabla(L, b)
        assert cg.delta(L, b) <= cg.delta(L, a)


@given(lattices)
def test_congruence_lattice_of_distributive_lattice_is_boolean(L):
    # congruence lattices of finite distributive lattices are 2^#JI
    con = cg.all_congruences(L)
    assert len(con) == 2 ** len(L.ji)
