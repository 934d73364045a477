from collections import Counter
from itertools import combinations

import pytest

from pervfrith.catalog import B4, INDISC, SIER
from pervfrith.congruence import SizeExceeded
from pervfrith.enumeration import distributive_lattices, pervin_instances
from pervfrith.order import SubsetFamily, are_isomorphic, bounded_sublattices
from pervfrith.pervin import PervinSpace, find_pervin_iso, pervin_spaces

# distributive lattices by size; sizes 9 and 10 agree with the published sequence A006982
LATTICE_COUNTS = {1: 1, 2: 1, 3: 1, 4: 2, 5: 3, 6: 5, 7: 8, 8: 15, 9: 26, 10: 47}


def test_distributive_lattice_counts():
    got = Counter(L.size for L in distributive_lattices(10))
    assert dict(got) == LATTICE_COUNTS


def test_lattices_are_pairwise_non_isomorphic():
    lats = distributive_lattices(8)
    for A, B in combinations(lats, 2):
        if A.size == B.size:
            assert not are_isomorphic(A, B)


def test_lattice_enumeration_is_deterministic():
    distributive_lattices.cache_clear()
    first = [repr(L) for L in distributive_lattices(7)]
    distributive_lattices.cache_clear()
    assert first == [repr(L) for L in distributive_lattices(7)]


def test_one_point_has_one_space():
    assert len(list(pervin_spaces(1))) == 1


def test_two_points_include_catalog_spaces():
    found = list(pervin_spaces(2))
    assert len(found) == 3
    discrete = PervinSpace(("a", "b"), SubsetFamily(2, (0, 1, 2, 3)))
    for P in (SIER(), INDISC(), discrete):
        assert any(find_pervin_iso(P, Q) for Q in found)


def test_spaces_are_pairwise_non_isomorphic():
    for n in range(4):
        found = list(pervin_spaces(n))
        for P, Q in combinations(found, 2):
            assert find_pervin_iso(P, Q) is None


def test_family_size_bound():
    assert len(list(pervin_instances(4, 8))) == 40
    assert len(list(pervin_instances(4, 8, t0_only=True))) == 18
    assert all(len(P.sets) <= 8 for P in pervin_instances(4, 8))


def test_bounded_sublattices_of_powerset_of_two():
    assert len(bounded_sublattices(B4())) == 4


def test_guards():
    with pytest.raises(SizeExceeded):
        list(pervin_instances(6))
    with pytest.raises(SizeExceeded):
        distributive_lattices(17)
