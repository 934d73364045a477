"""Hypothesis strategies over small lattices, Pervin spaces and Frith pairs."""

from hypothesis import strategies as st

from pervfrith.enumeration import distributive_lattices
from pervfrith.frith import FrithPair
from pervfrith.order import bounded_sublattices, union_intersection_closure
from pervfrith.pervin import PervinSpace, point_names

LATTICES_6 = distributive_lattices(6)

lattices = st.sampled_from(LATTICES_6)


@st.composite
def pervin_spaces(draw, max_points=4):
    """Random family: union/intersection closure of random generators."""
    n = draw(st.integers(1, max_points))
    gens = draw(st.lists(st.integers(0, (1 << n) - 1), max_size=4))
    return PervinSpace(point_names(n), union_intersection_closure(n, gens))


@st.composite
def frith_pairs(draw):
    L = draw(lattices)
    subs = bounded_sublattices(L)
    return FrithPair(L, draw(st.sampled_from(subs)))
