"""Instance enumerators, each deterministic and duplicate-free up to isomorphism."""

from __future__ import annotations

from functools import cache
from typing import Iterator

from .congruence import SizeExceeded
from .order import FinLattice, FinPoset, canonical_poset_key, downset_lattice, downsets
from .pervin import PervinSpace, pervin_spaces

LATTICE_GUARD = 16
POINT_GUARD = 5


def _grow(p: FinPoset) -> Iterator[FinPoset]:
    """Posets with one extra element, maximal, sitting over a down-set of p."""
    n = p.size
    for d in downsets(p):
        down = p.down + (d | (1 << n),)
        yield FinPoset(down)


@cache
def _posets_by_lattice_size(max_size: int) -> tuple[FinPoset, ...]:
    seen: dict[tuple, FinPoset] = {}
    frontier = [FinPoset(())]
    seen[canonical_poset_key(frontier[0])] = frontier[0]
    while frontier:
        nxt = []
        for p in frontier:
            for q in _grow(p):
                if len(downsets(q)) > max_size:
                    continue
                key = canonical_poset_key(q)
                if key not in seen:
                    seen[key] = q
                    nxt.append(q)
        frontier = nxt
    return tuple(seen[k] for k in sorted(seen))


@cache
def distributive_lattices(max_size: int) -> tuple[FinLattice, ...]:
    """Every distributive lattice with at most ``max_size`` elements, one per iso class.

    Built as down-set lattices of posets (Birkhoff), ordered by size then poset key.
    """
    if max_size > LATTICE_GUARD:
        raise SizeExceeded(f"lattice enumeration is capped at {LATTICE_GUARD} elements")
    found = []
    for p in _posets_by_lattice_size(max_size):
        L = downset_lattice(p)
        found.append((L.size, canonical_poset_key(p), L))
    found.sort(key=lambda t: (t[0], t[1]))
    return tuple(L for _, _, L in found)


def pervin_instances(max_points: int, max_family: int | None = None, t0_only: bool = False) -> Iterator[PervinSpace]:
    if max_points > POINT_GUARD:
        raise SizeExceeded(f"Pervin enumeration is capped at {POINT_GUARD} points")
    for n in range(0, max_points + 1):
        yield from pervin_spaces(n, max_family, t0_only)
