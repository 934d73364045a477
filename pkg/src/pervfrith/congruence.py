"""Congruences of finite distributive lattices (frame congruences at finite scale).

A congruence is stored as a tuple of block labels, label[x] = least index of
the block of x, so equality and hashing are plain tuple operations.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cache, cached_property
from itertools import combinations
from typing import Iterable, Sequence

from .order import (
    FinLattice,
    FinPoset,
    InvariantViolation,
    LatticeError,
    LatticeHom,
    bits,
    complement,
    mask_of,
    validate_lattice,
)

DEFAULT_SIZE_BOUND = 10


class SizeExceeded(LatticeError):
    pass


class NotComplemented(LatticeError):
    def __init__(self, element):
        self.element = element
        super().__init__(f"image of {element} is not complemented")


@dataclass(frozen=True)
class Congruence:
    lattice: FinLattice
    label: tuple[int, ...]

    @classmethod
    def from_relation(cls, L: FinLattice, related) -> "Congruence":
        label = [0] * L.size
        for x in L.elements:
            label[x] = next(y for y in L.elements if related(x, y))
        th = cls(L, tuple(label))
        th.check()
        return th

    def check(self):
        L, lab = self.lattice, self.label
        for x in L.elements:
            if lab[lab[x]] != lab[x] or lab[x] > x:
                raise InvariantViolation("labels are not canonical")
        for x in L.elements:
            y = lab[x]
            for z in L.elements:
                if lab[L.meet[x][z]] != lab[L.meet[y][z]] or lab[L.join[x][z]] != lab[L.join[y][z]]:
                    raise InvariantViolation(f"partition is not compatible at ({x}, {z})")

    def related(self, x: int, y: int) -> bool:
        return self.label[x] == self.label[y]

    def __le__(self, other: "Congruence") -> bool:
        lo = other.label
        return all(lo[x] == lo[y] for x, y in enumerate(self.label))

    def blocks(self) -> list[int]:
        out: dict[int, int] = {}
        for x, r in enumerate(self.label):
            out[r] = out.get(r, 0) | (1 << x)
        return [out[r] for r in sorted(out)]

    def pairs(self) -> int:
        return sum(b.bit_count() ** 2 for b in self.blocks())

    def describe(self) -> str:
        names = self.lattice.names
        return " | ".join(",".join(names[i] for i in bits(b)) for b in self.blocks())

    def __repr__(self):
        return f"Congruence({self.describe()})"


def diagonal(L: FinLattice) -> Congruence:
    return Congruence(L, tuple(L.elements))


def total(L: FinLattice) -> Congruence:
    return Congruence(L, (0,) * L.size)


def nabla(L: FinLattice, a: int) -> Congruence:
    return Congruence.from_relation(L, lambda x, y: L.join[a][x] == L.join[a][y])


def delta(L: FinLattice, a: int) -> Congruence:
    return Congruence.from_relation(L, lambda x, y: L.meet[a][x] == L.meet[a][y])


def _canon(parent: list[int]) -> tuple[int, ...]:
    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    return tuple(find(x) for x in range(len(parent)))


def _close(L: FinLattice, parent: list[int]) -> tuple[int, ...]:
    """Least congruence containing the equivalence given by ``parent``."""

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(x, y) -> bool:
        rx, ry = find(x), find(y)
        if rx == ry:
            return False
        if rx < ry:
            parent[ry] = rx
        else:
            parent[rx] = ry
        return True

    changed = True
    while changed:
        changed = False
        for x in L.elements:
            r = find(x)
            if r == x:
                continue
            for z in L.elements:
                if union(L.meet[x][z], L.meet[r][z]):
                    changed = True
                if union(L.join[x][z], L.join[r][z]):
                    changed = True
    return _canon(parent)


def generated_congruence(L: FinLattice, pairs: Iterable[tuple[int, int]]) -> Congruence:
    parent = list(L.elements)
    for x, y in pairs:
        rx, ry = _canon(parent)[x], _canon(parent)[y]
        if rx != ry:
            parent[max(rx, ry)] = min(rx, ry)
    return Congruence(L, _close(L, parent))


def congruence_join(thetas: Sequence[Congruence], L: FinLattice | None = None) -> Congruence:
    if not thetas:
        if L is None:
            raise ValueError("empty join needs the lattice")
        return diagonal(L)
    L = thetas[0].lattice
    parent = list(L.elements)
    for th in thetas:
        for x, r in enumerate(th.label):
            a, b = _canon(parent)[x], _canon(parent)[r]
            if a != b:
                parent[max(a, b)] = min(a, b)
    return Congruence(L, _close(L, parent))


def congruence_meet(thetas: Sequence[Congruence], L: FinLattice | None = None) -> Congruence:
    if not thetas:
        if L is None:
            raise ValueError("empty meet needs the lattice")
        return total(L)
    L = thetas[0].lattice
    keys = [tuple(th.label[x] for th in thetas) for x in L.elements]
    first: dict[tuple, int] = {}
    label = []
    for x, k in enumerate(keys):
        label.append(first.setdefault(k, x))
    return Congruence(L, tuple(label))


# ---------------------------------------------------------------------------
# lattices of congruences


@dataclass(frozen=True)
class CongruenceLattice:
    """A set of congruences of ``base`` closed under meet and join, ordered by inclusion."""

    base: FinLattice
    members: tuple[Congruence, ...]

    @cached_property
    def index(self) -> dict[tuple[int, ...], int]:
        return {th.label: k for k, th in enumerate(self.members)}

    def position(self, th: Congruence) -> int:
        return self.index[th.label]

    def __len__(self):
        return len(self.members)

    def __contains__(self, th: Congruence) -> bool:
        return th.label in self.index

    @cached_property
    def lattice(self) -> FinLattice:
        ms = self.members
        n = len(ms)
        down = tuple(mask_of(i for i in range(n) if ms[i] <= ms[j]) for j in range(n))
        names = tuple(_congruence_name(th) for th in ms)
        return validate_lattice(FinPoset(down, names))

    def nabla_map(self) -> LatticeHom:
        L = self.base
        return LatticeHom(L, self.lattice, tuple(self.position(nabla(L, a)) for a in L.elements))


def _congruence_name(th: Congruence) -> str:
    return "[" + th.describe() + "]"


def _sort_members(ths: Iterable[Congruence]) -> tuple[Congruence, ...]:
    # coarser congruences have fewer distinct labels; order by related pairs, then labels
    return tuple(sorted(ths, key=lambda th: (th.pairs(), th.label)))


def _closure(L: FinLattice, gens: Iterable[Congruence], size_bound: int | None) -> list[Congruence]:
    have: dict[tuple[int, ...], Congruence] = {}
    for g in [diagonal(L), total(L), *gens]:
        have.setdefault(g.label, g)
    todo = list(have.values())
    limit = None if size_bound is None else 1 << size_bound
    while todo:
        x = todo.pop()
        for y in list(have.values()):
            for z in (congruence_join([x, y]), congruence_meet([x, y])):
                if z.label not in have:
                    have[z.label] = z
                    todo.append(z)
                    if limit is not None and len(have) > limit:
                        raise SizeExceeded(f"congruence closure exceeded {limit} members")
    return list(have.values())


def _set_partitions(n: int):
    """Restricted growth strings, as canonical min-labels."""

    def walk(i: int, label: list[int], reps: list[int]):
        if i == n:
            yield tuple(label)
            return
        for r in reps:
            label.append(r)
            yield from walk(i + 1, label, reps)
            label.pop()
        label.append(i)
        reps.append(i)
        yield from walk(i + 1, label, reps)
        reps.pop()
        label.pop()

    yield from walk(0, [], [])


def congruences_by_partition(L: FinLattice) -> list[Congruence]:
    out = []
    for lab in _set_partitions(L.size):
        th = Congruence(L, lab)
        try:
            th.check()
        except InvariantViolation:
            continue
        out.append(th)
    return list(_sort_members(out))


def congruences_by_principals(L: FinLattice) -> list[Congruence]:
    principals = [generated_congruence(L, [(x, y)]) for x, y in combinations(L.elements, 2)]
    return list(_sort_members(_closure(L, principals, None)))


def all_congruences(L: FinLattice, size_bound: int = DEFAULT_SIZE_BOUND) -> CongruenceLattice:
    if L.size > size_bound:
        raise SizeExceeded(f"lattice has {L.size} elements, bound is {size_bound}")
    members = congruences_by_partition(L) if L.size < 7 else congruences_by_principals(L)
    return CongruenceLattice(L, tuple(members))


def generated_congruence_subframe(
    L: FinLattice, S: Iterable[int], size_bound: int = DEFAULT_SIZE_BOUND
) -> CongruenceLattice:
    """Sublattice of congruences generated by every nabla(a) and by delta(s) for s in S."""
    return _generated_subframe(L, L.names, tuple(sorted(set(S))), size_bound)


@cache
def _generated_subframe(L: FinLattice, names: tuple[str, ...], S: tuple[int, ...], size_bound: int):
    # lattices compare equal across renamings; names are part of the key
    if L.size > size_bound:
        raise SizeExceeded(f"lattice has {L.size} elements, bound is {size_bound}")
    gens = [nabla(L, a) for a in L.elements] + [delta(L, s) for s in S]
    C = CongruenceLattice(L, _sort_members(_closure(L, gens, None)))
    C.nabla_map()  # raises unless nabla is a lattice hom
    return C


# ---------------------------------------------------------------------------
# quotients


def quotient(L: FinLattice, th: Congruence) -> tuple[FinLattice, LatticeHom]:
    reps = sorted(set(th.label))
    pos = {r: k for k, r in enumerate(reps)}
    blocks = th.blocks()
    # [x] <= [y] iff x ^ y is congruent to x
    down = tuple(
        mask_of(i for i, r in enumerate(reps) if th.related(L.meet[r][s], r)) for s in reps
    )
    names = tuple("[" + ",".join(L.names[i] for i in bits(b)) + "]" for b in blocks)
    Q = validate_lattice(FinPoset(down, names))
    q = LatticeHom(L, Q, tuple(pos[th.label[x]] for x in L.elements))
    return Q, q


def block_maximum(L: FinLattice, th: Congruence, q: LatticeHom) -> tuple[int, ...]:
    """Right adjoint of the quotient map: each block to its largest element."""
    out = []
    for b in range(q.cod.size):
        members = [x for x in L.elements if q.map[x] == b]
        out.append(L.join_all(members))
    return tuple(out)


# ---------------------------------------------------------------------------
# universal property


def _s_joins(L: FinLattice, S: Iterable[int]) -> list[int]:
    """All joins of finite subsets of S, bottom included."""
    have = {L.bottom}
    for s in S:
        have |= {L.join[x][s] for x in have}
    return sorted(have)


def universal_extension(h: LatticeHom, S: Iterable[int], C: CongruenceLattice | None = None) -> LatticeHom:
    """The hom on the generated congruence frame agreeing with h on the closed congruences.

    theta goes to the join of h(a) ^ not h(b) over pairs with
    nabla(a) ^ delta(b) contained in theta, b a finite join of S-elements.
    """
    L, M = h.dom, h.cod
    S = sorted(set(S))
    comp = {}
    for s in S:
        c = complement(M, h.map[s])
        if c is None:
            raise NotComplemented(L.names[s])
        comp[s] = c
    if C is None:
        C = generated_congruence_subframe(L, S)
    bs = _s_joins(L, S)
    not_hb = {}
    for b in bs:
        c = complement(M, h.map[b])
        if c is None:
            raise NotComplemented(L.names[b])
        not_hb[b] = c
    basics = []
    for a in L.elements:
        na = nabla(L, a)
        for b in bs:
            basics.append((congruence_meet([na, delta(L, b)]), M.meet[h.map[a]][not_hb[b]]))
    images = []
    for th in C.members:
        images.append(M.join_all(v for g, v in basics if g <= th))
    return LatticeHom(C.lattice, M, tuple(images))
