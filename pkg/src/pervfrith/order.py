"""Finite posets and lattices.

Elements are dense indices ``0..n-1``.  Down-sets and up-sets of elements are
stored as Python ints used as bitmasks, which keeps every closure and
table computation a matter of ``&``/``|`` on integers.  A finite distributive
lattice doubles as a frame (all joins are finite joins), which is how the
rest of the package treats it.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cache, cached_property
from itertools import permutations
from typing import Iterable, Iterator, Sequence


class LatticeError(ValueError):
    pass


class NotALattice(LatticeError):
    def __init__(self, pair, missing):
        self.pair = pair
        self.missing = missing
        super().__init__(f"pair {pair} has no {missing}")


class NotDistributive(LatticeError):
    pass


class InvariantViolation(LatticeError):
    pass


def bits(mask: int) -> Iterator[int]:
    """Indices of the set bits of ``mask``, ascending."""
    i = 0
    while mask:
        if mask & 1:
            yield i
        mask >>= 1
        i += 1


def mask_of(indices: Iterable[int]) -> int:
    m = 0
    for i in indices:
        m |= 1 << i
    return m


# ---------------------------------------------------------------------------
# posets


@dataclass(frozen=True)
class Preorder:
    """Reflexive transitive relation; ``down[i]`` is the mask of all j <= i."""

    down: tuple[int, ...]
    names: tuple[str, ...] = field(default=(), compare=False)

    def __post_init__(self):
        if not self.names:
            object.__setattr__(self, "names", tuple(str(i) for i in range(len(self.down))))
        if len(self.names) != len(self.down):
            raise InvariantViolation("names and elements differ in number")
        for i, d in enumerate(self.down):
            if not (d >> i) & 1:
                raise InvariantViolation(f"relation is not reflexive at {i}")
            if d >> len(self.down):
                raise InvariantViolation(f"relation at {i} mentions unknown elements")
        for i, d in enumerate(self.down):
            for j in bits(d):
                if self.down[j] & ~d:
                    raise InvariantViolation(f"relation is not transitive at ({j}, {i})")

    @property
    def size(self) -> int:
        return len(self.down)

    @cached_property
    def up(self) -> tuple[int, ...]:
        up = [0] * self.size
        for i, d in enumerate(self.down):
            for j in bits(d):
                up[j] |= 1 << i
        return tuple(up)

    def leq(self, i: int, j: int) -> bool:
        return bool((self.down[j] >> i) & 1)

    def is_antisymmetric(self) -> bool:
        return all(self.down[i] & self.up[i] == 1 << i for i in range(self.size))

    @classmethod
    def from_leq(cls, leq, names: Sequence[str] = ()):
        n = len(leq)
        down = tuple(mask_of(i for i in range(n) if leq[i][j]) for j in range(n))
        return cls(down, tuple(names))


@dataclass(frozen=True)
class FinPoset(Preorder):
    def __post_init__(self):
        super().__post_init__()
        if not self.is_antisymmetric():
            bad = next(i for i in range(self.size) if self.down[i] & self.up[i] != 1 << i)
            raise InvariantViolation(f"relation is not antisymmetric at {bad}")

    @classmethod
    def from_covers(cls, size: int, covers: Iterable[tuple[int, int]], names: Sequence[str] = ()):
        """Poset generated by pairs ``(i, j)`` meaning i < j."""
        down = [1 << i for i in range(size)]
        for i, j in covers:
            down[j] |= 1 << i
        changed = True
        while changed:
            changed = False
            for j in range(size):
                acc = down[j]
                for i in bits(down[j]):
                    acc |= down[i]
                if acc != down[j]:
                    down[j] = acc
                    changed = True
        return cls(tuple(down), tuple(names))

    @classmethod
    def from_sets(cls, masks: Sequence[int], names: Sequence[str] = ()):
        """Inclusion order on a list of distinct subsets."""
        n = len(masks)
        down = tuple(mask_of(i for i in range(n) if masks[i] & ~masks[j] == 0) for j in range(n))
        return cls(down, tuple(names))

    @cached_property
    def covers(self) -> tuple[tuple[int, int], ...]:
        """Hasse edges ``(i, j)``: i < j with nothing strictly between."""
        out = []
        for j in range(self.size):
            below = self.down[j] & ~(1 << j)
            for i in bits(below):
                between = below & self.up[i] & ~(1 << i)
                if not between:
                    out.append((i, j))
        return tuple(sorted(out))

    @cached_property
    def linear_extension(self) -> tuple[int, ...]:
        return tuple(sorted(range(self.size), key=lambda i: (self.down[i].bit_count(), i)))


def subposet(p: Preorder, mask: int) -> FinPoset:
    idx = list(bits(mask))
    pos = {e: k for k, e in enumerate(idx)}
    down = tuple(mask_of(pos[i] for i in bits(p.down[e] & mask)) for e in idx)
    return FinPoset(down, tuple(p.names[e] for e in idx))


def downsets(p: Preorder) -> list[int]:
    """All down-closed subsets of ``p`` as masks, ascending."""
    order = sorted(range(p.size), key=lambda i: (p.down[i].bit_count(), i))
    out: list[int] = []

    def walk(k: int, cur: int):
        if k == len(order):
            out.append(cur)
            return
        x = order[k]
        walk(k + 1, cur)
        if p.down[x] & ~(1 << x) & ~cur == 0:
            walk(k + 1, cur | (1 << x))

    walk(0, 0)
    # equivalent elements of a preorder must come together
    return sorted(d for d in out if all(p.down[x] & ~d == 0 for x in bits(d)))


# ---------------------------------------------------------------------------
# lattices


@dataclass(frozen=True)
class FinLattice:
    poset: FinPoset
    meet: tuple[tuple[int, ...], ...]
    join: tuple[tuple[int, ...], ...]
    bottom: int
    top: int

    def __post_init__(self):
        p = self.poset
        n = p.size
        if n == 0:
            raise InvariantViolation("a bounded lattice has at least one element")
        full = (1 << n) - 1
        if p.up[self.bottom] != full or p.down[self.top] != full:
            raise InvariantViolation("bottom/top are not the least/greatest elements")
        for i in range(n):
            for j in range(n):
                m, s = self.meet[i][j], self.join[i][j]
                if p.down[m] != p.down[i] & p.down[j]:
                    raise InvariantViolation(f"meet table wrong at ({i}, {j})")
                if p.up[s] != p.up[i] & p.up[j]:
                    raise InvariantViolation(f"join table wrong at ({i}, {j})")

    @property
    def size(self) -> int:
        return self.poset.size

    @property
    def names(self) -> tuple[str, ...]:
        return self.poset.names

    @property
    def elements(self) -> range:
        return range(self.size)

    def leq(self, i: int, j: int) -> bool:
        return self.poset.leq(i, j)

    def join_all(self, xs: Iterable[int]) -> int:
        acc = self.bottom
        for x in xs:
            acc = self.join[acc][x]
        return acc

    def meet_all(self, xs: Iterable[int]) -> int:
        acc = self.top
        for x in xs:
            acc = self.meet[acc][x]
        return acc

    def index(self, name: str) -> int:
        return self.names.index(name)

    def __repr__(self):
        return f"FinLattice({self.size}: {', '.join(self.names)})"

    @cached_property
    def distributive(self) -> bool:
        n, mt, jn = self.size, self.meet, self.join
        return all(
            mt[a][jn[b][c]] == jn[mt[a][b]][mt[a][c]]
            for a in range(n) for b in range(n) for c in range(n)
        )

    @cached_property
    def arrow(self) -> tuple[tuple[int, ...], ...]:
        n, mt, leq = self.size, self.meet, self.leq
        return tuple(
            tuple(self.join_all(x for x in range(n) if leq(mt[x][a], b)) for b in range(n))
            for a in range(n)
        )

    @cached_property
    def ji(self) -> tuple[int, ...]:
        out = []
        for x in self.poset.linear_extension:
            if x == self.bottom:
                continue
            below = self.poset.down[x] & ~(1 << x)
            if self.join_all(bits(below)) != x:
                out.append(x)
        return tuple(out)

    @cached_property
    def ji_below(self) -> tuple[int, ...]:
        jim = mask_of(self.ji)
        return tuple(self.poset.down[x] & jim for x in range(self.size))


def validate_lattice(p: FinPoset) -> FinLattice:
    """Compute meet/join tables of ``p``; raise NotALattice if some pair lacks one."""
    n = p.size
    if n == 0:
        raise NotALattice((), "elements")
    by_down = {d: i for i, d in enumerate(p.down)}
    by_up = {u: i for i, u in enumerate(p.up)}
    meet = [[0] * n for _ in range(n)]
    join = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(i, n):
            m = by_down.get(p.down[i] & p.down[j])
            if m is None:
                raise NotALattice((i, j), "infimum")
            s = by_up.get(p.up[i] & p.up[j])
            if s is None:
                raise NotALattice((i, j), "supremum")
            meet[i][j] = meet[j][i] = m
            join[i][j] = join[j][i] = s
    full = (1 << n) - 1
    bottom = by_up.get(full)
    top = by_down.get(full)
    if bottom is None or top is None:
        raise NotALattice((), "bounds")
    return FinLattice(p, tuple(map(tuple, meet)), tuple(map(tuple, join)), bottom, top)


def lattice_of_sets(masks: Sequence[int], names: Sequence[str] = ()) -> FinLattice:
    return validate_lattice(FinPoset.from_sets(list(masks), names))


def sublattice(L: FinLattice, mask: int) -> tuple[FinLattice, "LatticeHom"]:
    """Induced lattice on a meet/join-closed element set, with its inclusion."""
    idx = list(bits(mask))
    sub = validate_lattice(subposet(L.poset, mask))
    inc = LatticeHom(sub, L, tuple(idx))
    return sub, inc


def is_distributive(L: FinLattice) -> bool:
    return L.distributive


def _need_distributive(L: FinLattice):
    if not L.distributive:
        raise NotDistributive(repr(L))


def heyting_arrow(L: FinLattice, a: int, b: int) -> int:
    _need_distributive(L)
    return L.arrow[a][b]


def pseudocomplement(L: FinLattice, a: int) -> int:
    _need_distributive(L)
    return L.arrow[a][L.bottom]


def complemented_elements(L: FinLattice) -> int:
    """Mask of elements a with a v a* = 1."""
    _need_distributive(L)
    return mask_of(a for a in L.elements if L.join[a][L.arrow[a][L.bottom]] == L.top)


def complement(L: FinLattice, a: int) -> int | None:
    c = L.arrow[a][L.bottom]
    return c if L.join[a][c] == L.top else None


def join_irreducibles(L: FinLattice) -> list[int]:
    return sorted(L.ji)


def is_compact_element(L: FinLattice, a: int, literal_limit: int = 10) -> bool:
    """a <= V D implies a <= d for some d in D, for every directed D.

    A directed set and the ideal it generates have the same join and the same
    elements above a, so the test runs over ideals.  Up to ``literal_limit``
    elements every directed subset is also enumerated and the two must agree.
    """
    by_ideals = all((I >> a) & 1 for I in ideals(L) if L.leq(a, L.join_all(bits(I))))
    if L.size <= literal_limit and by_ideals != _compact_by_directed_subsets(L, a):
        raise AssertionError(f"compactness routes disagree at {L.names[a]}")
    return by_ideals


def _compact_by_directed_subsets(L: FinLattice, a: int) -> bool:
    for D in range(1, 1 << L.size):
        members = list(bits(D))
        directed = all(
            any(L.leq(x, z) and L.leq(y, z) for z in members) for x in members for y in members
        )
        if directed and L.leq(a, L.join_all(members)) and not any(L.leq(a, d) for d in members):
            return False
    return True


def compact_elements(L: FinLattice) -> int:
    return mask_of(a for a in L.elements if is_compact_element(L, a))


def is_join_generated(L: FinLattice, S: int) -> bool:
    return all(L.join_all(s for s in bits(S) if L.leq(s, a)) == a for a in L.elements)


def is_coherent_pair(L: FinLattice, S: int) -> bool:
    if S & ~compact_elements(L):
        return False
    if not (S >> L.top) & 1:
        return False
    if any(not (S >> L.meet[s][t]) & 1 for s in bits(S) for t in bits(S)):
        return False
    return is_join_generated(L, S)


# ---------------------------------------------------------------------------
# filters and ideals


def upsets(p: Preorder) -> list[int]:
    full = (1 << p.size) - 1
    return sorted(full & ~d for d in downsets(p))


def filters(L: FinLattice) -> list[int]:
    """All filters (nonempty, up-closed, meet-closed), improper one included."""
    out = []
    for u in upsets(L.poset):
        if u and all((u >> L.meet[x][y]) & 1 for x in bits(u) for y in bits(u)):
            out.append(u)
    return out


@cache
def ideals(L: FinLattice) -> tuple[int, ...]:
    out = []
    for d in downsets(L.poset):
        if d and all((d >> L.join[x][y]) & 1 for x in bits(d) for y in bits(d)):
            out.append(d)
    return tuple(out)


def is_prime_filter(L: FinLattice, F: int) -> bool:
    if not F or (F >> L.bottom) & 1:
        return False
    return all(
        (F >> a) & 1 or (F >> b) & 1
        for a in L.elements for b in L.elements if (F >> L.join[a][b]) & 1
    )


def prime_filters_bruteforce(D: FinLattice) -> list[int]:
    return [F for F in filters(D) if is_prime_filter(D, F)]


@cache
def prime_filters(D: FinLattice, crosscheck_limit: int = 16) -> tuple[int, ...]:
    """Prime filters as element masks, ascending; computed as {up j : j join-irreducible}."""
    _need_distributive(D)
    fast = sorted(D.poset.up[j] for j in D.ji)
    if D.size <= crosscheck_limit:
        brute = prime_filters_bruteforce(D)
        if brute != fast:
            raise AssertionError(f"prime filter paths disagree on {D!r}")
    return tuple(fast)


def filter_generator(L: FinLattice, F: int) -> int:
    return L.meet_all(bits(F))


def ideal_lattice(D: FinLattice) -> tuple[FinLattice, "LatticeHom"]:
    """Lattice of ideals of D under inclusion, plus the principal-ideal embedding."""
    return _ideal_lattice(D, D.names)


@cache
def _ideal_lattice(D: FinLattice, names: tuple[str, ...]) -> tuple[FinLattice, "LatticeHom"]:
    ids = ideals(D)
    names = ["v" + D.names[D.join_all(bits(J))] for J in ids]
    I = lattice_of_sets(ids, names)
    pos = {J: k for k, J in enumerate(ids)}
    emb = LatticeHom(D, I, tuple(pos[D.poset.down[d]] for d in D.elements))
    if not emb.is_bijective():
        raise AssertionError("a finite ideal failed to be principal")
    return I, emb


def downset_lattice(p: Preorder) -> FinLattice:
    ds = downsets(p)
    names = ["{" + ",".join(p.names[i] for i in bits(d)) + "}" for d in ds]
    return lattice_of_sets(ds, names)


def birkhoff_roundtrip(D: FinLattice) -> "LatticeHom":
    """Isomorphism D -> downsets of its join-irreducibles."""
    _need_distributive(D)
    ji = join_irreducibles(D)
    J = subposet(D.poset, mask_of(ji))
    O = downset_lattice(J)
    ds = downsets(J)
    pos = {d: k for k, d in enumerate(ds)}
    f = []
    for x in D.elements:
        below = mask_of(k for k, j in enumerate(ji) if D.leq(j, x))
        f.append(pos[below])
    h = LatticeHom(D, O, tuple(f))
    if not h.is_bijective():
        raise AssertionError("Birkhoff map is not bijective")
    return h


# ---------------------------------------------------------------------------
# generated substructures


def generated_sublattice(L: FinLattice, G: Iterable[int]) -> int:
    have = {L.bottom, L.top, *G}
    todo = list(have)
    while todo:
        x = todo.pop()
        for y in list(have):
            for z in (L.meet[x][y], L.join[x][y]):
                if z not in have:
                    have.add(z)
                    todo.append(z)
    return mask_of(have)


# ---------------------------------------------------------------------------
# homomorphisms


@dataclass(frozen=True)
class LatticeHom:
    dom: FinLattice
    cod: FinLattice
    map: tuple[int, ...]

    def __post_init__(self):
        A, B, f = self.dom, self.cod, self.map
        if len(f) != A.size:
            raise InvariantViolation("map length differs from domain size")
        if f[A.bottom] != B.bottom or f[A.top] != B.top:
            raise InvariantViolation("map does not preserve bounds")
        for x in A.elements:
            for y in range(x + 1, A.size):
                if f[A.meet[x][y]] != B.meet[f[x]][f[y]]:
                    raise InvariantViolation(f"map does not preserve the meet of ({x}, {y})")
                if f[A.join[x][y]] != B.join[f[x]][f[y]]:
                    raise InvariantViolation(f"map does not preserve the join of ({x}, {y})")

    def __call__(self, x: int) -> int:
        return self.map[x]

    def __repr__(self):
        pairs = ", ".join(f"{self.dom.names[x]}->{self.cod.names[y]}" for x, y in enumerate(self.map))
        return f"LatticeHom({pairs})"

    def compose(self, inner: "LatticeHom") -> "LatticeHom":
        """self after inner."""
        if inner.cod != self.dom:
            raise InvariantViolation("homomorphisms are not composable")
        return LatticeHom(inner.dom, self.cod, tuple(self.map[y] for y in inner.map))

    def image(self) -> int:
        return mask_of(self.map)

    def is_injective(self) -> bool:
        return len(set(self.map)) == len(self.map)

    def is_surjective(self) -> bool:
        return len(set(self.map)) == self.cod.size

    def is_bijective(self) -> bool:
        return self.is_injective() and self.is_surjective()

    def inverse(self) -> "LatticeHom":
        inv = [0] * self.cod.size
        for x, y in enumerate(self.map):
            inv[y] = x
        return LatticeHom(self.cod, self.dom, tuple(inv))


def identity_hom(L: FinLattice) -> LatticeHom:
    return LatticeHom(L, L, tuple(L.elements))


def _extend(A: FinLattice, B: FinLattice, images: dict[int, int]) -> list[int]:
    out = []
    for x in A.elements:
        acc = B.bottom
        for j in bits(A.ji_below[x]):
            acc = B.join[acc][images[j]]
        out.append(acc)
    return out


def _search(A: FinLattice, B: FinLattice, iso: bool) -> Iterator[tuple[int, ...]]:
    ji = list(A.ji)
    targets = list(B.ji) if iso else list(B.elements)
    if iso:
        targets.sort(key=lambda j: (B.poset.down[j].bit_count(), j))
    images: dict[int, int] = {}
    used: set[int] = set()

    def image_of(x: int) -> int:
        acc = B.bottom
        for j in bits(A.ji_below[x]):
            acc = B.join[acc][images[j]]
        return acc

    def walk(k: int):
        if k == len(ji):
            f = _extend(A, B, images)
            if f[A.top] != B.top:
                return
            ok = all(
                f[A.meet[x][y]] == B.meet[f[x]][f[y]] and f[A.join[x][y]] == B.join[f[x]][f[y]]
                for x in A.elements for y in range(x + 1, A.size)
            )
            if ok and (not iso or len(set(f)) == B.size):
                yield tuple(f)
            return
        j = ji[k]
        for b in targets:
            if iso and b in used:
                continue
            good = True
            for i in range(k):
                kk = ji[i]
                fk = images[kk]
                if A.leq(kk, j) and not B.leq(fk, b):
                    good = False
                    break
                if iso and B.leq(fk, b) and not A.leq(kk, j):
                    good = False
                    break
                if B.meet[b][fk] != image_of(A.meet[j][kk]):
                    good = False
                    break
            if not good:
                continue
            images[j] = b
            used.add(b)
            yield from walk(k + 1)
            used.discard(b)
            del images[j]

    yield from walk(0)


def enumerate_homs(A: FinLattice, B: FinLattice) -> list[LatticeHom]:
    """All bounded lattice homomorphisms A -> B, sorted by their map tuples."""
    maps = sorted(set(_search(A, B, iso=False)))
    return [LatticeHom(A, B, f) for f in maps]


def find_isomorphism(A: FinLattice, B: FinLattice) -> LatticeHom | None:
    if A.size != B.size or len(A.ji) != len(B.ji):
        return None
    best = min(_search(A, B, iso=True), default=None)
    return None if best is None else LatticeHom(A, B, best)


def are_isomorphic(A: FinLattice, B: FinLattice) -> bool:
    return find_isomorphism(A, B) is not None


# ---------------------------------------------------------------------------
# subsets of a finite ground set


@dataclass(frozen=True)
class SubsetFamily:
    ground_size: int
    members: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "members", tuple(sorted(set(self.members))))
        if any(m >> self.ground_size for m in self.members):
            raise InvariantViolation("member outside the ground set")

    @property
    def full(self) -> int:
        return (1 << self.ground_size) - 1

    def __len__(self):
        return len(self.members)

    def __iter__(self):
        return iter(self.members)

    def __contains__(self, m: int) -> bool:
        return m in self._pos

    @cached_property
    def _pos(self) -> dict[int, int]:
        return {m: k for k, m in enumerate(self.members)}

    def index(self, m: int) -> int:
        return self._pos[m]

    def is_bounded(self) -> bool:
        return 0 in self and self.full in self

    def is_sublattice(self) -> bool:
        ms = self.members
        return all((a | b) in self and (a & b) in self for a in ms for b in ms)

    def is_bounded_sublattice(self) -> bool:
        return self.is_bounded() and self.is_sublattice()

    def is_boolean(self) -> bool:
        return self.is_bounded_sublattice() and all(self.full & ~m in self for m in self.members)

    def complements(self) -> "SubsetFamily":
        return SubsetFamily(self.ground_size, tuple(self.full & ~m for m in self.members))

    def lattice(self, ground_names: Sequence[str] = ()) -> FinLattice:
        return self._lattice(tuple(ground_names))

    def _lattice(self, ground_names):
        cache = self.__dict__.setdefault("_lattice_cache", {})
        if ground_names not in cache:
            names = [set_name(m, ground_names) for m in self.members]
            cache[ground_names] = lattice_of_sets(self.members, names)
        return cache[ground_names]


def set_name(mask: int, ground_names: Sequence[str] = ()) -> str:
    if ground_names:
        return "{" + ",".join(ground_names[i] for i in bits(mask)) + "}"
    return "{" + ",".join(str(i) for i in bits(mask)) + "}"


def union_intersection_closure(n: int, G: Iterable[int]) -> SubsetFamily:
    full = (1 << n) - 1
    have = {0, full, *G}
    todo = list(have)
    while todo:
        x = todo.pop()
        for y in list(have):
            for z in (x | y, x & y):
                if z not in have:
                    have.add(z)
                    todo.append(z)
    return SubsetFamily(n, tuple(have))


def generated_boolean_subalgebra(ground_size: int, G: SubsetFamily | Iterable[int]) -> SubsetFamily:
    """Least family containing G, the empty and full sets, closed under union,
    intersection and complement."""
    full = (1 << ground_size) - 1
    have = {0, full, *G}
    todo = list(have)
    while todo:
        x = todo.pop()
        cands = [full & ~x]
        for y in list(have):
            cands += [x | y, x & y]
        for z in cands:
            if z not in have:
                have.add(z)
                todo.append(z)
    return SubsetFamily(ground_size, tuple(have))


# ---------------------------------------------------------------------------
# prime filter representation


def phi_embedding(D: FinLattice) -> tuple[SubsetFamily, LatticeHom]:
    """a |-> set of prime filters containing a, as a family on pf(D)."""
    pf = prime_filters(D)
    tilde = [mask_of(k for k, F in enumerate(pf) if (F >> a) & 1) for a in D.elements]
    fam = SubsetFamily(len(pf), tuple(tilde))
    names = pf_names(D, pf)
    cod = fam.lattice(names)
    h = LatticeHom(D, cod, tuple(fam.index(t) for t in tilde))
    if not h.is_injective():
        raise AssertionError("prime filters fail to separate a finite distributive lattice")
    return fam, h


def pf_names(D: FinLattice, pf: Sequence[int]) -> tuple[str, ...]:
    return tuple("^" + D.names[filter_generator(D, F)] for F in pf)


# ---------------------------------------------------------------------------
# enumeration helpers


def bounded_sublattices(L: FinLattice, base: int = 0) -> list[int]:
    """All bounded sublattices of L containing ``base`` (element masks), ascending.

    NextClosure over the closure operator "generated sublattice".
    """
    n = L.size

    def close(m: int) -> int:
        return generated_sublattice(L, bits(m | base))

    out = []
    A = close(0)
    while True:
        out.append(A)
        nxt = None
        for i in reversed(range(n)):
            if (A >> i) & 1:
                continue
            low = A & ((1 << i) - 1)
            B = close(low | (1 << i))
            if B & ((1 << i) - 1) & ~low == 0:
                nxt = B
                break
        if nxt is None:
            break
        A = nxt
    return sorted(out)


def canonical_poset_key(p: Preorder) -> tuple:
    """Lexicographically least relation matrix over all relabellings (small posets)."""
    n = p.size
    sig = [(p.down[i].bit_count(), p.up[i].bit_count()) for i in range(n)]
    order = sorted(range(n), key=lambda i: sig[i])
    groups: list[list[int]] = []
    for i in order:
        if groups and sig[groups[-1][0]] == sig[i]:
            groups[-1].append(i)
        else:
            groups.append([i])
    best = None
    for choice in _group_perms(groups):
        key = tuple(p.leq(choice[a], choice[b]) for a in range(n) for b in range(n))
        if best is None or key < best:
            best = key
    return (tuple(sorted(sig)), best)


def _group_perms(groups):
    if not groups:
        yield ()
        return
    head, rest = groups[0], groups[1:]
    for perm in permutations(head):
        for tail in _group_perms(rest):
            yield perm + tail
