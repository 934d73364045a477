"""Pervin spaces: a finite set with a bounded sublattice of its powerset.

Points are indices into ``ground``; subsets are bitmasks over those indices.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cache, cached_property
from itertools import permutations, product
from typing import Iterator, Sequence

from .order import (
    FinLattice,
    InvariantViolation,
    LatticeError,
    LatticeHom,
    Preorder,
    SubsetFamily,
    bits,
    bounded_sublattices,
    enumerate_homs,
    filter_generator,
    generated_boolean_subalgebra,
    ideal_lattice,
    mask_of,
    phi_embedding,
    prime_filters,
    set_name,
    union_intersection_closure,
)


class NotT0(LatticeError):
    pass


@dataclass(frozen=True)
class PervinSpace:
    ground: tuple[str, ...]
    family: SubsetFamily

    def __post_init__(self):
        fam = self.family
        if fam.ground_size != len(self.ground):
            raise InvariantViolation("family is over a different ground set")
        if 0 not in fam:
            raise InvariantViolation("family must contain the empty set")
        if fam.full not in fam:
            raise InvariantViolation("family must contain the full set")
        for a in fam:
            for b in fam:
                if a | b not in fam:
                    raise InvariantViolation("family must be closed under union")
                if a & b not in fam:
                    raise InvariantViolation("family must be closed under intersection")

    @classmethod
    def of(cls, ground: Sequence[str], sets: Sequence[Sequence[str | int]]) -> "PervinSpace":
        ground = tuple(ground)
        masks = []
        for s in sets:
            masks.append(mask_of(ground.index(p) if isinstance(p, str) else p for p in s))
        return cls(ground, SubsetFamily(len(ground), tuple(masks)))

    @property
    def size(self) -> int:
        return len(self.ground)

    @property
    def full(self) -> int:
        return self.family.full

    @property
    def sets(self) -> tuple[int, ...]:
        return self.family.members

    def name(self, mask: int) -> str:
        return set_name(mask, self.ground)

    @cached_property
    def lattice(self) -> FinLattice:
        """The family ordered by inclusion; element k is ``sets[k]``."""
        return self.family.lattice(self.ground)

    @cached_property
    def neighborhoods(self) -> tuple[int, ...]:
        """For each point, the mask of family indices containing it."""
        return tuple(
            mask_of(k for k, S in enumerate(self.sets) if (S >> x) & 1) for x in range(self.size)
        )

    def __repr__(self):
        return f"PervinSpace({{{', '.join(self.ground)}}}: {', '.join(map(self.name, self.sets))})"


@dataclass(frozen=True)
class PervinMap:
    dom: PervinSpace
    cod: PervinSpace
    map: tuple[int, ...]

    def __post_init__(self):
        if len(self.map) != self.dom.size or any(not 0 <= y < self.cod.size for y in self.map):
            raise InvariantViolation("point map has the wrong shape")
        for T in self.cod.sets:
            if self.preimage(T) not in self.dom.family:
                raise InvariantViolation(f"preimage of {self.cod.name(T)} is not in the domain family")

    def preimage(self, T: int) -> int:
        return mask_of(x for x, y in enumerate(self.map) if (T >> y) & 1)

    def image(self, S: int) -> int:
        return mask_of(self.map[x] for x in bits(S))

    def compose(self, inner: "PervinMap") -> "PervinMap":
        """self after inner."""
        return PervinMap(inner.dom, self.cod, tuple(self.map[y] for y in inner.map))

    def __repr__(self):
        pairs = ", ".join(f"{self.dom.ground[x]}->{self.cod.ground[y]}" for x, y in enumerate(self.map))
        return f"PervinMap({pairs})"


def identity_map(P: PervinSpace) -> PervinMap:
    return PervinMap(P, P, tuple(range(P.size)))


def is_morphism(P: PervinSpace, Q: PervinSpace, f: Sequence[int]) -> bool:
    fam = P.family
    return all(mask_of(x for x, y in enumerate(f) if (T >> y) & 1) in fam for T in Q.sets)


def pervin_maps(P: PervinSpace, Q: PervinSpace) -> list[PervinMap]:
    """Every morphism P -> Q, in lexicographic order of point maps."""
    return [PervinMap(P, Q, f) for f in product(range(Q.size), repeat=P.size) if is_morphism(P, Q, f)]


# ---------------------------------------------------------------------------
# basic constructions


@cache
def omega_topology(P: PervinSpace) -> SubsetFamily:
    return union_intersection_closure(P.size, P.sets)


def symmetrize(P: PervinSpace) -> PervinSpace:
    return PervinSpace(P.ground, generated_boolean_subalgebra(P.size, P.sets))


def is_symmetric(P: PervinSpace) -> bool:
    return P.family.is_boolean()


def specialization(P: PervinSpace) -> Preorder:
    """x <= y iff every member containing x contains y."""
    nb = P.neighborhoods
    down = tuple(mask_of(x for x in range(P.size) if nb[x] & ~nb[y] == 0) for y in range(P.size))
    return Preorder(down, P.ground)


def is_T0(P: PervinSpace) -> bool:
    by_order = specialization(P).is_antisymmetric()
    by_neighborhoods = len(set(P.neighborhoods)) == P.size
    if by_order != by_neighborhoods:
        raise AssertionError("T0 tests disagree")
    return by_order


def _td_member_minus_point(P: PervinSpace, x: int) -> bool:
    return any((S >> x) & 1 and S & ~(1 << x) in P.family for S in P.sets)


def _td_distinct_agree_off_point(P: PervinSpace, x: int) -> bool:
    off = ~(1 << x)
    seen = set()
    for S in P.sets:
        if S & off in seen:
            return True
        seen.add(S & off)
    return False


def _td_difference_singleton(P: PervinSpace, x: int) -> bool:
    return any(S1 & ~S2 == 1 << x for S1 in P.sets for S2 in P.sets)


def td_conditions(P: PervinSpace) -> tuple[bool, bool, bool]:
    pts = range(P.size)
    return (
        all(_td_member_minus_point(P, x) for x in pts),
        all(_td_distinct_agree_off_point(P, x) for x in pts),
        all(_td_difference_singleton(P, x) for x in pts),
    )


def is_TD(P: PervinSpace) -> bool:
    a, b, c = td_conditions(P)
    if not a == b == c:
        raise AssertionError(f"T_D variants disagree on {P!r}: {(a, b, c)}")
    return a


# ---------------------------------------------------------------------------
# morphism classification


@dataclass(frozen=True)
class MapKind:
    epi: bool
    extremal_mono: bool
    dense: bool
    iso: bool


def classify_map(f: PervinMap) -> MapKind:
    X, Y = f.dom, f.cod
    injective = len(set(f.map)) == X.size
    surjective = len(set(f.map)) == Y.size
    pulled = {f.preimage(T) for T in Y.sets}
    extremal = injective and all(S in pulled for S in X.sets)
    dense = all(T == 0 for T in Y.sets if f.preimage(T) == 0)
    iso = injective and surjective and {f.image(S) for S in X.sets} == set(Y.sets)
    return MapKind(surjective, extremal, dense, iso)


def find_pervin_iso(P: PervinSpace, Q: PervinSpace) -> PervinMap | None:
    """A bijection carrying the family of P onto that of Q, or None."""
    if P.size != Q.size or len(P.sets) != len(Q.sets):
        return None
    sig_p = [P.neighborhoods[x].bit_count() for x in range(P.size)]
    sig_q = [Q.neighborhoods[y].bit_count() for y in range(Q.size)]
    if sorted(sig_p) != sorted(sig_q):
        return None
    target = set(Q.sets)
    for perm in permutations(range(Q.size)):
        if any(sig_p[x] != sig_q[perm[x]] for x in range(P.size)):
            continue
        if all(mask_of(perm[x] for x in bits(S)) in target for S in P.sets):
            return PervinMap(P, Q, perm)
    return None


def is_iso(f: PervinMap) -> bool:
    return classify_map(f).iso


# ---------------------------------------------------------------------------
# Cauchy filters


@dataclass(frozen=True)
class CauchyFilter:
    """A filter of subsets of X; at finite scale it is the up-set of ``generator``."""

    space: PervinSpace
    generator: int
    members: frozenset[int] = field(init=False, compare=False, repr=False)

    def __post_init__(self):
        full = self.space.full
        ups = frozenset(m for m in range(full + 1) if self.generator & ~m == 0)
        object.__setattr__(self, "members", ups)
        if not is_cauchy_family(self.space, ups):
            raise InvariantViolation("filter is not Cauchy")


def is_cauchy_family(P: PervinSpace, F: frozenset[int] | set[int]) -> bool:
    """Definitional test on an explicit family of subsets."""
    full = P.full
    if not F or 0 in F:
        return False
    for A in F:
        for B in range(full + 1):
            if A & ~B == 0 and B not in F:
                return False
        for B in F:
            if A & B not in F:
                return False
    return all(S in F or (full & ~S) in F for S in P.sets)


def cauchy_filters(P: PervinSpace) -> list[CauchyFilter]:
    sym = generated_boolean_subalgebra(P.size, P.sets)
    full = P.full
    out = []
    for A in range(1, full + 1):
        if all(A & ~B == 0 or A & B == 0 for B in sym):
            out.append(CauchyFilter(P, A))
    return out


def converges(F: CauchyFilter, x: int) -> bool:
    sym = generated_boolean_subalgebra(F.space.size, F.space.sets)
    meet = F.space.full
    for B in sym:
        if B in F.members:
            meet &= B
    return bool((meet >> x) & 1)


def is_cauchy_complete(P: PervinSpace) -> bool:
    return all(any(converges(F, x) for x in range(P.size)) for F in cauchy_filters(P))


# ---------------------------------------------------------------------------
# the lattice functors


def pf_space(D: FinLattice) -> PervinSpace:
    """Prime filters of D, each element a becoming the set of prime filters containing it."""
    return _pf_space(D, D.names)


@cache
def _pf_space(D: FinLattice, names: tuple[str, ...]) -> PervinSpace:
    fam, _ = phi_embedding(D)
    names = tuple("^" + D.names[filter_generator(D, F)] for F in prime_filters(D))
    return PervinSpace(names, fam)


def pf_tilde(D: FinLattice, a: int) -> int:
    return mask_of(k for k, F in enumerate(prime_filters(D)) if (F >> a) & 1)


def pf_map(h: LatticeHom) -> PervinMap:
    """pf(E) -> pf(D) for h: D -> E, by inverse image of prime filters."""
    D, E = h.dom, h.cod
    pfD, pfE = prime_filters(D), prime_filters(E)
    pos = {F: k for k, F in enumerate(pfD)}
    f = []
    for G in pfE:
        pulled = mask_of(a for a in D.elements if (G >> h.map[a]) & 1)
        f.append(pos[pulled])
    return PervinMap(pf_space(E), pf_space(D), tuple(f))


def lperv(P: PervinSpace) -> FinLattice:
    return P.lattice


def lperv_map(f: PervinMap) -> LatticeHom:
    """The family lattice of the codomain to that of the domain, by preimage."""
    P, Q = f.dom, f.cod
    return LatticeHom(Q.lattice, P.lattice, tuple(P.family.index(f.preimage(T)) for T in Q.sets))


def neighborhood_map(P: PervinSpace) -> PervinMap:
    """x to the prime filter of family members containing x."""
    D = P.lattice
    pos = {F: k for k, F in enumerate(prime_filters(D))}
    return PervinMap(P, pf_space(D), tuple(pos[nb] for nb in P.neighborhoods))


def phi_counit(D: FinLattice) -> LatticeHom:
    """D -> family lattice of pf_space(D), a to its tilde set."""
    Q = pf_space(D)
    return LatticeHom(D, Q.lattice, tuple(Q.family.index(pf_tilde(D, a)) for a in D.elements))


# ---------------------------------------------------------------------------
# strong exactness


def open_intersection_closure(P: PervinSpace) -> SubsetFamily:
    opens = set(omega_topology(P))
    have = set(P.sets)
    changed = True
    while changed:
        changed = False
        for A in list(have):
            for B in list(have):
                C = A & B
                if C in opens and C not in have:
                    have.add(C)
                    changed = True
    return SubsetFamily(P.size, tuple(have))


def is_strongly_exact(P: PervinSpace) -> bool:
    return set(open_intersection_closure(P)) == set(P.sets)


# ---------------------------------------------------------------------------
# enumeration


@cache
def _powerset_lattice(n: int) -> FinLattice:
    from .order import lattice_of_sets

    return lattice_of_sets(list(range(1 << n)))


def _canonical_family(n: int, sets: Sequence[int]) -> tuple[int, ...]:
    best = None
    for perm in permutations(range(n)):
        key = tuple(sorted(mask_of(perm[i] for i in bits(S)) for S in sets))
        if best is None or key < best:
            best = key
    return best


@cache
def pervin_families(n: int) -> tuple[tuple[int, ...], ...]:
    """Bounded sublattices of P(n) up to permutation of points, canonical and sorted."""
    if n > 5:
        from .congruence import SizeExceeded

        raise SizeExceeded(f"{n} points is beyond the enumeration guard")
    if n == 0:
        return ((0,),)
    L = _powerset_lattice(n)
    seen = set()
    for m in bounded_sublattices(L):
        seen.add(_canonical_family(n, list(bits(m))))
    return tuple(sorted(seen, key=lambda k: (len(k), k)))


def point_names(n: int) -> tuple[str, ...]:
    base = "xyzwuv"
    return tuple(base[i] if i < len(base) else f"p{i}" for i in range(n))


def pervin_spaces(n: int, max_family: int | None = None, t0_only: bool = False) -> Iterator[PervinSpace]:
    for sets in pervin_families(n):
        if max_family is not None and len(sets) > max_family:
            continue
        P = PervinSpace(point_names(n), SubsetFamily(n, sets))
        if t0_only and not is_T0(P):
            continue
        yield P


# ---------------------------------------------------------------------------
# completeness characterisation


def _require_t0(P: PervinSpace):
    if not is_T0(P):
        raise NotT0(repr(P))


def _symmetric_t0_spaces(m: int) -> Iterator[PervinSpace]:
    """Boolean families on m points that separate points, found from all partitions."""
    from .congruence import _set_partitions

    for lab in _set_partitions(m):
        blocks: dict[int, int] = {}
        for x, r in enumerate(lab):
            blocks[r] = blocks.get(r, 0) | (1 << x)
        atoms = list(blocks.values())
        fam = SubsetFamily(m, tuple(mask_of_union(atoms, c) for c in range(1 << len(atoms))))
        Y = PervinSpace(point_names(m), fam)
        if is_T0(Y):
            yield Y


def mask_of_union(atoms: Sequence[int], choice: int) -> int:
    acc = 0
    for i in bits(choice):
        acc |= atoms[i]
    return acc


@dataclass
class SearchStats:
    candidates: int = 0
    extremal_monos: int = 0
    qualifying: int = 0
    counterexamples: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.counterexamples


def search_complete_symmetric(P: PervinSpace, max_points: int) -> SearchStats:
    """Dense extremal monos from the symmetrization into symmetric T0 spaces."""
    X = symmetrize(P)
    st = SearchStats()
    for m in range(X.size, max_points + 1):
        for Y in _symmetric_t0_spaces(m):
            for f in permutations(range(m), X.size):
                if not is_morphism(X, Y, f):
                    continue
                st.candidates += 1
                k = classify_map(PervinMap(X, Y, f))
                if k.extremal_mono:
                    st.extremal_monos += 1
                    if k.dense:
                        st.qualifying += 1
                        if not k.iso:
                            st.counterexamples.append((Y, f))
    return st


def extension_candidates(P: PervinSpace, extra: int) -> Iterator[PervinSpace]:
    """Spaces on X plus ``extra`` new points whose members are S u e(S) for S in the family."""
    n = P.size
    names = P.ground + tuple(f"new{i}" for i in range(extra))
    choices = range(1 << extra)
    for e in product(choices, repeat=len(P.sets)):
        masks = [S | (E << n) for S, E in zip(P.sets, e)]
        fam = SubsetFamily(n + extra, tuple(masks))
        if len(fam) != len(masks) or not fam.is_bounded_sublattice():
            continue
        yield PervinSpace(names, fam)


def search_sym_dense_extensions(P: PervinSpace, max_points: int) -> SearchStats:
    """Extremal monos into T0 spaces whose symmetrization is dense, by inclusion into extensions."""
    st = SearchStats()
    inc = tuple(range(P.size))
    for extra in range(1, max_points - P.size + 1):
        for Y in extension_candidates(P, extra):
            st.candidates += 1
            f = PervinMap(P, Y, inc)
            if not classify_map(f).extremal_mono:
                continue
            st.extremal_monos += 1
            if not is_T0(Y):
                continue
            g = PervinMap(symmetrize(P), symmetrize(Y), inc)
            if classify_map(g).dense:
                st.qualifying += 1
                if not classify_map(f).iso:
                    st.counterexamples.append(Y)
    return st


@dataclass
class CharReport:
    space: PervinSpace
    conditions: dict[int, bool]
    witnesses: dict[int, object]
    bound: int
    stats: dict[int, SearchStats]

    @property
    def consistent(self) -> bool:
        return len(set(self.conditions.values())) == 1

    @property
    def all_true(self) -> bool:
        return all(self.conditions.values())


def _iso_or_search(seed: PervinMap) -> PervinMap | None:
    if classify_map(seed).iso:
        return seed
    return find_pervin_iso(seed.dom, seed.cod)


def theorem_char_report(P: PervinSpace, search_bound: int = 4, extra_points: int = 1) -> CharReport:
    from .frith import FrithPair, pt_functor

    _require_t0(P)
    limit = max(search_bound, P.size + extra_points)
    cond: dict[int, bool] = {}
    wit: dict[int, object] = {}
    stats: dict[int, SearchStats] = {}

    cond[1] = is_cauchy_complete(P)
    wit[1] = len(cauchy_filters(P))

    stats[2] = search_complete_symmetric(P, limit)
    cond[2] = stats[2].passed
    stats[3] = search_sym_dense_extensions(P, limit)
    cond[3] = stats[3].passed

    iso4 = _iso_or_search(neighborhood_map(P))
    cond[4] = iso4 is not None
    wit[4] = iso4

    D = P.lattice
    I, emb = ideal_lattice(D)
    ptP = pt_functor(FrithPair(I, emb.image()))
    iso5 = find_pervin_iso(P, ptP)
    cond[5] = iso5 is not None
    wit[5] = iso5
    # existential conditions, witnessed by the family lattice itself
    cond[6], wit[6] = cond[5], ("family lattice", iso5)
    cond[7], wit[7] = cond[4], ("family lattice", iso4)
    return CharReport(P, cond, wit, limit, stats)


# ---------------------------------------------------------------------------
# lperv-isomorphism characterisations of completeness and T_D


def _family_isos(A: FinLattice, B: FinLattice) -> list[LatticeHom]:
    if A.size != B.size:
        return []
    return [h for h in enumerate_homs(A, B) if h.is_bijective()]


def _map_from_family_iso(src: PervinSpace, dst: PervinSpace, pulled: Sequence[int]) -> PervinMap | None:
    """Point map f: src -> dst with f^{-1}(dst.sets[k]) = src.sets[pulled[k]], if one exists."""
    by_nb = {nb: y for y, nb in enumerate(dst.neighborhoods)}
    f = []
    for x in range(src.size):
        want = mask_of(k for k in range(len(dst.sets)) if (src.sets[pulled[k]] >> x) & 1)
        y = by_nb.get(want)
        if y is None:
            return None
        f.append(y)
    return PervinMap(src, dst, tuple(f))


def lperv_is_iso(f: PervinMap) -> bool:
    return lperv_map(f).is_bijective()


def point_deletion(P: PervinSpace, x: int) -> PervinMap:
    keep = [p for p in range(P.size) if p != x]
    pos = {p: k for k, p in enumerate(keep)}
    sets = {mask_of(pos[p] for p in bits(S) if p != x) for S in P.sets}
    Y = PervinSpace(tuple(P.ground[p] for p in keep), SubsetFamily(len(keep), tuple(sets)))
    return PervinMap(Y, P, tuple(keep))


@dataclass
class BPReport:
    complete_side: bool
    td_side: bool
    complete: bool
    td: bool
    maps_out: int
    maps_in: int
    bound: int

    @property
    def agrees(self) -> bool:
        return self.complete_side == self.complete and self.td_side == self.td


def banaschewski_pultr_check(P: PervinSpace, bound: int = 4) -> BPReport:
    _require_t0(P)
    out_ok, in_ok = True, True
    n_out = n_in = 0
    for m in range(0, bound + 1):
        for Y in pervin_spaces(m, max_family=len(P.sets), t0_only=True):
            if len(Y.sets) != len(P.sets):
                continue
            for phi in _family_isos(P.lattice, Y.lattice):
                # f: P -> Y with lperv(f) = phi^{-1}
                inv = phi.inverse().map
                f = _map_from_family_iso(P, Y, inv)
                if f is not None and lperv_is_iso(f):
                    n_out += 1
                    out_ok &= is_iso(f)
                # g: Y -> P with lperv(g) = phi
                g = _map_from_family_iso(Y, P, phi.map)
                if g is not None and lperv_is_iso(g):
                    n_in += 1
                    in_ok &= is_iso(g)
    for x in range(P.size):
        g = point_deletion(P, x)
        if is_T0(g.dom) and lperv_is_iso(g):
            n_in += 1
            in_ok &= is_iso(g)
    return BPReport(out_ok, in_ok, is_cauchy_complete(P), is_TD(P), n_out, n_in, bound)
