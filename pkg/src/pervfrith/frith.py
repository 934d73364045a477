"""Frith pairs (L, S): a finite distributive lattice with a bounded sublattice.

A pair is a Frith frame when S is join-dense, which at finite size forces
S = L.  Everything here accepts arbitrary bounded sublattices so that the
non-trivial cases stay reachable; ``is_frith`` gates the statements that need
density.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cache, cached_property
from itertools import combinations
from typing import Iterable, Iterator

from . import congruence as cg
from .order import (
    FinLattice,
    InvariantViolation,
    LatticeHom,
    NotDistributive,
    bits,
    complement,
    enumerate_homs,
    filter_generator,
    filters,
    generated_sublattice,
    ideal_lattice,
    ideals,
    is_coherent_pair,
    mask_of,
    prime_filters,
    sublattice,
    subposet,
    validate_lattice,
)
from .order import SubsetFamily
from .pervin import PervinMap, PervinSpace, omega_topology


@dataclass(frozen=True)
class FrithPair:
    lattice: FinLattice
    sub: int

    def __post_init__(self):
        L, S = self.lattice, self.sub
        if not L.distributive:
            raise NotDistributive(repr(L))
        if not (S >> L.bottom) & 1 or not (S >> L.top) & 1:
            raise InvariantViolation("sublattice must contain both bounds")
        for s in bits(S):
            for t in bits(S):
                if not (S >> L.meet[s][t]) & 1 or not (S >> L.join[s][t]) & 1:
                    raise InvariantViolation("sublattice must be closed under meet and join")
        dense = all(L.join_all(s for s in bits(S) if L.leq(s, a)) == a for a in L.elements)
        if dense != (S == (1 << L.size) - 1):
            raise AssertionError("join-density differs from S = L on a finite lattice")

    @classmethod
    def full(cls, L: FinLattice) -> "FrithPair":
        return cls(L, (1 << L.size) - 1)

    @property
    def is_frith(self) -> bool:
        return self.sub == (1 << self.lattice.size) - 1

    @property
    def members(self) -> list[int]:
        return list(bits(self.sub))

    def contains(self, a: int) -> bool:
        return bool((self.sub >> a) & 1)

    @cached_property
    def sub_lattice(self) -> tuple[FinLattice, LatticeHom]:
        return sublattice(self.lattice, self.sub)

    def is_symmetric(self) -> bool:
        L = self.lattice
        return all(
            (c := complement(L, s)) is not None and self.contains(c) for s in bits(self.sub)
        )

    def __repr__(self):
        L = self.lattice
        return f"FrithPair({L!r}; S = {{{', '.join(L.names[s] for s in bits(self.sub))}}})"


@dataclass(frozen=True)
class FrithHom:
    dom: FrithPair
    cod: FrithPair
    hom: LatticeHom

    def __post_init__(self):
        if self.hom.dom != self.dom.lattice or self.hom.cod != self.cod.lattice:
            raise InvariantViolation("underlying hom does not match the pairs")
        if any(not self.cod.contains(self.hom.map[s]) for s in bits(self.dom.sub)):
            raise InvariantViolation("hom does not carry S into T")

    @property
    def map(self) -> tuple[int, ...]:
        return self.hom.map

    def compose(self, inner: "FrithHom") -> "FrithHom":
        return FrithHom(inner.dom, self.cod, self.hom.compose(inner.hom))


def identity_frith(F: FrithPair) -> FrithHom:
    L = F.lattice
    return FrithHom(F, F, LatticeHom(L, L, tuple(L.elements)))


def frith_homs(F: FrithPair, G: FrithPair) -> list[FrithHom]:
    return [
        FrithHom(F, G, h)
        for h in enumerate_homs(F.lattice, G.lattice)
        if all(G.contains(h.map[s]) for s in bits(F.sub))
    ]


@dataclass(frozen=True)
class HomKind:
    mono: bool
    extremal_epi: bool
    dense: bool
    iso: bool


def classify_hom(h: FrithHom) -> HomKind:
    L, M = h.dom.lattice, h.cod.lattice
    mono = h.hom.is_injective()
    extremal = mask_of(h.map[s] for s in bits(h.dom.sub)) == h.cod.sub
    dense = all(a == L.bottom for a in L.elements if h.map[a] == M.bottom)
    # bijective with h[S] = T; for Frith pairs this is injective plus h[S] = T
    iso = mono and h.hom.is_surjective() and extremal
    return HomKind(mono, extremal, dense, iso)


def find_frith_iso(F: FrithPair, G: FrithPair) -> FrithHom | None:
    if F.lattice.size != G.lattice.size or F.sub.bit_count() != G.sub.bit_count():
        return None
    for h in frith_homs(F, G):
        if classify_hom(h).iso:
            return h
    return None


# ---------------------------------------------------------------------------
# points and opens


@cache
def points(L: FinLattice) -> tuple[LatticeHom, ...]:
    """Homs L -> 2, checked against the prime filters of L."""
    from .catalog import C2

    two = C2()
    homs = enumerate_homs(L, two)
    got = sorted(mask_of(a for a in L.elements if p.map[a] == two.top) for p in homs)
    if tuple(got) != prime_filters(L):
        raise AssertionError("points disagree with prime filters")
    return tuple(sorted(homs, key=lambda p: mask_of(a for a in L.elements if p.map[a] == two.top)))


def _point_name(L: FinLattice, p: LatticeHom) -> str:
    F = mask_of(a for a in L.elements if p.map[a] == p.cod.top)
    return "^" + L.names[filter_generator(L, F)]


def hat(L: FinLattice, a: int) -> int:
    return mask_of(k for k, p in enumerate(points(L)) if p.map[a] == p.cod.top)


def pt_functor(F: FrithPair) -> PervinSpace:
    return _pt_functor(F, F.lattice.names)


@cache
def _pt_functor(F: FrithPair, names: tuple[str, ...]) -> PervinSpace:
    # pairs compare equal across renamings; the names key keeps point labels right
    L = F.lattice
    pts = points(L)
    names = tuple(_point_name(L, p) for p in pts)
    fam = SubsetFamily(len(pts), tuple(hat(L, s) for s in bits(F.sub)))
    return PervinSpace(names, fam)


def pt_map(h: FrithHom) -> PervinMap:
    """pt(M, T) -> pt(L, S) by precomposition, for h: (L, S) -> (M, T)."""
    L, M = h.dom.lattice, h.cod.lattice
    ptsL, ptsM = points(L), points(M)
    pos = {p.map: k for k, p in enumerate(ptsL)}
    f = tuple(pos[tuple(q.map[h.map[a]] for a in L.elements)] for q in ptsM)
    return PervinMap(pt_functor(h.cod), pt_functor(h.dom), f)


@cache
def omega_functor(P: PervinSpace) -> FrithPair:
    opens = omega_topology(P)
    L = opens.lattice(P.ground)
    return FrithPair(L, mask_of(opens.index(S) for S in P.sets))


def omega_map(f: PervinMap) -> FrithHom:
    """Omega(Q) -> Omega(P) by preimage, for f: P -> Q."""
    P, Q = f.dom, f.cod
    OP, OQ = omega_functor(P), omega_functor(Q)
    opP, opQ = omega_topology(P), omega_topology(Q)
    h = LatticeHom(OQ.lattice, OP.lattice, tuple(opP.index(f.preimage(U)) for U in opQ))
    return FrithHom(OQ, OP, h)


def omega_pt_unit(P: PervinSpace) -> PervinMap:
    """x to the point U |-> [x in U] of Omega(P)."""
    opens = omega_topology(P)
    OP = omega_functor(P)
    L = OP.lattice
    pts = points(L)
    pos = {p.map: k for k, p in enumerate(pts)}
    f = tuple(pos[tuple(int((U >> x) & 1) for U in opens)] for x in range(P.size))
    return PervinMap(P, pt_functor(OP), f)


def omega_pt_counit(F: FrithPair) -> FrithHom:
    """a to the set of points sending it to 1, as a hom F -> Omega(pt F)."""
    P = pt_functor(F)
    OP = omega_functor(P)
    opens = omega_topology(P)
    L = F.lattice
    h = LatticeHom(L, OP.lattice, tuple(opens.index(hat(L, a)) for a in L.elements))
    return FrithHom(F, OP, h)


@dataclass
class DualAdjunctionReport:
    perv_side: int
    frame_side: int
    bijection: bool
    triangles: bool

    @property
    def passed(self) -> bool:
        return self.bijection and self.triangles


def dual_adjunction_check(P: PervinSpace, F: FrithPair) -> DualAdjunctionReport:
    from .pervin import pervin_maps

    ptF = pt_functor(F)
    OP = omega_functor(P)
    opens = omega_topology(P)
    L = F.lattice
    pts = points(L)
    left = pervin_maps(P, ptF)
    right = frith_homs(F, OP)

    def transpose(f: PervinMap) -> tuple[int, ...]:
        return tuple(
            opens.index(mask_of(x for x in range(P.size) if pts[f.map[x]].map[a] == 1))
            for a in L.elements
        )

    def untranspose(h: FrithHom) -> tuple[int, ...]:
        pos = {p.map: k for k, p in enumerate(pts)}
        return tuple(
            pos[tuple(int((opens.members[h.map[a]] >> x) & 1) for a in L.elements)]
            for x in range(P.size)
        )

    fwd = {f.map: transpose(f) for f in left}
    right_maps = {h.map for h in right}
    bij = (
        len(left) == len(right)
        and set(fwd.values()) == right_maps
        and all(untranspose(FrithHom(F, OP, LatticeHom(L, OP.lattice, t))) == f for f, t in fwd.items())
    )
    # pt(counit_F) after unit_{pt F} is the identity of pt F
    t1 = pt_map(omega_pt_counit(F)).compose(omega_pt_unit(ptF)).map == tuple(range(ptF.size))
    # Omega(unit_P) after counit_{Omega P} is the identity of Omega P
    t2 = omega_map(omega_pt_unit(P)).compose(omega_pt_counit(OP)).map == tuple(OP.lattice.elements)
    return DualAdjunctionReport(len(left), len(right), bij, t1 and t2)


# ---------------------------------------------------------------------------
# symmetrisation via congruences


@dataclass(frozen=True)
class Symmetrization:
    pair: FrithPair
    congruences: cg.CongruenceLattice
    unit: FrithHom


def fsym(F: FrithPair, size_bound: int = cg.DEFAULT_SIZE_BOUND) -> Symmetrization:
    L = F.lattice
    C = cg.generated_congruence_subframe(L, F.members, size_bound)
    K = C.lattice
    nab = C.nabla_map()
    gens = []
    for s in bits(F.sub):
        gens.append(nab.map[s])
        gens.append(C.position(cg.delta(L, s)))
    B = FrithPair(K, generated_sublattice(K, gens))
    if not B.is_symmetric():
        raise AssertionError("symmetrised sublattice is not Boolean")
    return Symmetrization(B, C, FrithHom(F, B, nab))


def fsym_map(h: FrithHom) -> FrithHom:
    """The unique extension of unit_M after h along unit_L."""
    sL, sM = fsym(h.dom), fsym(h.cod)
    through = sM.unit.hom.compose(h.hom)
    ext = cg.universal_extension(through, h.dom.members, sL.congruences)
    return FrithHom(sL.pair, sM.pair, ext)


@dataclass
class FactorizationReport:
    homs: int
    unique: bool


def fsym_adjunction_check(F: FrithPair, targets: Iterable[FrithPair]) -> FactorizationReport:
    """Every hom into a symmetric pair factors uniquely through the unit."""
    s = fsym(F)
    n, ok = 0, True
    for G in targets:
        if not G.is_symmetric():
            continue
        lifts = frith_homs(s.pair, G)
        for h in frith_homs(F, G):
            n += 1
            hits = [g for g in lifts if g.hom.compose(s.unit.hom).map == h.map]
            ok &= len(hits) == 1
    return FactorizationReport(n, ok)


# ---------------------------------------------------------------------------
# ideal completion


def lfrith(F: FrithPair) -> FinLattice:
    return F.sub_lattice[0]


def lfrith_map(h: FrithHom) -> LatticeHom:
    """Restriction S -> T."""
    Ssub, Sinc = h.dom.sub_lattice
    Tsub, Tinc = h.cod.sub_lattice
    pos = {t: k for k, t in enumerate(Tinc.map)}
    return LatticeHom(Ssub, Tsub, tuple(pos[h.map[s]] for s in Sinc.map))


def idlf(D: FinLattice) -> FrithPair:
    return _idlf(D, D.names)


@cache
def _idlf(D: FinLattice, names: tuple[str, ...]) -> FrithPair:
    I, emb = ideal_lattice(D)
    return FrithPair(I, emb.image())


def idlf_map(h: LatticeHom) -> FrithHom:
    """Idl(D) -> Idl(E), J to the ideal generated by h[J]."""
    D, E = h.dom, h.cod
    idsD, idsE = ideals(D), ideals(E)
    posE = {J: k for k, J in enumerate(idsE)}
    f = []
    for J in idsD:
        top = E.join_all(h.map[d] for d in bits(J))
        f.append(posE[E.poset.down[top]])
    IF, IG = idlf(D), idlf(E)
    return FrithHom(IF, IG, LatticeHom(IF.lattice, IG.lattice, tuple(f)))


def idlf_unit(D: FinLattice) -> LatticeHom:
    """d to its principal ideal, landing in the distinguished sublattice of idlf(D)."""
    F = idlf(D)
    Ssub, Sinc = F.sub_lattice
    _, emb = ideal_lattice(D)
    pos = {x: k for k, x in enumerate(Sinc.map)}
    return LatticeHom(D, Ssub, tuple(pos[emb.map[d]] for d in D.elements))


def completion(F: FrithPair) -> tuple[FrithPair, FrithHom]:
    """(Idl(S), principal ideals) with the map J |-> join of J into (L, S)."""
    L = F.lattice
    Ssub, Sinc = F.sub_lattice
    idsS = ideals(Ssub)
    I, emb = ideal_lattice(Ssub)
    G = FrithPair(I, emb.image())
    c = LatticeHom(I, L, tuple(L.join_all(Sinc.map[s] for s in bits(J)) for J in idsS))
    h = FrithHom(G, F, c)
    kind = classify_hom(h)
    if not (kind.dense and kind.extremal_epi):
        raise AssertionError("completion map is not a dense extremal epi")
    return G, h


def is_complete_by_coherence(F: FrithPair) -> bool:
    return is_coherent_pair(F.lattice, F.sub)


def is_complete_by_ideals(F: FrithPair) -> bool:
    """Some iso Idl(S) -> L sends each principal ideal of s to s."""
    G, c = completion(F)
    I, L = G.lattice, F.lattice
    if I.size != L.size:
        return False
    Ssub, Sinc = F.sub_lattice
    _, emb = ideal_lattice(Ssub)
    for h in enumerate_homs(I, L):
        if h.is_bijective() and all(h.map[emb.map[k]] == s for k, s in enumerate(Sinc.map)):
            return True
    return False


def symmetric_frith_frames(max_size: int) -> Iterator[FrithPair]:
    """(B, B) for every Boolean lattice B with at most ``max_size`` elements."""
    from .enumeration import distributive_lattices

    for M in distributive_lattices(max_size):
        G = FrithPair.full(M)
        if G.is_symmetric():
            yield G


def is_complete_by_definition(F: FrithPair, bound: int) -> bool:
    """No non-iso dense extremal epi onto fsym(F) from a symmetric Frith frame
    with at most max(bound, |fsym F|) elements."""
    target = fsym(F).pair
    limit = max(bound, target.lattice.size)
    for G in symmetric_frith_frames(limit):
        for h in frith_homs(G, target):
            k = classify_hom(h)
            if k.dense and k.extremal_epi and not k.iso:
                return False
    return True


def is_complete(F: FrithPair, bound: int | None = None) -> bool:
    a = is_complete_by_coherence(F)
    b = is_complete_by_ideals(F)
    if a != b:
        raise AssertionError(f"completeness routes disagree on {F!r}")
    # the definition is phrased for Frith frames only
    if bound is not None and F.is_frith and is_complete_by_definition(F, bound) != a:
        raise AssertionError(f"definitional completeness disagrees on {F!r}")
    return a


# ---------------------------------------------------------------------------
# strong exactness


def strongly_exact_meets(F: FrithPair, size_bound: int = cg.DEFAULT_SIZE_BOUND) -> int:
    """Elements a = meet(P), P a subset of S, whose open congruences join to an open one."""
    L = F.lattice
    if L.size > size_bound:
        raise cg.SizeExceeded(f"lattice has {L.size} elements, bound is {size_bound}")
    deltas = {a: cg.delta(L, a) for a in L.elements}
    opens = {th.label: a for a, th in deltas.items()}
    out = 0
    S = F.members
    for r in range(len(S) + 1):
        for P in combinations(S, r):
            j = cg.congruence_join([deltas[s] for s in P], L)
            a = opens.get(j.label)
            if a is None:
                continue
            if a != L.meet_all(P):
                raise AssertionError("open join is not the delta of the meet")
            out |= 1 << a
    return out


def is_strongly_exact(F: FrithPair) -> bool:
    return strongly_exact_meets(F) & ~F.sub == 0


@dataclass(frozen=True)
class ScottFilter:
    lattice: FinLattice
    members: int


def _directed_subsets(L: FinLattice) -> Iterator[list[int]]:
    for D in range(1, 1 << L.size):
        ms = list(bits(D))
        if all(any(L.leq(x, z) and L.leq(y, z) for z in ms) for x in ms for y in ms):
            yield ms


def is_scott_open(F: ScottFilter) -> bool:
    L, m = F.lattice, F.members
    if not m or (m >> L.bottom) & 1 or m not in filters(L):
        return False
    for D in _directed_subsets(L):
        if (m >> L.join_all(D)) & 1 and not any((m >> d) & 1 for d in D):
            return False
    return True


@dataclass
class ScottReport:
    filters: int
    all_scott_open: bool
    closed_under_sem: bool


def scott_strong_exact_check(L: FinLattice) -> ScottReport:
    F = FrithPair.full(L)
    sem = strongly_exact_meets(F)
    proper = [m for m in filters(L) if not (m >> L.bottom) & 1]
    scott = all(is_scott_open(ScottFilter(L, m)) for m in proper)
    closed = True
    for m in proper:
        ms = list(bits(m))
        for r in range(len(ms) + 1):
            for P in combinations(ms, r):
                a = L.meet_all(P)
                if (sem >> a) & 1 and not (m >> a) & 1:
                    closed = False
    return ScottReport(len(proper), scott, closed)


# ---------------------------------------------------------------------------
# sublocales


def generated_sublocale(L: FinLattice, G: Iterable[int]) -> int:
    """Least subset containing G closed under all meets and under a -> x for every a."""
    if not L.distributive:
        raise NotDistributive(repr(L))
    have = set(G) | {L.top}
    changed = True
    while changed:
        changed = False
        for x in list(have):
            for a in L.elements:
                y = L.arrow[a][x]
                if y not in have:
                    have.add(y)
                    changed = True
            for y in list(have):
                z = L.meet[x][y]
                if z not in have:
                    have.add(z)
                    changed = True
    return mask_of(have)


def locale_meet_formula(L: FinLattice, S: Iterable[int], a: int) -> int:
    S = list(S)
    return L.meet_all(
        L.arrow[b][s] for b in L.elements for s in S if L.leq(a, L.arrow[b][s])
    )


def is_locale_based(F: FrithPair) -> bool:
    L = F.lattice
    K = generated_sublocale(L, F.members)
    by_closure = K == (1 << L.size) - 1
    by_formula = all(locale_meet_formula(L, F.members, a) == a for a in L.elements)
    if by_closure != by_formula:
        raise AssertionError(f"sublocale routes disagree on {F!r}")
    return by_closure


def sublocale_quotient(F: FrithPair) -> FrithHom:
    """L onto its least sublocale containing S, x to the least member above it."""
    L = F.lattice
    K = generated_sublocale(L, F.members)
    Kl = validate_lattice(subposet(L.poset, K))
    idx = list(bits(K))
    pos = {k: i for i, k in enumerate(idx)}
    q = tuple(pos[L.meet_all(k for k in idx if L.leq(x, k))] for x in L.elements)
    Kpair = FrithPair(Kl, mask_of(pos[s] for s in F.members))
    return FrithHom(F, Kpair, LatticeHom(L, Kl, q))


# ---------------------------------------------------------------------------
# adjoints


def right_adjoint(h: LatticeHom) -> tuple[int, ...]:
    L, M = h.dom, h.cod
    return tuple(L.join_all(x for x in L.elements if M.leq(h.map[x], y)) for y in M.elements)


def frobenius_check(h: LatticeHom) -> bool:
    """a -> h_*(x) = h_*(h(a) -> x), and h(a -> b) <= h(a) -> h(b)."""
    L, M = h.dom, h.cod
    r = right_adjoint(h)
    frob = all(
        L.arrow[a][r[x]] == r[M.arrow[h.map[a]][x]] for a in L.elements for x in M.elements
    )
    ineq = all(
        M.leq(h.map[L.arrow[a][b]], M.arrow[h.map[a]][h.map[b]])
        for a in L.elements for b in L.elements
    )
    return frob and ineq


# ---------------------------------------------------------------------------
# lfrith-isomorphism characterisations of completeness and locale-basedness


@dataclass
class FrameBPReport:
    complete_side: bool
    locale_based_side: bool
    complete: bool
    locale_based: bool
    maps_in: int
    maps_out: int
    bound: int

    @property
    def agrees(self) -> bool:
        return self.complete_side == self.complete and self.locale_based_side == self.locale_based


def _counterpart_frames(size: int, sub_size: int) -> Iterator[FrithPair]:
    """Frith frames (M, M) whose distinguished part can be isomorphic to a sublattice of ``sub_size`` elements."""
    from .enumeration import distributive_lattices

    for M in distributive_lattices(size):
        if M.size == sub_size:
            yield FrithPair.full(M)


def frith_banaschewski_check(F: FrithPair, bound: int = 4) -> FrameBPReport:
    L = F.lattice
    limit = max(bound, L.size)
    k = F.sub.bit_count()
    in_ok = out_ok = True
    n_in = n_out = 0
    for G in _counterpart_frames(limit, k):
        for h in frith_homs(G, F):
            if lfrith_map(h).is_bijective():
                n_in += 1
                in_ok &= classify_hom(h).iso
        for h in frith_homs(F, G):
            if lfrith_map(h).is_bijective():
                n_out += 1
                out_ok &= classify_hom(h).iso
    q = sublocale_quotient(F)
    if lfrith_map(q).is_bijective():
        n_out += 1
        out_ok &= classify_hom(q).iso
    return FrameBPReport(in_ok, out_ok, is_complete(F), is_locale_based(F), n_in, n_out, bound)
