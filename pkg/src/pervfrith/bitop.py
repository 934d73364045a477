"""Bispaces, biframes and the Skula functors between them and Pervin spaces / Frith pairs."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Iterable, Sequence

from . import congruence as cg
from .frith import (
    FrithHom,
    FrithPair,
    points,
    strongly_exact_meets,
)
from .order import (
    FinLattice,
    InvariantViolation,
    LatticeHom,
    SubsetFamily,
    bits,
    complement,
    enumerate_homs,
    generated_sublattice,
    is_compact_element,
    mask_of,
    set_name,
    sublattice,
    union_intersection_closure,
)
from .pervin import PervinMap, PervinSpace, omega_topology, open_intersection_closure


def _is_topology(fam: SubsetFamily) -> bool:
    return fam.is_bounded_sublattice()


@dataclass(frozen=True)
class BiSpace:
    ground: tuple[str, ...]
    opens_pos: SubsetFamily
    opens_neg: SubsetFamily

    def __post_init__(self):
        n = len(self.ground)
        for fam in (self.opens_pos, self.opens_neg):
            if fam.ground_size != n:
                raise InvariantViolation("topology is over a different ground set")
            if not _is_topology(fam):
                raise InvariantViolation("each component must be a topology")

    @property
    def size(self) -> int:
        return len(self.ground)

    @property
    def full(self) -> int:
        return (1 << self.size) - 1

    def __repr__(self):
        pos = ", ".join(set_name(U, self.ground) for U in self.opens_pos)
        neg = ", ".join(set_name(U, self.ground) for U in self.opens_neg)
        return f"BiSpace({{{', '.join(self.ground)}}}; +: {pos}; -: {neg})"


@dataclass(frozen=True)
class BiMap:
    dom: BiSpace
    cod: BiSpace
    map: tuple[int, ...]

    def __post_init__(self):
        for src, dst in ((self.cod.opens_pos, self.dom.opens_pos), (self.cod.opens_neg, self.dom.opens_neg)):
            for U in src:
                if self.preimage(U) not in dst:
                    raise InvariantViolation("map is not continuous for both topologies")

    def preimage(self, U: int) -> int:
        return mask_of(x for x, y in enumerate(self.map) if (U >> y) & 1)

    def is_homeomorphism(self) -> bool:
        if sorted(self.map) != list(range(self.cod.size)):
            return False
        img = lambda U: mask_of(self.map[x] for x in bits(U))  # noqa: E731
        return {img(U) for U in self.dom.opens_pos} == set(self.cod.opens_pos) and {
            img(U) for U in self.dom.opens_neg
        } == set(self.cod.opens_neg)

    def compose(self, inner: "BiMap") -> "BiMap":
        return BiMap(inner.dom, self.cod, tuple(self.map[y] for y in inner.map))


def bispace_maps(X: BiSpace, Y: BiSpace) -> list[BiMap]:
    out = []
    for f in product(range(Y.size), repeat=X.size):
        pre = lambda U: mask_of(x for x, y in enumerate(f) if (U >> y) & 1)  # noqa: E731
        if all(pre(U) in X.opens_pos for U in Y.opens_pos) and all(
            pre(U) in X.opens_neg for U in Y.opens_neg
        ):
            out.append(BiMap(X, Y, f))
    return out


def patch(X: BiSpace) -> SubsetFamily:
    return union_intersection_closure(X.size, [*X.opens_pos, *X.opens_neg])


def pos_clopens(X: BiSpace) -> SubsetFamily:
    return SubsetFamily(X.size, tuple(U for U in X.opens_pos if X.full & ~U in X.opens_neg))


def neg_clopens(X: BiSpace) -> SubsetFamily:
    return SubsetFamily(X.size, tuple(U for U in X.opens_neg if X.full & ~U in X.opens_pos))


def _unions_cover(fam: Iterable[int], gens: Sequence[int]) -> bool:
    return all(U == _union(g for g in gens if g & ~U == 0) for U in fam)


def _union(ms: Iterable[int]) -> int:
    acc = 0
    for m in ms:
        acc |= m
    return acc


def is_zero_dimensional(X: BiSpace) -> bool:
    return _unions_cover(X.opens_pos, pos_clopens(X).members) and _unions_cover(
        X.opens_neg, neg_clopens(X).members
    )


def is_T0_bispace(X: BiSpace) -> bool:
    opens = patch(X).members
    sig = {mask_of(k for k, U in enumerate(opens) if (U >> x) & 1) for x in range(X.size)}
    return len(sig) == X.size


def is_compact_bispace(X: BiSpace) -> bool:
    """Every directed family of patch opens covering X contains X."""
    L = patch(X).lattice()
    return is_compact_element(L, L.top)


# ---------------------------------------------------------------------------
# biframes


@dataclass(frozen=True)
class BiFrame:
    main: FinLattice
    pos: int
    neg: int

    def __post_init__(self):
        L = self.main
        for part in (self.pos, self.neg):
            if generated_sublattice(L, bits(part)) != part:
                raise InvariantViolation("components must be bounded sublattices")
        # every element is a join of finite meets of positive and negative elements
        meets = {L.top}
        for g in bits(self.pos | self.neg):
            meets |= {L.meet[m][g] for m in meets}
        for a in L.elements:
            if L.join_all(m for m in meets if L.leq(m, a)) != a:
                raise InvariantViolation(f"{L.names[a]} is not a join of finite meets of components")

    @property
    def pos_members(self) -> list[int]:
        return list(bits(self.pos))

    @property
    def neg_members(self) -> list[int]:
        return list(bits(self.neg))

    def __repr__(self):
        L = self.main
        pos = ", ".join(L.names[a] for a in bits(self.pos))
        neg = ", ".join(L.names[a] for a in bits(self.neg))
        return f"BiFrame({L!r}; +: {pos}; -: {neg})"


@dataclass(frozen=True)
class BiHom:
    dom: BiFrame
    cod: BiFrame
    hom: LatticeHom

    def __post_init__(self):
        f = self.hom.map
        if any(not (self.cod.pos >> f[a]) & 1 for a in bits(self.dom.pos)):
            raise InvariantViolation("hom does not preserve the positive part")
        if any(not (self.cod.neg >> f[a]) & 1 for a in bits(self.dom.neg)):
            raise InvariantViolation("hom does not preserve the negative part")

    def is_iso(self) -> bool:
        f = self.hom.map
        return (
            self.hom.is_bijective()
            and mask_of(f[a] for a in bits(self.dom.pos)) == self.cod.pos
            and mask_of(f[a] for a in bits(self.dom.neg)) == self.cod.neg
        )

    def is_dense(self) -> bool:
        L, M = self.dom.main, self.cod.main
        return all(a == L.bottom for a in L.elements if self.hom.map[a] == M.bottom)


def biframe_homs(A: BiFrame, B: BiFrame) -> list[BiHom]:
    out = []
    for h in enumerate_homs(A.main, B.main):
        if all((B.pos >> h.map[a]) & 1 for a in bits(A.pos)) and all(
            (B.neg >> h.map[a]) & 1 for a in bits(A.neg)
        ):
            out.append(BiHom(A, B, h))
    return out


def pos_bicomplemented(B: BiFrame) -> int:
    L = B.main
    return mask_of(
        a for a in bits(B.pos) if (c := complement(L, a)) is not None and (B.neg >> c) & 1
    )


def neg_bicomplemented(B: BiFrame) -> int:
    L = B.main
    return mask_of(
        a for a in bits(B.neg) if (c := complement(L, a)) is not None and (B.pos >> c) & 1
    )


def _join_generated(L: FinLattice, part: int, gens: int) -> bool:
    return all(L.join_all(g for g in bits(gens) if L.leq(g, a)) == a for a in bits(part))


def is_zero_dimensional_biframe(B: BiFrame) -> bool:
    L = B.main
    return _join_generated(L, B.pos, pos_bicomplemented(B)) and _join_generated(
        L, B.neg, neg_bicomplemented(B)
    )


def is_compact_biframe(B: BiFrame) -> bool:
    return is_compact_element(B.main, B.main.top)


def omega_b(X: BiSpace) -> BiFrame:
    P = patch(X)
    L = P.lattice(X.ground)
    return BiFrame(L, mask_of(P.index(U) for U in X.opens_pos), mask_of(P.index(U) for U in X.opens_neg))


def pt_b(B: BiFrame) -> BiSpace:
    L = B.main
    pts = points(L)
    names = tuple("^" + L.names[_generator(L, p)] for p in pts)
    hat = lambda a: mask_of(k for k, p in enumerate(pts) if p.map[a] == 1)  # noqa: E731
    return BiSpace(
        names,
        SubsetFamily(len(pts), tuple(hat(a) for a in bits(B.pos))),
        SubsetFamily(len(pts), tuple(hat(a) for a in bits(B.neg))),
    )


def _generator(L: FinLattice, p: LatticeHom) -> int:
    return L.meet_all(a for a in L.elements if p.map[a] == 1)


# ---------------------------------------------------------------------------
# Skula functors


def skula_space(P: PervinSpace) -> BiSpace:
    comps = [P.full & ~S for S in P.sets]
    return BiSpace(P.ground, omega_topology(P), union_intersection_closure(P.size, comps))


def skula_map(f: PervinMap) -> BiMap:
    return BiMap(skula_space(f.dom), skula_space(f.cod), f.map)


def clplus(X: BiSpace) -> PervinSpace:
    return PervinSpace(X.ground, pos_clopens(X))


def clplus_map(f: BiMap) -> PervinMap:
    return PervinMap(clplus(f.dom), clplus(f.cod), f.map)


def skula_unit(X: BiSpace) -> BiMap:
    """Identity points X -> Sk(cl+(X))."""
    return BiMap(X, skula_space(clplus(X)), tuple(range(X.size)))


def skula_counit(P: PervinSpace) -> PervinMap:
    """Identity points cl+(Sk(P)) -> P; its domain family is the open-intersection closure."""
    Q = clplus(skula_space(P))
    if set(Q.sets) != set(open_intersection_closure(P)):
        raise AssertionError("positive clopens of the Skula bispace differ from open intersections")
    return PervinMap(Q, P, tuple(range(P.size)))


@dataclass
class SkulaReport:
    unit_ok: bool
    counit_ok: bool
    triangles: bool
    idempotent: bool
    fix_bispace: bool
    fix_pervin: bool


def skula_adjunction_check(X: BiSpace, P: PervinSpace) -> SkulaReport:
    from .pervin import is_strongly_exact

    eta = skula_unit(X)
    eps = skula_counit(P)
    # Sk(eps_P) after eta_{Sk P} is the identity; eps_{cl+ X} after cl+(eta_X) is the identity
    SkP = skula_space(P)
    t1 = skula_map(eps).compose(skula_unit(SkP)).map == tuple(range(P.size))
    t2 = skula_counit(clplus(X)).compose(clplus_map(eta)).map == tuple(range(X.size))
    idem = skula_unit(SkP).is_homeomorphism()
    fix_x = skula_unit(X).is_homeomorphism() == is_zero_dimensional(X)
    c = skula_counit(P)
    fix_p = (set(c.dom.sets) == set(P.sets)) == is_strongly_exact(P)
    return SkulaReport(True, True, t1 and t2, idem, fix_x, fix_p)


def skula_biframe(F: FrithPair) -> tuple[BiFrame, cg.CongruenceLattice]:
    L = F.lattice
    C = cg.generated_congruence_subframe(L, F.members)
    K = C.lattice
    pos = mask_of(C.position(cg.nabla(L, a)) for a in L.elements)
    neg = generated_sublattice(K, [C.position(cg.delta(L, s)) for s in F.members])
    return BiFrame(K, pos, neg), C


def skula_biframe_map(h: FrithHom) -> BiHom:
    A, CA = skula_biframe(h.dom)
    B, CB = skula_biframe(h.cod)
    through = CB.nabla_map().compose(h.hom)
    ext = cg.universal_extension(through, h.dom.members, CA)
    return BiHom(A, B, ext)


def bbplus(B: BiFrame) -> tuple[FrithPair, LatticeHom]:
    """(subframe generated by positive bicomplemented elements, those elements), with its inclusion."""
    L = B.main
    bb = pos_bicomplemented(B)
    M = generated_sublattice(L, bits(bb))
    Ml, inc = sublattice(L, M)
    pos = {x: k for k, x in enumerate(inc.map)}
    return FrithPair(Ml, mask_of(pos[a] for a in bits(bb))), inc


def bbplus_map(h: BiHom) -> FrithHom:
    FA, incA = bbplus(h.dom)
    FB, incB = bbplus(h.cod)
    pos = {x: k for k, x in enumerate(incB.map)}
    f = tuple(pos[h.hom.map[x]] for x in incA.map)
    return FrithHom(FA, FB, LatticeHom(FA.lattice, FB.lattice, f))


def fsk_unit(F: FrithPair) -> FrithHom:
    """a to nabla(a), into bb+(Sk_f(F))."""
    B, C = skula_biframe(F)
    G, inc = bbplus(B)
    pos = {x: k for k, x in enumerate(inc.map)}
    f = tuple(pos[C.position(cg.nabla(F.lattice, a))] for a in F.lattice.elements)
    return FrithHom(F, G, LatticeHom(F.lattice, G.lattice, f))


def fsk_counit(B: BiFrame) -> BiHom:
    """Sk_f(bb+(B)) -> B, the extension of the inclusion of bb+(B) into the main frame."""
    G, inc = bbplus(B)
    SB, C = skula_biframe(G)
    ext = cg.universal_extension(inc, G.members, C)
    return BiHom(SB, B, ext)


@dataclass
class FskReport:
    unit_is_nabla: bool
    counit_dense: bool
    counit_iso_when_expected: bool
    bicomplemented_lemma: bool
    triangles: bool


def fsk_adjunction_check(F: FrithPair, B: BiFrame) -> FskReport:
    """Checks at the pair F and the biframe B."""
    unit = fsk_unit(F)
    eps = fsk_counit(B)
    exp_iso = is_compact_biframe(B) and is_zero_dimensional_biframe(B)
    iso_ok = eps.is_iso() if exp_iso else True
    # nabla(a) is positive bicomplemented exactly for a in sem S
    SB, C = skula_biframe(F)
    bic = pos_bicomplemented(SB)
    sem = strongly_exact_meets(F)
    lemma = all(
        bool((bic >> C.position(cg.nabla(F.lattice, a))) & 1) == bool((sem >> a) & 1)
        for a in F.lattice.elements
    )
    # bb+(eps_B) after unit_{bb+ B} is the identity; eps_{Sk_f F} after Sk_f(unit_F) is the identity
    GB, _ = bbplus(B)
    t1 = bbplus_map(eps).compose(fsk_unit(GB)).map == tuple(GB.lattice.elements)
    t2 = fsk_counit(SB).hom.compose(skula_biframe_map(unit).hom).map == tuple(SB.main.elements)
    return FskReport(True, eps.is_dense(), iso_ok, lemma, t1 and t2)


# ---------------------------------------------------------------------------
# the commuting squares


def beta(F: FrithPair) -> BiMap:
    """Points of L to points of its Skula biframe, p to its extension along nabla."""
    from .frith import pt_functor

    L = F.lattice
    SB, C = skula_biframe(F)
    src = skula_space(pt_functor(F))
    dst = pt_b(SB)
    tgt = {p.map: k for k, p in enumerate(points(SB.main))}
    f = []
    for p in points(L):
        ext = cg.universal_extension(p, F.members, C)
        f.append(tgt[ext.map])
    return BiMap(src, dst, tuple(f))


def beta_natural(h: FrithHom) -> bool:
    """The square over h: (M, T) -> (L, S) commutes pointwise."""
    M, L = h.dom, h.cod
    ptsL = points(L.lattice)
    ptsM = points(M.lattice)
    SM, CM = skula_biframe(M)
    SL, CL = skula_biframe(L)
    skh = skula_biframe_map(h).hom
    posM = {p.map: k for k, p in enumerate(points(SM.main))}
    bL, bM = beta(L), beta(M)
    ptsSL = points(SL.main)
    ptm = {p.map: k for k, p in enumerate(ptsM)}
    for i, p in enumerate(ptsL):
        via_top = posM[tuple(ptsSL[bL.map[i]].map[skh.map[x]] for x in SM.main.elements)]
        q = ptm[tuple(p.map[h.hom.map[x]] for x in M.lattice.elements)]
        if via_top != bM.map[q]:
            return False
    return True


def three_three_two() -> BiFrame:
    from .catalog import C3

    L = C3()
    return BiFrame(L, 0b111, 0b101)


@dataclass
class SquareReport:
    left_square: bool
    beta_iso: bool
    beta_natural: bool
    points_pt_bb: int
    points_cl_ptb: int


def left_square(X: BiSpace) -> bool:
    """bb+ of Omega_b(X) and Omega of cl+(X) agree as Frith pairs."""
    from .frith import find_frith_iso, omega_functor

    G, _ = bbplus(omega_b(X))
    return find_frith_iso(G, omega_functor(clplus(X))) is not None


def square_checks(
    spaces: Iterable[BiSpace], pairs: Iterable[FrithPair], homs: Iterable[FrithHom] = ()
) -> SquareReport:
    from .frith import pt_functor

    left = all(left_square(X) for X in spaces)
    biso = all(beta(F).is_homeomorphism() for F in pairs)
    nat = all(beta_natural(h) for h in homs)
    B = three_three_two()
    n1 = pt_functor(bbplus(B)[0]).size
    n2 = clplus(pt_b(B)).size
    return SquareReport(left, biso, nat, n1, n2)


# ---------------------------------------------------------------------------
# the monotopological case


def in_perv_prime(P: PervinSpace) -> bool:
    Sk = skula_space(P)
    return set(Sk.opens_pos) == set(Sk.opens_neg)


def in_ffrm_prime(F: FrithPair) -> bool:
    B, _ = skula_biframe(F)
    return B.pos == B.neg


def clopen_algebra(P: PervinSpace) -> PervinSpace:
    """(X, clopens of the topology generated by the family)."""
    tau = omega_topology(P)
    return PervinSpace(P.ground, SubsetFamily(P.size, tuple(U for U in tau if P.full & ~U in tau)))


def complemented_pair(L: FinLattice) -> FrithPair:
    """(subframe generated by the complemented elements, the complemented elements)."""
    comp = mask_of(a for a in L.elements if complement(L, a) is not None)
    M = generated_sublattice(L, bits(comp))
    Ml, inc = sublattice(L, M)
    pos = {x: k for k, x in enumerate(inc.map)}
    return FrithPair(Ml, mask_of(pos[a] for a in bits(comp)))


def is_zero_dimensional_frame(L: FinLattice) -> bool:
    comp = [a for a in L.elements if complement(L, a) is not None]
    return all(L.join_all(c for c in comp if L.leq(c, a)) == a for a in L.elements)


def is_boolean(L: FinLattice) -> bool:
    return all(complement(L, a) is not None for a in L.elements)


@dataclass
class MonoReport:
    perv_prime: bool
    ffrm_prime: bool
    zero_dim_iff_boolean: bool
    fixpoints_symmetric: bool


def mono_restrictions(P: PervinSpace, F: FrithPair) -> MonoReport:
    from .pervin import is_strongly_exact, is_symmetric

    L = F.lattice
    zd = is_zero_dimensional_frame(L) == is_boolean(L)
    # a strongly exact member of Perv' is symmetric
    fix = True
    if in_perv_prime(P) and is_strongly_exact(P):
        fix &= is_symmetric(P)
    if in_ffrm_prime(F):
        fix &= F.is_symmetric()
    return MonoReport(in_perv_prime(P), in_ffrm_prime(F), zd, fix)


def catalog_bispaces() -> dict[str, BiSpace]:
    from .catalog import PERVIN

    out = {name: skula_space(f()) for name, f in PERVIN.items()}
    fam = lambda *ms: SubsetFamily(2, ms)  # noqa: E731
    out["SIER_BI"] = BiSpace(("a", "b"), fam(0, 1, 3), fam(0, 3))
    out["DISCRETE2"] = BiSpace(("a", "b"), fam(0, 1, 2, 3), fam(0, 1, 2, 3))
    return out

