"""Spectral and Priestley structures, pairwise Stone checks, and a generic
engine that verifies adjunction laws over finite instance families.

Every check returns ``LawReport`` records.  A failing report carries the first
counterexample; a passing one carries the witnesses (isomorphisms, maps) it
relied on, hashed so that golden files stay small.
"""

from __future__ import annotations

import hashlib
from dataclasses import dataclass, replace
from itertools import permutations
from typing import Any, Callable, Hashable, Iterable, Sequence

from . import bitop as bt
from . import congruence as cg
from . import frith as fr
from . import pervin as pv
from .order import (
    FinPoset,
    InvariantViolation,
    LatticeError,
    SubsetFamily,
    bits,
    enumerate_homs,
    identity_hom,
    is_compact_element,
    mask_of,
    set_name,
    union_intersection_closure,
)
from .pervin import NotT0, PervinMap, PervinSpace


class NotSpectral(LatticeError):
    pass


@dataclass(frozen=True)
class LawReport:
    law: str
    instances: tuple[str, ...]
    passed: bool
    witness: str

    @property
    def witness_hash(self) -> str:
        return hashlib.sha256(self.witness.encode()).hexdigest()[:16]

    def as_dict(self) -> dict:
        return {
            "law": self.law,
            "instances": len(self.instances),
            "pass": self.passed,
            "witness": self.witness if not self.passed else self.witness_hash,
        }


def instance_id(obj: Any) -> str:
    return repr(obj)


class _Collector:
    """Accumulates one law over many instances; keeps the first failure."""

    def __init__(self, law: str):
        self.law = law
        self.ids: list[str] = []
        self.witnesses: list[str] = []
        self.failure: str | None = None

    def record(self, ident: str, ok: bool, witness: str):
        self.ids.append(ident)
        if ok:
            self.witnesses.append(f"{ident}: {witness}")
        elif self.failure is None:
            self.failure = f"{ident}: {witness}"

    def report(self) -> LawReport:
        if self.failure is not None:
            return LawReport(self.law, tuple(self.ids), False, self.failure)
        return LawReport(self.law, tuple(self.ids), True, "\n".join(self.witnesses))


# ---------------------------------------------------------------------------
# spectral spaces


def _closure_of_point(T: SubsetFamily, x: int) -> int:
    closed = [T.full & ~U for U in T]
    acc = T.full
    for C in closed:
        if (C >> x) & 1:
            acc &= C
    return acc


def _irreducible_closed(T: SubsetFamily) -> list[int]:
    closed = sorted({T.full & ~U for U in T})
    cset = set(closed)
    out = []
    for C in closed:
        if C == 0:
            continue
        proper = [D for D in closed if D != C and D & ~C == 0]
        if not any(A | B == C for A in proper for B in proper):
            out.append(C)
    assert all(C in cset for C in out)
    return out


def is_sober(T: SubsetFamily) -> bool:
    """Every irreducible closed set is the closure of exactly one point."""
    for C in _irreducible_closed(T):
        generic = [x for x in bits(C) if _closure_of_point(T, x) == C]
        if len(generic) != 1:
            return False
    return True


def compact_opens(T: SubsetFamily) -> SubsetFamily:
    """Opens U such that every directed open cover of U contains U."""
    L = T.lattice()
    return SubsetFamily(T.ground_size, tuple(T.members[k] for k in L.elements if is_compact_element(L, k)))


def is_spectral(T: SubsetFamily) -> bool:
    if not T.is_bounded_sublattice():
        return False
    K = compact_opens(T)
    if any(a & b not in K for a in K for b in K):
        return False
    # basis: each open is a union of compact opens below it
    for U in T:
        acc = 0
        for k in K:
            if k & ~U == 0:
                acc |= k
        if acc != U:
            return False
    return is_sober(T)


def ko(T: SubsetFamily, ground: Sequence[str] | None = None) -> PervinSpace:
    if not is_spectral(T):
        raise NotSpectral("topology is not spectral")
    names = tuple(ground) if ground is not None else pv.point_names(T.ground_size)
    return PervinSpace(names, compact_opens(T))


def u(P: PervinSpace) -> SubsetFamily:
    return pv.omega_topology(P)


def stone_iso_check(spaces: Iterable[PervinSpace], topologies: Iterable[SubsetFamily]) -> list[LawReport]:
    """ko after u is the identity on T0 spaces; u after ko is the identity on spectral topologies."""
    a = _Collector("ko.u = id")
    for P in spaces:
        if not pv.is_T0(P):
            continue
        Q = ko(u(P), P.ground)
        a.record(instance_id(P), Q == P, "identity")
    b = _Collector("u.ko = id")
    for T in topologies:
        if not is_spectral(T):
            continue
        b.record(f"topology{list(T.members)}", u(ko(T)) == T, "identity")
    return [a.report(), b.report()]


# ---------------------------------------------------------------------------
# Priestley spaces


def _is_upset(order: FinPoset, U: int) -> bool:
    return all(order.up[x] & ~U == 0 for x in bits(U))


@dataclass(frozen=True)
class PriestleySpace:
    ground: tuple[str, ...]
    topology: SubsetFamily
    order: FinPoset

    def __post_init__(self):
        n = len(self.ground)
        T = self.topology
        if T.ground_size != n or self.order.size != n:
            raise InvariantViolation("topology and order must live on the ground set")
        if not T.is_bounded_sublattice():
            raise InvariantViolation("topology must be closed under finite unions and intersections")
        L = T.lattice()
        if not is_compact_element(L, L.top):
            raise InvariantViolation("space is not compact")
        ups = self.clopen_upsets()
        for x in range(n):
            for y in range(n):
                if not self.order.leq(x, y) and not any((U >> x) & 1 and not (U >> y) & 1 for U in ups):
                    raise InvariantViolation(f"no clopen upset separates {self.ground[x]} from {self.ground[y]}")

    @property
    def size(self) -> int:
        return len(self.ground)

    def clopen_upsets(self) -> list[int]:
        T = self.topology
        return [U for U in T if T.full & ~U in T and _is_upset(self.order, U)]

    def __repr__(self):
        opens = ", ".join(set_name(U, self.ground) for U in self.topology)
        order = ", ".join(f"{self.ground[i]}<={self.ground[j]}" for i, j in self.order.covers)
        return f"PriestleySpace({{{', '.join(self.ground)}}}: {opens}; {order})"


def pp(P: PervinSpace) -> PriestleySpace:
    if not pv.is_T0(P):
        raise NotT0("Priestley space needs a T0 Pervin space")
    sym = pv.symmetrize(P)
    spec = pv.specialization(P)
    return PriestleySpace(P.ground, pv.omega_topology(sym), FinPoset(spec.down, P.ground))


def cup(Y: PriestleySpace) -> PervinSpace:
    return PervinSpace(Y.ground, SubsetFamily(Y.size, tuple(Y.clopen_upsets())))


def classical_priestley(T: SubsetFamily, ground: Sequence[str] | None = None) -> PriestleySpace:
    """Patch topology of a spectral space with its specialization order."""
    names = tuple(ground) if ground is not None else pv.point_names(T.ground_size)
    K = compact_opens(T)
    patch = union_intersection_closure(T.ground_size, [*T, *(T.full & ~k for k in K)])
    P = PervinSpace(names, T)
    return PriestleySpace(names, patch, FinPoset(pv.specialization(P).down, names))


def classical_spectral(Y: PriestleySpace) -> SubsetFamily:
    """Open upsets of a Priestley space."""
    return SubsetFamily(Y.size, tuple(U for U in Y.topology if _is_upset(Y.order, U)))


def find_priestley_iso(A: PriestleySpace, B: PriestleySpace) -> tuple[int, ...] | None:
    if A.size != B.size or len(A.topology) != len(B.topology):
        return None
    tb = set(B.topology)
    for f in permutations(range(B.size)):
        if any(A.order.leq(x, y) != B.order.leq(f[x], f[y]) for x in range(A.size) for y in range(A.size)):
            continue
        if all(mask_of(f[x] for x in bits(U)) in tb for U in A.topology):
            return f
    return None


def _topology_iso(S: SubsetFamily, T: SubsetFamily) -> tuple[int, ...] | None:
    if S.ground_size != T.ground_size or len(S) != len(T):
        return None
    tt = set(T)
    for f in permutations(range(T.ground_size)):
        if all(mask_of(f[x] for x in bits(U)) in tt for U in S):
            return f
    return None


def priestley_iso_check(spaces: Iterable[PervinSpace], topologies: Iterable[SubsetFamily]) -> list[LawReport]:
    spaces = [P for P in spaces if pv.is_T0(P)]
    a = _Collector("cup.pp = id")
    b = _Collector("pp.cup = id")
    for P in spaces:
        a.record(instance_id(P), cup(pp(P)) == P, "identity")
        Y = pp(P)
        b.record(instance_id(Y), pp(cup(Y)) == Y, "identity")
    c = _Collector("Spec -> Pri: ko then pp agrees with the patch construction")
    d = _Collector("Pri -> Spec: cup then u agrees with open upsets")
    for T in topologies:
        if not is_spectral(T):
            continue
        ident = f"topology{list(T.members)}"
        via = pp(ko(T))
        direct = classical_priestley(T, via.ground)
        iso = find_priestley_iso(via, direct)
        c.record(ident, iso is not None, f"iso {iso}")
        Y = via
        iso2 = _topology_iso(u(cup(Y)), classical_spectral(Y))
        d.record(instance_id(Y), iso2 is not None, f"iso {iso2}")
    return [a.report(), b.report(), c.report(), d.report()]


# ---------------------------------------------------------------------------
# pairwise Stone spaces


def is_pairwise_stone(X: bt.BiSpace) -> bool:
    return bt.is_T0_bispace(X) and bt.is_compact_bispace(X) and bt.is_zero_dimensional(X)


pairwise_stone_check = is_pairwise_stone


def bitop_duality_check(
    spaces: Iterable[PervinSpace],
    pairs: Iterable[fr.FrithPair],
    bispaces: Iterable[bt.BiSpace] = (),
    biframes: Iterable[bt.BiFrame] = (),
) -> list[LawReport]:
    spaces = [P for P in spaces if pv.is_T0(P)]
    pairs = [F for F in pairs if fr.is_complete(F)]
    sk = _Collector("Sk sends T0 complete Pervin spaces to pairwise Stone spaces")
    inv = _Collector("cl+ inverts Sk on T0 complete Pervin spaces")
    se = _Collector("T0 complete Pervin spaces are strongly exact")
    for P in spaces:
        ident = instance_id(P)
        X = bt.skula_space(P)
        sk.record(ident, is_pairwise_stone(X), "pairwise Stone")
        eps = bt.skula_counit(P)
        inv.record(ident, pv.is_iso(eps), f"counit {eps.map}")
        se.record(ident, pv.is_strongly_exact(P), "closed under open intersections")
    cl = _Collector("cl+ of a compact bispace is Cauchy complete")
    ps = _Collector("Sk inverts cl+ on pairwise Stone spaces")
    for X in bispaces:
        ident = instance_id(X)
        if bt.is_compact_bispace(X):
            cl.record(ident, pv.is_cauchy_complete(bt.clplus(X)), "every Cauchy filter converges")
        if is_pairwise_stone(X):
            eta = bt.skula_unit(X)
            ps.record(ident, eta.is_homeomorphism(), f"unit {eta.map}")
    skf = _Collector("Sk_f sends complete Frith pairs to compact zero-dimensional biframes")
    bb = _Collector("bb+ inverts Sk_f on complete Frith pairs")
    fse = _Collector("complete Frith pairs are strongly exact")
    for F in pairs:
        ident = instance_id(F)
        B, _ = bt.skula_biframe(F)
        skf.record(ident, bt.is_compact_biframe(B) and bt.is_zero_dimensional_biframe(B), "compact, zero-dimensional")
        unit = bt.fsk_unit(F)
        bb.record(ident, fr.classify_hom(unit).iso, f"unit {unit.map}")
        fse.record(ident, fr.is_strongly_exact(F), "sem S = S")
    kz = _Collector("bb+ of a compact zero-dimensional biframe is complete")
    for B in biframes:
        if bt.is_compact_biframe(B) and bt.is_zero_dimensional_biframe(B):
            G, _ = bt.bbplus(B)
            kz.record(instance_id(B), fr.is_complete(G), "coherent")
    return [c.report() for c in (sk, inv, se, cl, ps, skf, bb, fse, kz)]


# ---------------------------------------------------------------------------
# completeness and the restricted duality


def completeness_duality_check(spaces: Iterable[PervinSpace], pairs: Iterable[fr.FrithPair]) -> list[LawReport]:
    spaces = [P for P in spaces if pv.is_T0(P)]
    pairs = [F for F in pairs if fr.is_complete(F)]
    om = _Collector("Omega lands in complete Frith pairs")
    unit = _Collector("unit P -> pt Omega P is an iso on T0 spaces")
    co = _Collector("compact opens of Omega(P) are exactly the family")
    for P in spaces:
        ident = instance_id(P)
        om.record(ident, fr.is_complete(fr.omega_functor(P)), "coherent")
        eta = fr.omega_pt_unit(P)
        unit.record(ident, pv.classify_map(eta).iso, f"iso {eta.map}")
        co.record(ident, compact_opens(u(P)) == P.family, "equal")
    pt = _Collector("pt lands in T0 complete Pervin spaces")
    counit = _Collector("counit F -> Omega pt F is an iso on complete pairs")
    for F in pairs:
        ident = instance_id(F)
        Q = fr.pt_functor(F)
        pt.record(ident, pv.is_T0(Q) and pv.is_cauchy_complete(Q), "T0, Cauchy complete")
        eps = fr.omega_pt_counit(F)
        counit.record(ident, fr.classify_hom(eps).iso, f"iso {eps.map}")
    return [c.report() for c in (om, unit, co, pt, counit)]


# ---------------------------------------------------------------------------
# generic adjunction engine


@dataclass(frozen=True)
class Category:
    name: str
    identity: Callable[[Any], Any]
    compose: Callable[[Any, Any], Any]  # compose(g, f) is g after f
    homs: Callable[[Any, Any], Sequence[Any]]
    key: Callable[[Any], Hashable] = lambda m: m.map

    def op(self) -> "Category":
        return Category(
            self.name + "^op",
            self.identity,
            lambda g, f: self.compose(f, g),
            lambda a, b: self.homs(b, a),
            self.key,
        )


@dataclass(frozen=True)
class Functor:
    name: str
    obj: Callable[[Any], Any]
    mor: Callable[[Any], Any]
    src: Category
    dst: Category


@dataclass(frozen=True)
class Adjunction:
    """left: C -> D, right: D -> C, unit_c: c -> right(left c), counit_d: left(right d) -> d."""

    name: str
    left: Functor
    right: Functor
    unit: Callable[[Any], Any]
    counit: Callable[[Any], Any]


@dataclass(frozen=True)
class Family:
    left_objects: tuple
    right_objects: tuple
    # composition is checked on triples from a spread sample of this many objects
    compose_span: int = 4
    # and on at most this many morphisms per ordered pair
    compose_homs: int = 6


def _spread(objs: Sequence, k: int) -> list:
    if len(objs) <= k:
        return list(objs)
    step = (len(objs) - 1) / (k - 1)
    return [objs[round(i * step)] for i in range(k)]


def _safe(fn: Callable[[], bool]) -> tuple[bool, str]:
    try:
        return bool(fn()), ""
    except (LatticeError, AssertionError, KeyError, ValueError) as exc:
        return False, f"{type(exc).__name__}: {exc}"


def _same(lhs: Callable[[], Hashable], rhs: Callable[[], Hashable], ok_text: str) -> tuple[bool, str]:
    """Evaluate both sides; on mismatch the witness shows them."""
    got: list = []

    def run():
        got[:] = [lhs(), rhs()]
        return got[0] == got[1]

    ok, err = _safe(run)
    if ok:
        return True, ok_text
    return False, err or f"{got[0]} != {got[1]}"


def _functor_laws(F: Functor, objs: Sequence, fam: Family, out: _Collector):
    C, D = F.src, F.dst
    for a in objs:
        ok, w = _same(lambda: D.key(F.mor(C.identity(a))), lambda: D.key(D.identity(F.obj(a))), "preserves identity")
        out.record(f"{F.name} id at {instance_id(a)}", ok, w)
    span = _spread(objs, fam.compose_span)
    for a in span:
        for b in span:
            fs = list(C.homs(a, b))[: fam.compose_homs]
            for c in span:
                gs = list(C.homs(b, c))[: fam.compose_homs]
                for f in fs:
                    for g in gs:
                        ok, w = _same(
                            lambda: D.key(F.mor(C.compose(g, f))),
                            lambda: D.key(D.compose(F.mor(g), F.mor(f))),
                            "",
                        )
                        if not ok:
                            out.record(f"{F.name} composition at {C.key(f)};{C.key(g)}", ok, w)
                            return
    out.record(f"{F.name} composition", True, "preserves composition")


def _per_object(fn: Callable[[Any], Any]) -> Callable[[Any], Any]:
    """Memoize a component by object identity; objects are kept alive by the cache."""
    seen: dict[int, tuple[Any, Any]] = {}

    def get(x):
        hit = seen.get(id(x))
        if hit is None:
            hit = seen[id(x)] = (x, fn(x))
        return hit[1]

    return get


def adjunction_verifier(adj: Adjunction, fam: Family) -> list[LawReport]:
    """Functor laws, naturality of unit and counit, and both triangle identities."""
    L, R = adj.left, adj.right
    C, D = L.src, L.dst
    ident = {id(x): instance_id(x) for x in (*fam.left_objects, *fam.right_objects)}
    adj = replace(adj, unit=_per_object(adj.unit), counit=_per_object(adj.counit))
    laws = _Collector(f"{adj.name}: functor laws")
    _functor_laws(L, fam.left_objects, fam, laws)
    _functor_laws(R, fam.right_objects, fam, laws)

    nat_u = _Collector(f"{adj.name}: unit naturality")
    for a in fam.left_objects:
        for b in fam.left_objects:
            for f in C.homs(a, b):
                ok, w = _same(
                    lambda: C.key(C.compose(adj.unit(b), f)),
                    lambda: C.key(C.compose(R.mor(L.mor(f)), adj.unit(a))),
                    "square commutes",
                )
                nat_u.record(f"{ident[id(a)]} -> {ident[id(b)]} via {C.key(f)}", ok, w)
    nat_c = _Collector(f"{adj.name}: counit naturality")
    for a in fam.right_objects:
        for b in fam.right_objects:
            for g in D.homs(a, b):
                ok, w = _same(
                    lambda: D.key(D.compose(g, adj.counit(a))),
                    lambda: D.key(D.compose(adj.counit(b), L.mor(R.mor(g)))),
                    "square commutes",
                )
                nat_c.record(f"{ident[id(a)]} -> {ident[id(b)]} via {D.key(g)}", ok, w)

    tri_l = _Collector(f"{adj.name}: counit_(L c) . L(unit_c) = id")
    for a in fam.left_objects:
        ok, w = _same(
            lambda: D.key(D.compose(adj.counit(L.obj(a)), L.mor(adj.unit(a)))),
            lambda: D.key(D.identity(L.obj(a))),
            "identity",
        )
        tri_l.record(ident[id(a)], ok, w)
    tri_r = _Collector(f"{adj.name}: R(counit_d) . unit_(R d) = id")
    for b in fam.right_objects:
        ok, w = _same(
            lambda: C.key(C.compose(R.mor(adj.counit(b)), adj.unit(R.obj(b)))),
            lambda: C.key(C.identity(R.obj(b))),
            "identity",
        )
        tri_r.record(ident[id(b)], ok, w)
    return [c.report() for c in (laws, nat_u, nat_c, tri_l, tri_r)]


def swap_two_points(m):
    """The same morphism with the images of its first two differently-mapped points exchanged.

    Raises the usual invariant errors when the result is no longer a morphism.
    """
    f = list(m.hom.map if hasattr(m, "hom") else m.map)
    for i in range(len(f)):
        for j in range(i + 1, len(f)):
            if f[i] != f[j]:
                f[i], f[j] = f[j], f[i]
                if hasattr(m, "hom"):
                    return replace(m, hom=replace(m.hom, map=tuple(f)))
                return replace(m, map=tuple(f))
    return m


def corrupted(adj: Adjunction) -> Adjunction:
    """Negative control: the counit with two points swapped."""
    return replace(adj, name=adj.name + " [corrupted counit]", counit=lambda d: swap_two_points(adj.counit(d)))


# ---------------------------------------------------------------------------
# the battery


def _after(g, f):
    return g.compose(f)


def _bihom_after(g: bt.BiHom, f: bt.BiHom) -> bt.BiHom:
    return bt.BiHom(f.dom, g.cod, g.hom.compose(f.hom))


PERV = Category("Perv", pv.identity_map, _after, pv.pervin_maps)
FFRM = Category("FFrm", fr.identity_frith, _after, fr.frith_homs)
DLAT = Category("DLat", identity_hom, _after, enumerate_homs)
BITOP = Category("BiTop", lambda X: bt.BiMap(X, X, tuple(range(X.size))), _after, bt.bispace_maps)
BIFRM = Category(
    "BiFrm",
    lambda B: bt.BiHom(B, B, identity_hom(B.main)),
    _bihom_after,
    bt.biframe_homs,
    key=lambda m: m.hom.map,
)


def _ident(x):
    return x


def identity_adjunction(cat: Category = PERV) -> Adjunction:
    I = Functor("Id", _ident, _ident, cat, cat)
    return Adjunction("Id -| Id", I, I, cat.identity, cat.identity)


def omega_pt() -> Adjunction:
    D = FFRM.op()
    return Adjunction(
        "Omega -| pt",
        Functor("Omega", fr.omega_functor, fr.omega_map, PERV, D),
        Functor("pt", fr.pt_functor, fr.pt_map, D, PERV),
        fr.omega_pt_unit,
        fr.omega_pt_counit,
    )


def _psym_map(f: PervinMap) -> PervinMap:
    return PervinMap(pv.symmetrize(f.dom), pv.symmetrize(f.cod), f.map)


def psym_coreflection() -> Adjunction:
    """Symmetric spaces are coreflective: the identity runs from psym(P) to P, not back."""
    return Adjunction(
        "inclusion -| psym",
        Functor("inclusion", _ident, _ident, PERV, PERV),
        Functor("psym", pv.symmetrize, _psym_map, PERV, PERV),
        lambda B: PervinMap(B, pv.symmetrize(B), tuple(range(B.size))),
        lambda P: PervinMap(pv.symmetrize(P), P, tuple(range(P.size))),
    )


def _fsym_counit(G: fr.FrithPair) -> fr.FrithHom:
    s = fr.fsym(G)
    ext = cg.universal_extension(identity_hom(G.lattice), G.members, s.congruences)
    return fr.FrithHom(s.pair, G, ext)


def fsym_reflection() -> Adjunction:
    return Adjunction(
        "fsym -| inclusion",
        Functor("fsym", lambda F: fr.fsym(F).pair, fr.fsym_map, FFRM, FFRM),
        Functor("inclusion", _ident, _ident, FFRM, FFRM),
        lambda F: fr.fsym(F).unit,
        _fsym_counit,
    )


def lperv_pf() -> Adjunction:
    D = DLAT.op()
    return Adjunction(
        "lperv -| pf",
        Functor("lperv", pv.lperv, pv.lperv_map, PERV, D),
        Functor("pf", pv.pf_space, pv.pf_map, D, PERV),
        pv.neighborhood_map,
        pv.phi_counit,
    )


def idl_lfrith() -> Adjunction:
    return Adjunction(
        "Idl -| lfrith",
        Functor("Idl", fr.idlf, fr.idlf_map, DLAT, FFRM),
        Functor("lfrith", fr.lfrith, fr.lfrith_map, FFRM, DLAT),
        fr.idlf_unit,
        lambda F: fr.completion(F)[1],
    )


def clplus_skula() -> Adjunction:
    return Adjunction(
        "cl+ -| Sk",
        Functor("cl+", bt.clplus, bt.clplus_map, BITOP, PERV),
        Functor("Sk", bt.skula_space, bt.skula_map, PERV, BITOP),
        bt.skula_unit,
        bt.skula_counit,
    )


def skf_bbplus() -> Adjunction:
    return Adjunction(
        "Sk_f -| bb+",
        Functor("Sk_f", lambda F: bt.skula_biframe(F)[0], bt.skula_biframe_map, FFRM, BIFRM),
        Functor("bb+", lambda B: bt.bbplus(B)[0], bt.bbplus_map, BIFRM, FFRM),
        bt.fsk_unit,
        bt.fsk_counit,
    )


# ---------------------------------------------------------------------------
# instance families


def frith_pairs(max_lattice: int, pre_frith_max: int = 0) -> list[fr.FrithPair]:
    """(L, L) for every enumerated L, then (L, S) for proper bounded sublattices S when |L| <= pre_frith_max."""
    from .enumeration import distributive_lattices
    from .order import bounded_sublattices

    out = [fr.FrithPair.full(L) for L in distributive_lattices(max_lattice)]
    for L in distributive_lattices(min(max_lattice, pre_frith_max)):
        for S in bounded_sublattices(L):
            if S != (1 << L.size) - 1:
                out.append(fr.FrithPair(L, S))
    return out


def _small_congruences(F: fr.FrithPair) -> bool:
    # the congruence frame of a finite distributive lattice has 2^#JI elements
    return len(F.lattice.ji) <= 3


def battery(max_points: int = 4, max_family: int = 8, max_lattice: int = 8) -> list[tuple[Adjunction, Family]]:
    from .enumeration import distributive_lattices, pervin_instances

    spaces = tuple(pervin_instances(max_points, max_family))
    lats = distributive_lattices(max_lattice)
    full = tuple(fr.FrithPair.full(L) for L in lats)
    pre = tuple(frith_pairs(max_lattice, pre_frith_max=5))
    small = tuple(F for F in pre if _small_congruences(F))
    bis = tuple(dict.fromkeys([*bt.catalog_bispaces().values(), *(bt.skula_space(P) for P in spaces)]))
    small_full = tuple(F for F in full if _small_congruences(F))
    bifr = tuple(dict.fromkeys([bt.three_three_two(), *(bt.skula_biframe(F)[0] for F in small_full)]))
    return [
        (omega_pt(), Family(spaces, full)),
        (psym_coreflection(), Family(tuple(P for P in spaces if pv.is_symmetric(P)), spaces)),
        (fsym_reflection(), Family(small, tuple(F for F in small if F.is_symmetric()))),
        (lperv_pf(), Family(spaces, tuple(lats))),
        (idl_lfrith(), Family(tuple(lats), pre)),
        (clplus_skula(), Family(bis, spaces)),
        (skf_bbplus(), Family(small_full, bifr)),
    ]
