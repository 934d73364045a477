"""Acceptance battery: ten criteria, each a list of law reports.

Reports carry no timings or addresses, so two runs with one config emit the
same bytes.
"""

from __future__ import annotations

import hashlib
import json
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field, replace

from . import bitop as bt
from . import congruence as cg
from . import duality as du
from . import frith as fr
from . import pervin as pv
from .catalog import B4, C3
from .duality import LawReport, _Collector, instance_id
from .enumeration import distributive_lattices, pervin_instances
from .order import (
    are_isomorphic,
    birkhoff_roundtrip,
    bits,
    prime_filters,
    prime_filters_bruteforce,
)

TITLES = {
    1: "(3,3,2) biframe point counts",
    2: "seven-way completeness characterization",
    3: "Omega/pt round trips on T0 spaces and complete pairs",
    4: "compact opens equal the family",
    5: "Stone and Priestley functors",
    6: "adjunction battery and negative controls",
    7: "oracle equivalences",
    8: "T_D and Banaschewski-type characterizations",
    9: "finite-scale degeneracy",
    10: "determinism",
}


@dataclass(frozen=True)
class SuiteConfig:
    max_points: int = 4
    max_family: int = 8
    max_lattice: int = 8
    search_bound: int = 4
    parallelism: int = 1
    # replace every counit by a corrupted one; the battery must then fail
    negative_control: bool = False

    def __post_init__(self):
        for name in ("max_points", "max_family", "max_lattice", "search_bound", "parallelism"):
            if getattr(self, name) < 1:
                raise ValueError(f"{name} must be positive")


@dataclass
class CriterionResult:
    number: int
    title: str
    laws: list[LawReport] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.laws)


@dataclass
class SuiteResult:
    config: SuiteConfig
    criteria: list[CriterionResult]

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.criteria)

    @property
    def exit_code(self) -> int:
        return 0 if self.passed else 1


# ---------------------------------------------------------------------------
# instance families


def _spaces(cfg: SuiteConfig) -> list[pv.PervinSpace]:
    return list(pervin_instances(cfg.max_points, cfg.max_family))


def _t0(cfg: SuiteConfig) -> list[pv.PervinSpace]:
    return [P for P in _spaces(cfg) if pv.is_T0(P)]


def _full_pairs(cfg: SuiteConfig) -> list[fr.FrithPair]:
    return du.frith_pairs(cfg.max_lattice)


def _all_pairs(cfg: SuiteConfig) -> list[fr.FrithPair]:
    return du.frith_pairs(cfg.max_lattice, pre_frith_max=5)


def _bispaces(cfg: SuiteConfig) -> list[bt.BiSpace]:
    found = [*bt.catalog_bispaces().values(), *(bt.skula_space(P) for P in _spaces(cfg))]
    return list(dict.fromkeys(found))


def _biframes(cfg: SuiteConfig) -> list[bt.BiFrame]:
    small = [F for F in _full_pairs(cfg) if len(F.lattice.ji) <= 3]
    found = [bt.three_three_two(), *(bt.skula_biframe(F)[0] for F in small)]
    found += [bt.omega_b(X) for X in bt.catalog_bispaces().values()]
    return list(dict.fromkeys(found))


# ---------------------------------------------------------------------------
# criteria


def criterion_1(cfg: SuiteConfig) -> list[LawReport]:
    B = bt.three_three_two()
    via_frith = fr.pt_functor(bt.bbplus(B)[0]).size
    via_bispace = bt.clplus(bt.pt_b(B)).size
    ident = instance_id(B)
    return [
        LawReport("pt . bb+ has exactly 1 point", (ident,), via_frith == 1, f"{via_frith} points"),
        LawReport("cl+ . pt_b has exactly 2 points", (ident,), via_bispace == 2, f"{via_bispace} points"),
    ]


def criterion_2(cfg: SuiteConfig) -> list[LawReport]:
    direct = _Collector("conditions (1), (4)-(7) hold with witnesses")
    bounded = _Collector(f"searches for (2), (3) find no counterexample at bound {cfg.search_bound}")
    for P in _t0(cfg):
        rep = pv.theorem_char_report(P, cfg.search_bound)
        ident = instance_id(P)
        ok = all(rep.conditions[k] for k in (1, 4, 5, 6, 7)) and all(
            rep.witnesses[k] is not None for k in (4, 5)
        )
        direct.record(ident, ok, f"iso4 {rep.witnesses[4]}; iso5 {rep.witnesses[5]}")
        s2, s3 = rep.stats[2], rep.stats[3]
        bounded.record(
            ident,
            rep.conditions[2] and rep.conditions[3],
            f"(2) {s2.candidates}/{s2.qualifying} {s2.counterexamples}; (3) {s3.candidates}/{s3.qualifying} {s3.counterexamples}",
        )
    return [direct.report(), bounded.report()]


def criterion_3(cfg: SuiteConfig) -> list[LawReport]:
    return du.completeness_duality_check(_t0(cfg), _full_pairs(cfg))


def criterion_4(cfg: SuiteConfig) -> list[LawReport]:
    co = _Collector("compact opens of Omega(P) are exactly the family")
    for P in _t0(cfg):
        got = du.compact_opens(du.u(P))
        co.record(instance_id(P), got == P.family, f"{len(got)} compact opens")
    return [co.report()]


def criterion_5(cfg: SuiteConfig) -> list[LawReport]:
    spaces = _spaces(cfg)
    tops = [P.family for P in spaces]
    spec = _Collector("spectral iff T0 for finite topologies")
    for P in spaces:
        spec.record(instance_id(P), du.is_spectral(P.family) == pv.is_T0(P), "agree")
    return [spec.report(), *du.stone_iso_check(spaces, tops), *du.priestley_iso_check(spaces, tops)]


def _corruptible(adj: du.Adjunction, d) -> bool:
    m = adj.counit(d)
    f = m.hom.map if hasattr(m, "hom") else m.map
    return len(set(f)) > 1


def criterion_6(cfg: SuiteConfig) -> list[LawReport]:
    out: list[LawReport] = []
    for adj, fam in du.battery(cfg.max_points, cfg.max_family, cfg.max_lattice):
        if cfg.negative_control:
            out += du.adjunction_verifier(du.corrupted(adj), fam)
            continue
        out += du.adjunction_verifier(adj, fam)
        small = du.Family(tuple(du._spread(fam.left_objects, 5)), tuple(du._spread(fam.right_objects, 5)))
        law = f"{adj.name}: corrupted counit is detected"
        if not any(_corruptible(adj, d) for d in small.right_objects):
            out.append(LawReport(law, (), True, "no counit has two distinct images; nothing to corrupt"))
            continue
        bad = du.adjunction_verifier(du.corrupted(adj), small)
        caught = [r for r in bad if not r.passed]
        witness = caught[0].witness if caught else "corruption went unnoticed"
        out.append(LawReport(law, (), bool(caught), witness))
    return out


def criterion_7(cfg: SuiteConfig) -> list[LawReport]:
    lats = distributive_lattices(cfg.max_lattice)
    pf = _Collector("prime filters: brute force equals join-irreducible path")
    bk = _Collector("Birkhoff round trip is an isomorphism")
    for L in lats:
        ident = instance_id(L)
        pf.record(ident, prime_filters_bruteforce(L) == list(prime_filters(L)), f"{len(prime_filters(L))} prime filters")
        h = birkhoff_roundtrip(L)
        bk.record(ident, h.is_bijective(), f"iso {h.map}")
    con = cg.all_congruences(C3())
    golden = LawReport(
        "congruences of the 3-chain: 4 members forming the 4-element Boolean lattice",
        (instance_id(C3()),),
        len(con) == 4 and are_isomorphic(con.lattice, B4()),
        f"{len(con)} members",
    )
    gen = _Collector("congruences generated by all nablas and deltas are all congruences")
    for L in distributive_lattices(min(cfg.max_lattice, 6)):
        C = cg.generated_congruence_subframe(L, L.elements)
        A = cg.all_congruences(L)
        gen.record(instance_id(L), {th.label for th in C.members} == {th.label for th in A.members}, f"{len(A)} congruences")
    return [pf.report(), bk.report(), golden, gen.report()]


def criterion_8(cfg: SuiteConfig) -> list[LawReport]:
    td = _Collector("the three T_D conditions coincide")
    for P in _spaces(cfg):
        c = pv.td_conditions(P)
        td.record(instance_id(P), len(set(c)) == 1, f"{c}")
    bp = _Collector(f"lperv-iso characterizations match completeness and T_D at bound {cfg.search_bound}")
    for P in _t0(cfg):
        r = pv.banaschewski_pultr_check(P, cfg.search_bound)
        bp.record(instance_id(P), r.agrees, f"{r.maps_out} maps out, {r.maps_in} maps in")
    fbp = _Collector(f"lfrith-iso characterizations match completeness and locale-basedness at bound {cfg.search_bound}")
    for F in _full_pairs(cfg):
        r = fr.frith_banaschewski_check(F, cfg.search_bound)
        fbp.record(instance_id(F), r.agrees, f"{r.maps_in} maps in, {r.maps_out} maps out")
    sub = _Collector("generated sublocale agrees with the meet formula elementwise")
    for F in _all_pairs(cfg):
        L = F.lattice
        K = fr.generated_sublocale(L, bits(F.sub))
        ok = all(bool((K >> a) & 1) == (fr.locale_meet_formula(L, bits(F.sub), a) == a) for a in L.elements)
        sub.record(instance_id(F), ok, f"sublocale {sorted(bits(K))}")
    return [td.report(), bp.report(), fbp.report(), sub.report()]


def criterion_9(cfg: SuiteConfig) -> list[LawReport]:
    cauchy = _Collector("every finite Pervin space is Cauchy complete")
    for P in _spaces(cfg):
        cauchy.record(instance_id(P), pv.is_cauchy_complete(P), f"{len(pv.cauchy_filters(P))} Cauchy filters")
    sem = _Collector("every finite Frith frame has sem S = S")
    for F in _full_pairs(cfg):
        sem.record(instance_id(F), fr.strongly_exact_meets(F) == F.sub, "equal")
    kb = _Collector("every finite bispace is compact")
    for X in _bispaces(cfg):
        kb.record(instance_id(X), bt.is_compact_bispace(X), "compact")
    kf = _Collector("every finite biframe is compact")
    for B in _biframes(cfg):
        kf.record(instance_id(B), bt.is_compact_biframe(B), "compact")
    return [cauchy.report(), sem.report(), kb.report(), kf.report()]


CRITERIA = {
    1: criterion_1,
    2: criterion_2,
    3: criterion_3,
    4: criterion_4,
    5: criterion_5,
    6: criterion_6,
    7: criterion_7,
    8: criterion_8,
    9: criterion_9,
}


def _run_one(args: tuple[int, SuiteConfig]) -> CriterionResult:
    n, cfg = args
    return CriterionResult(n, TITLES[n], CRITERIA[n](cfg))


def run_criteria(cfg: SuiteConfig, numbers=None) -> list[CriterionResult]:
    numbers = sorted(numbers or CRITERIA)
    jobs = [(n, cfg) for n in numbers if n in CRITERIA]
    if cfg.parallelism > 1:
        with ProcessPoolExecutor(cfg.parallelism) as pool:
            return list(pool.map(_run_one, jobs))
    return [_run_one(j) for j in jobs]


def reduced(cfg: SuiteConfig) -> SuiteConfig:
    """Smaller bounds for the determinism rerun, which executes criteria 1-9 twice."""
    return replace(
        cfg,
        max_points=min(cfg.max_points, 3),
        max_family=min(cfg.max_family, 6),
        max_lattice=min(cfg.max_lattice, 5),
        search_bound=min(cfg.search_bound, 3),
        parallelism=1,
    )


def criterion_10(cfg: SuiteConfig) -> list[LawReport]:
    small = reduced(cfg)
    first = report_json(SuiteResult(small, run_criteria(small, range(1, 10))))
    second = report_json(SuiteResult(small, run_criteria(small, range(1, 10))))
    same = first == second
    digest = hashlib.sha256(first.encode()).hexdigest()[:16]
    return [LawReport("two runs emit byte-identical reports", (), same, digest if same else "reports differ")]


CRITERIA[10] = criterion_10


def run_suite(cfg: SuiteConfig = SuiteConfig(), numbers=None) -> SuiteResult:
    return SuiteResult(cfg, run_criteria(cfg, numbers))


# ---------------------------------------------------------------------------
# output


def report_dict(result: SuiteResult) -> dict:
    return {
        "config": asdict(result.config),
        "pass": result.passed,
        "criteria": [
            {
                "criterion": c.number,
                "title": c.title,
                "pass": c.passed,
                "laws": [r.as_dict() for r in c.laws],
            }
            for c in result.criteria
        ],
    }


def report_json(result: SuiteResult) -> str:
    return json.dumps(report_dict(result), indent=2, sort_keys=True) + "\n"


def report_markdown(result: SuiteResult) -> str:
    lines = ["# Acceptance suite", ""]
    for c in result.criteria:
        mark = "PASS" if c.passed else "FAIL"
        lines.append(f"## {c.number}. {c.title}: {mark}")
        lines.append("")
        for r in c.laws:
            lines.append(f"- [{'x' if r.passed else ' '}] {r.law} ({len(r.instances)} instances)")
            if not r.passed:
                lines.append(f"  - counterexample: `{r.witness.splitlines()[0]}`")
        lines.append("")
    lines.append(f"Overall: {'PASS' if result.passed else 'FAIL'}")
    return "\n".join(lines) + "\n"
