"""Command line front end.

Exit status 0 means every law or property held and 1 means one failed.
Input that cannot be parsed or breaks an invariant exits with 2.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Callable

from . import bitop as bt
from . import duality as du
from . import frith as fr
from . import io
from . import pervin as pv
from .duality import LawReport, PriestleySpace, instance_id
from .enumeration import distributive_lattices, pervin_instances
from .frith import FrithPair
from .order import FinLattice, LatticeError, is_distributive
from .pervin import PervinSpace
from .suite import SuiteConfig, report_json, report_markdown, run_suite

EXIT_PASS, EXIT_FAIL, EXIT_INPUT = 0, 1, 2


def _need(obj, *types):
    if not isinstance(obj, types):
        wanted = " or ".join(t.__name__ for t in types)
        raise LatticeError(f"expected {wanted}, got {type(obj).__name__}")
    return obj


# property name -> predicate on a parsed instance
PROPERTIES: dict[str, Callable[[object], bool]] = {
    "distributive": lambda x: is_distributive(_need(x, FinLattice)),
    "t0": lambda x: pv.is_T0(_need(x, PervinSpace)),
    "td": lambda x: pv.is_TD(_need(x, PervinSpace)),
    "symmetric": lambda x: pv.is_symmetric(_need(x, PervinSpace)),
    "spectral": lambda x: du.is_spectral(_need(x, PervinSpace).family),
    "frith": lambda x: _need(x, FrithPair).is_frith,
    "locale-based": lambda x: fr.is_locale_based(_need(x, FrithPair)),
    "pairwise-stone": lambda x: du.is_pairwise_stone(_need(x, bt.BiSpace)),
    "zero-dimensional": lambda x: (
        bt.is_zero_dimensional(x) if isinstance(x, bt.BiSpace) else bt.is_zero_dimensional_biframe(_need(x, bt.BiFrame))
    ),
}


def _complete(x) -> bool:
    if isinstance(x, PervinSpace):
        return pv.is_cauchy_complete(x)
    return fr.is_complete(_need(x, FrithPair))


def _strongly_exact(x) -> bool:
    if isinstance(x, PervinSpace):
        return pv.is_strongly_exact(x)
    return fr.is_strongly_exact(_need(x, FrithPair))


def _compact(x) -> bool:
    if isinstance(x, bt.BiSpace):
        return bt.is_compact_bispace(x)
    return bt.is_compact_biframe(_need(x, bt.BiFrame))


PROPERTIES.update({"complete": _complete, "strongly-exact": _strongly_exact, "compact": _compact})

FUNCTORS: dict[str, Callable[[object], object]] = {
    "omega": lambda x: fr.omega_functor(_need(x, PervinSpace)),
    "pt": lambda x: fr.pt_functor(_need(x, FrithPair)),
    "psym": lambda x: pv.symmetrize(_need(x, PervinSpace)),
    "fsym": lambda x: fr.fsym(_need(x, FrithPair)).pair,
    "lperv": lambda x: pv.lperv(_need(x, PervinSpace)),
    "pf": lambda x: pv.pf_space(_need(x, FinLattice)),
    "idl": lambda x: fr.idlf(_need(x, FinLattice)),
    "lfrith": lambda x: fr.lfrith(_need(x, FrithPair)),
    "completion": lambda x: fr.completion(_need(x, FrithPair))[0],
    "skula": lambda x: bt.skula_space(_need(x, PervinSpace)),
    "clplus": lambda x: bt.clplus(_need(x, bt.BiSpace)),
    "skula-frame": lambda x: bt.skula_biframe(_need(x, FrithPair))[0],
    "bbplus": lambda x: bt.bbplus(_need(x, bt.BiFrame))[0],
    "omega-b": lambda x: bt.omega_b(_need(x, bt.BiSpace)),
    "pt-b": lambda x: bt.pt_b(_need(x, bt.BiFrame)),
    "ko": lambda x: du.ko(_need(x, PervinSpace).family, x.ground),
    "pp": lambda x: du.pp(_need(x, PervinSpace)),
    "cup": lambda x: du.cup(_need(x, PriestleySpace)),
}


def _priestley_roundtrip(x) -> list[LawReport]:
    if isinstance(x, PervinSpace):
        return du.priestley_iso_check([x], [x.family])
    Y = _need(x, PriestleySpace)
    back = du.pp(du.cup(Y))
    iso = du.find_priestley_iso(Y, back)
    return [LawReport("pp . cup = id", (instance_id(Y),), iso is not None, f"iso {iso}")]


def _omega_pt_roundtrip(x) -> list[LawReport]:
    if isinstance(x, PervinSpace):
        return du.completeness_duality_check([x], [])
    return du.completeness_duality_check([], [_need(x, FrithPair)])


def _skula_roundtrip(x) -> list[LawReport]:
    if isinstance(x, PervinSpace):
        return du.bitop_duality_check([x], [])
    if isinstance(x, FrithPair):
        return du.bitop_duality_check([], [x])
    if isinstance(x, bt.BiSpace):
        return du.bitop_duality_check([], [], bispaces=[x])
    return du.bitop_duality_check([], [], biframes=[_need(x, bt.BiFrame)])


DUALITIES: dict[str, Callable[[object], list[LawReport]]] = {
    "omega-pt": _omega_pt_roundtrip,
    "stone": lambda x: du.stone_iso_check([_need(x, PervinSpace)], [x.family]),
    "priestley": _priestley_roundtrip,
    "skula": _skula_roundtrip,
}


# ---------------------------------------------------------------------------
# output helpers


def _write(text: str, out: str | None):
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _laws_text(laws: list[LawReport], fmt: str) -> str:
    if fmt == "json":
        return json.dumps([r.as_dict() for r in laws], indent=2, sort_keys=True) + "\n"
    lines = []
    for r in laws:
        lines.append(f"- [{'x' if r.passed else ' '}] {r.law} ({len(r.instances)} instances)")
        if not r.passed:
            lines.append(f"  - counterexample: `{r.witness.splitlines()[0]}`")
    return "\n".join(lines) + "\n"


def _laws_exit(laws: list[LawReport]) -> int:
    return EXIT_PASS if all(r.passed for r in laws) else EXIT_FAIL


# ---------------------------------------------------------------------------
# verbs


def cmd_validate(args) -> int:
    obj = io.load(args.file)
    _write(f"ok {io.to_doc(obj)['kind']} {instance_id(obj)}\n", args.out)
    return EXIT_PASS


def cmd_check(args) -> int:
    obj = io.load(args.file)
    holds = PROPERTIES[args.property](obj)
    if args.format == "json":
        text = json.dumps({"property": args.property, "instance": instance_id(obj), "holds": holds}, sort_keys=True) + "\n"
    else:
        text = f"{args.property}: {'yes' if holds else 'no'}\n"
    _write(text, args.out)
    return EXIT_PASS if holds else EXIT_FAIL


def cmd_apply(args) -> int:
    obj = io.load(args.file)
    _write(io.dumps(FUNCTORS[args.functor](obj)), args.out)
    return EXIT_PASS


def cmd_roundtrip(args) -> int:
    laws = DUALITIES[args.duality](io.load(args.file))
    _write(_laws_text(laws, args.format), args.out)
    return _laws_exit(laws)


def cmd_char_report(args) -> int:
    P = _need(io.load(args.file), PervinSpace)
    rep = pv.theorem_char_report(P, args.bound)
    if args.format == "json":
        doc = {
            "instance": instance_id(P),
            "bound": rep.bound,
            "conditions": {str(k): v for k, v in sorted(rep.conditions.items())},
            "searches": {
                str(k): {"candidates": s.candidates, "qualifying": s.qualifying, "counterexamples": len(s.counterexamples)}
                for k, s in sorted(rep.stats.items())
            },
        }
        text = json.dumps(doc, indent=2, sort_keys=True) + "\n"
    else:
        text = "".join(f"- ({k}) {'holds' if v else 'fails'}\n" for k, v in sorted(rep.conditions.items()))
    _write(text, args.out)
    return EXIT_PASS if rep.consistent else EXIT_FAIL


def cmd_enumerate(args) -> int:
    if args.kind == "pervin":
        found = pervin_instances(args.max_points, args.max_family, t0_only=args.t0)
    elif args.kind == "lattice":
        found = distributive_lattices(args.max_lattice)
    else:
        found = du.frith_pairs(args.max_lattice, pre_frith_max=args.max_lattice)
    _write("".join(io.dumps(x) for x in found), args.out)
    return EXIT_PASS


def cmd_suite(args) -> int:
    cfg = SuiteConfig(
        max_points=args.max_points,
        max_family=args.max_family,
        max_lattice=args.max_lattice,
        search_bound=args.bound,
        parallelism=args.parallelism,
        negative_control=args.negative_control,
    )
    only = [int(n) for n in args.only.split(",")] if args.only else None
    result = run_suite(cfg, only)
    _write(report_json(result) if args.format == "json" else report_markdown(result), args.out)
    return result.exit_code


def cmd_dot(args) -> int:
    _write(io.emit_dot(io.load(args.file)), args.out)
    return EXIT_PASS


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="pervfrith", description=__doc__.splitlines()[0])
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--out", help="write output here instead of stdout")
    common.add_argument("--format", choices=("json", "md"), default="md")
    sub = ap.add_subparsers(dest="verb", required=True)

    p = sub.add_parser("validate", parents=[common], help="parse an instance file")
    p.add_argument("file")
    p.set_defaults(run=cmd_validate)

    p = sub.add_parser("check", parents=[common], help="test one property")
    p.add_argument("property", choices=sorted(PROPERTIES))
    p.add_argument("file")
    p.set_defaults(run=cmd_check)

    p = sub.add_parser("apply", parents=[common], help="apply a functor, emit the result")
    p.add_argument("functor", choices=sorted(FUNCTORS))
    p.add_argument("file")
    p.set_defaults(run=cmd_apply)

    p = sub.add_parser("roundtrip", parents=[common], help="check a duality round trip")
    p.add_argument("duality", choices=sorted(DUALITIES))
    p.add_argument("file")
    p.set_defaults(run=cmd_roundtrip)

    p = sub.add_parser("char-report", parents=[common], help="seven-condition completeness report")
    p.add_argument("file")
    p.add_argument("--bound", type=int, default=4)
    p.set_defaults(run=cmd_char_report)

    p = sub.add_parser("enumerate", parents=[common], help="list instances as JSON lines")
    p.add_argument("kind", choices=("pervin", "lattice", "frith"))
    p.add_argument("--max-points", type=int, default=3)
    p.add_argument("--max-family", type=int, default=None)
    p.add_argument("--max-lattice", type=int, default=5)
    p.add_argument("--t0", action="store_true", help="T0 spaces only")
    p.set_defaults(run=cmd_enumerate)

    p = sub.add_parser("suite", parents=[common], help="run the acceptance battery")
    p.add_argument("--max-points", type=int, default=4)
    p.add_argument("--max-family", type=int, default=8)
    p.add_argument("--max-lattice", type=int, default=8)
    p.add_argument("--bound", type=int, default=4)
    p.add_argument("--parallelism", type=int, default=1)
    p.add_argument("--only", help="comma-separated criterion numbers")
    p.add_argument("--negative-control", action="store_true", help="corrupt every counit; exits 1")
    p.set_defaults(run=cmd_suite)

    p = sub.add_parser("dot", parents=[common], help="Hasse diagram in DOT")
    p.add_argument("file")
    p.set_defaults(run=cmd_dot)
    return ap


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.run(args)
    except (io.SchemaError, LatticeError, OSError) as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
