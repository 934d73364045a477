import json

import pytest
from hypothesis import given

from pervfrith import bitop as bt
from pervfrith import duality as du
from pervfrith import frith as fr
from pervfrith import io
from pervfrith.catalog import B4, C3, SIER
from pervfrith.cli import main
from pervfrith.order import InvariantViolation, LatticeHom
from pervfrith.pervin import PervinMap, identity_map
from pervfrith.suite import SuiteConfig, report_json, report_markdown, run_suite
from strategies import frith_pairs, lattices, pervin_spaces

SIER_TEXT = """{"kind": "pervin",
 "ground": ["a", "b"],
 "sets": [[0, 1], [], [0]]}
"""


def instances():
    F3 = fr.FrithPair.full(C3())
    return [
        C3(),
        SIER(),
        F3,
        bt.skula_space(SIER()),
        bt.three_three_two(),
        du.pp(SIER()),
        LatticeHom(C3(), C3(), (0, 1, 2)),
        identity_map(SIER()),
        fr.identity_frith(F3),
        bt.skula_map(identity_map(SIER())),
        du.BIFRM.identity(bt.three_three_two()),
    ]


@pytest.mark.parametrize("obj", instances(), ids=lambda o: type(o).__name__)
def test_round_trip(obj):
    text = io.dumps(obj)
    back = io.loads(text)
    assert io.dumps(back) == text


def test_parse_gives_canonical_form():
    P = io.loads(SIER_TEXT)
    assert P == SIER()
    assert io.canonical(SIER_TEXT) == io.dumps(SIER())
    assert io.canonical(io.canonical(SIER_TEXT)) == io.canonical(SIER_TEXT)


def test_missing_empty_set():
    with pytest.raises(InvariantViolation, match="family must contain the empty set"):
        io.loads('{"kind": "pervin", "ground": ["a"], "sets": [[0]]}')


def test_schema_error_names_line_and_field():
    text = '{"kind": "pervin",\n "ground": ["a", "b"],\n "sets": [[], [0], ["x"]]}'
    with pytest.raises(io.SchemaError) as err:
        io.loads(text)
    assert err.value.line == 3
    assert err.value.field == "sets[2][0]"


def test_json_syntax_error_has_line():
    with pytest.raises(io.SchemaError) as err:
        io.loads('{"kind": "pervin",\n "ground": [}')
    assert err.value.line == 2


def test_index_out_of_range():
    with pytest.raises(io.SchemaError, match="out of range"):
        io.loads('{"kind": "pervin", "ground": ["a"], "sets": [[], [0], [3]]}')


def test_unknown_kind():
    with pytest.raises(io.SchemaError, match="unknown kind"):
        io.loads('{"kind": "quiver"}')


def test_non_morphism_map_is_rejected():
    doc = io.to_doc(PervinMap(SIER(), SIER(), (0, 1)))
    doc["map"] = [1, 0]
    with pytest.raises(InvariantViolation):
        io.from_doc(doc)


@given(pervin_spaces())
def test_pervin_round_trip_property(P):
    assert io.loads(io.dumps(P)) == P


@given(lattices)
def test_lattice_round_trip_property(L):
    assert io.dumps(io.loads(io.dumps(L))) == io.dumps(L)


@given(frith_pairs())
def test_frith_round_trip_property(F):
    assert io.dumps(io.loads(io.dumps(F))) == io.dumps(F)


def _edges(dot):
    return [line.strip() for line in dot.splitlines() if "->" in line]


def test_dot_for_c3_is_a_two_edge_chain():
    assert _edges(io.emit_dot(C3())) == ["n0 -> n1;", "n1 -> n2;"]


def test_dot_for_b4_is_a_diamond():
    dot = io.emit_dot(B4())
    assert dot.count("[label=") == 4
    assert len(_edges(dot)) == 4


def test_dot_for_priestley_sierpinski():
    dot = io.emit_dot(du.pp(SIER()))
    # b (n1) below a (n0)
    assert _edges(dot) == ["n1 -> n0;"]
    assert dot.count("[label=") == 2


# ---------------------------------------------------------------------------
# command line


@pytest.fixture
def sier_file(tmp_path):
    p = tmp_path / "sier.json"
    p.write_text(SIER_TEXT)
    return str(p)


def test_cli_validate(sier_file, capsys):
    assert main(["validate", sier_file]) == 0
    assert capsys.readouterr().out.startswith("ok pervin")


def test_cli_input_error_exits_2(tmp_path, capsys):
    bad = tmp_path / "bad.json"
    bad.write_text('{"kind": "pervin", "ground": ["a"], "sets": [[0]]}')
    assert main(["validate", str(bad)]) == 2
    assert "empty set" in capsys.readouterr().err
    assert main(["validate", str(tmp_path / "missing.json")]) == 2


def test_cli_check(sier_file, capsys):
    assert main(["check", "t0", sier_file, "--format", "json"]) == 0
    assert json.loads(capsys.readouterr().out)["holds"] is True
    assert main(["check", "symmetric", sier_file]) == 1
    assert main(["check", "frith", sier_file]) == 2


def test_cli_apply_and_dot(sier_file, tmp_path, capsys):
    out = tmp_path / "pp.json"
    assert main(["apply", "pp", sier_file, "--out", str(out)]) == 0
    assert main(["dot", str(out)]) == 0
    assert "n1 -> n0;" in capsys.readouterr().out


def test_cli_apply_omega(sier_file, capsys):
    assert main(["apply", "omega", sier_file]) == 0
    F = io.loads(capsys.readouterr().out)
    assert F.lattice.size == 3 and F.is_frith


@pytest.mark.parametrize("duality", ["omega-pt", "stone", "priestley", "skula"])
def test_cli_roundtrip(sier_file, duality, capsys):
    assert main(["roundtrip", duality, sier_file, "--format", "json"]) == 0
    assert all(r["pass"] for r in json.loads(capsys.readouterr().out))


def test_cli_char_report(sier_file, capsys):
    assert main(["char-report", sier_file, "--format", "json", "--bound", "3"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert all(doc["conditions"].values())


def test_cli_enumerate(capsys):
    assert main(["enumerate", "pervin", "--max-points", "2"]) == 0
    assert len(capsys.readouterr().out.splitlines()) == 5


def test_cli_suite_single_criterion(tmp_path):
    out = tmp_path / "report.json"
    assert main(["suite", "--only", "1", "--format", "json", "--out", str(out)]) == 0
    doc = json.loads(out.read_text())
    assert doc["pass"] and [c["criterion"] for c in doc["criteria"]] == [1]


def test_cli_suite_negative_control_exits_1(capsys):
    argv = ["suite", "--only", "6", "--negative-control", "--max-points", "2", "--max-family", "4", "--max-lattice", "4"]
    assert main(argv) == 1
    assert "counterexample" in capsys.readouterr().out


# ---------------------------------------------------------------------------
# suite plumbing


def test_suite_config_rejects_non_positive_bounds():
    with pytest.raises(ValueError):
        SuiteConfig(max_points=0)


def test_degenerate_suite_passes():
    cfg = SuiteConfig(max_points=1, max_family=2, max_lattice=3, search_bound=1)
    result = run_suite(cfg)
    assert result.exit_code == 0, report_markdown(result)
    assert [c.number for c in result.criteria] == list(range(1, 11))


def test_reports_are_deterministic():
    cfg = SuiteConfig(max_points=2, max_family=4, max_lattice=4, search_bound=2)
    assert report_json(run_suite(cfg, [1, 3, 5, 7])) == report_json(run_suite(cfg, [1, 3, 5, 7]))


def test_parallel_run_matches_serial():
    cfg = SuiteConfig(max_points=2, max_family=4, max_lattice=4, search_bound=2)
    par = SuiteConfig(max_points=2, max_family=4, max_lattice=4, search_bound=2, parallelism=2)
    serial = json.loads(report_json(run_suite(cfg, [1, 4, 7])))["criteria"]
    assert serial == json.loads(report_json(run_suite(par, [1, 4, 7])))["criteria"]
