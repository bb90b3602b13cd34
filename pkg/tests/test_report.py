import json

import pytest

from saxl.bases import BaseSearchConfig, parse_edge_dump
from saxl.cli import main
from saxl.errors import ManifestError, ParseError
from saxl.report import ALL_CHECKS, build_group, dumps_report, load_manifest, parse_checks, parse_spec, run_report, run_suite

MANIFESTS = ["manifests/complete_hypergraphs.json", "manifests/prime_valency.json", "manifests/common_neighbour.json"]


def test_parse_basic_specs():
    s = parse_spec("PGL2:7")
    assert (s.kind, s.params) == ("PGL2", (7,))
    s = parse_spec("AFFDEL:5:1")
    assert s.kind == "AffDeletedModule" and s.params[:2] == (5, 1)
    assert build_group("AFFDEL:5:1").degree == 125


def test_parse_nested_wreath():
    s = parse_spec("WR:S:3:2:S:2")
    assert s.kind == "WreathProduct"
    G = build_group(s)
    assert (G.degree, G.order) == (9, 72)


def test_parse_error_position():
    with pytest.raises(ParseError) as exc:
        parse_spec("PGL2:6")
    assert exc.value.position == 5
    with pytest.raises(ParseError):
        parse_spec("")
    with pytest.raises(ParseError):
        parse_spec("S:4:9")
    with pytest.raises(ParseError):
        parse_spec("CAT:NOPE")


def test_even_psl_normalizes():
    s = parse_spec("PSL2:8")
    assert s.kind == "PGL2" and s.notes


def test_parse_checks():
    assert parse_checks(None) == (set(ALL_CHECKS), 3)
    assert parse_checks("cnc,gossip=4") == ({"cnc", "gossip"}, 4)
    with pytest.raises(ValueError):
        parse_checks("bogus")


def test_report_values():
    rep = run_report("S:4")
    assert list(rep)[:3] == ["schema_version", "group_spec", "degree"]
    assert (rep["degree"], rep["order"], rep["base_size"], rep["edge_count"], rep["valency"]) == (4, 24, 3, 4, 3)
    assert rep["complete"] and rep["prime_valency"]
    assert rep["cnc"]["status"] == "holds"
    assert rep["edge_disjoint_cnc"]["status"] == "fails"
    assert rep["timings"] is None

    rep = run_report("AGL1:5:4", {"complete"})
    assert rep["base_size"] == 2 and rep["complete"] and rep["kn_certificate"]["recursive"]
    assert rep["cnc"] is None

    rep = run_report("CAT:M12", {"complete"})
    assert (rep["degree"], rep["order"], rep["base_size"], rep["complete"]) == (12, 95040, 5, True)


def test_report_trivial_base():
    rep = run_report("AGL1:5:1")
    assert rep["base_size"] == 1 and rep["complete"] is False and rep["notes"]


def test_reports_are_deterministic():
    a = dumps_report(run_report("PGL2:7"))
    b = dumps_report(run_report("PGL2:7"))
    assert a == b


def test_report_budget():
    rep = run_report("S:7", cfg=BaseSearchConfig(max_edges=3))
    assert rep["budget_exhausted"]
    assert rep["complete"] == {"status": "unknown"}


@pytest.mark.parametrize("path", MANIFESTS)
def test_manifests_pass(path):
    code, rows = run_suite(path)
    assert code == 0, [r.failures for r in rows if not r.passed]


def test_suite_failure_and_input_errors(tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps([{"spec": "S:4", "expect": {"base_size": 2}}]))
    code, rows = run_suite(bad)
    assert code == 1 and rows[0].failures

    broken = tmp_path / "broken.json"
    broken.write_text(json.dumps([{"spec": "PGL2:6", "expect": {}}]))
    assert run_suite(broken)[0] == 3

    with pytest.raises(ManifestError):
        load_manifest(tmp_path / "missing.json")
    notjson = tmp_path / "x.json"
    notjson.write_text("{not json")
    with pytest.raises(ManifestError):
        load_manifest(notjson)


def test_suite_budget(tmp_path):
    m = tmp_path / "m.json"
    m.write_text(json.dumps({"max_edges": 3, "groups": [{"spec": "S:7", "expect": {}}]}))
    assert run_suite(m)[0] == 2


def test_suite_workers(tmp_path):
    m = tmp_path / "m.json"
    m.write_text(json.dumps([{"spec": s, "expect": {"complete": True}} for s in ("S:4", "A:5", "PGL2:5")]))
    code, rows = run_suite(m, workers=2)
    assert code == 0 and len(rows) == 3


def test_cli_group(tmp_path, capsys):
    out = tmp_path / "r.json"
    assert main(["group", "PGL2:7", "--checks", "cnc,edcnc", "--out", str(out)]) == 0
    rep = json.loads(out.read_text())
    assert rep["cnc"]["status"] == "holds" and rep["edge_disjoint_cnc"]["status"] == "holds"
    assert main(["group", "S:4", "--checks", "complete", "--timings"]) == 0
    rep = json.loads(capsys.readouterr().out)
    assert rep["timings"]["base_size"] >= 0


def test_cli_exit_codes(tmp_path, capsys):
    assert main(["group", "PGL2:6"]) == 3
    assert main(["group", "S:4", "--checks", "nope"]) == 3
    assert main(["group", "S:7", "--max-edges", "3"]) == 2
    assert main(["suite", str(tmp_path / "missing.json")]) == 3
    assert main(["suite", MANIFESTS[1]]) == 0
    assert main(["catalog"]) == 0
    assert "M11" in capsys.readouterr().out


def test_cli_edges(tmp_path):
    out = tmp_path / "e.txt"
    assert main(["edges", "S:4", "--out", str(out)]) == 0
    n, b, edges = parse_edge_dump(out.read_text())
    assert (n, b, len(edges)) == (4, 3, 4)
