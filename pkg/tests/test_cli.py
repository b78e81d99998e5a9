import json

import pytest

from glueyard.cli import run


def write(tmp_path, name, obj):
    p = tmp_path / name
    p.write_text(obj if isinstance(obj, str) else json.dumps(obj))
    return str(p)


def lines(capsys):
    return [json.loads(x) for x in capsys.readouterr().out.splitlines()]


RP2 = {"facets": [[1, 2, 5], [1, 2, 6], [1, 3, 4], [1, 3, 6], [1, 4, 5],
                  [2, 3, 4], [2, 3, 5], [2, 4, 6], [3, 5, 6], [4, 5, 6]]}


def test_analyze_reports_requested_checks(tmp_path, capsys):
    path = write(tmp_path, "rp2.json", RP2)
    assert run(["analyze", "--in", path, "--check", "vd,cm", "--field", "q,gf:2"]) == 0
    (doc,) = lines(capsys)
    assert doc["schema_version"] == 1
    rep = doc["report"]
    assert rep["cm_by_field"] == {"q": True, "gf:2": False}
    assert rep["cm_witness"]["gf:2"] == {"face": [], "degree": 1}
    assert rep["vd"] is False and "shellable" not in rep


def test_analyze_accepts_hypergraphs(tmp_path, capsys):
    path = write(tmp_path, "c4.json", {"edges": [[1, 2], [2, 3], [3, 4], [1, 4]]})
    assert run(["analyze", "--in", path, "--check", "vd"]) == 0
    (doc,) = lines(capsys)
    assert doc["complex"]["facets"] == [["1", "3"], ["2", "4"]]
    assert doc["report"]["vd"] is False


def test_construct_then_analyze_round_trip(tmp_path, capsys):
    spec = write(tmp_path, "spec.json", {
        "central": {"edges": [["1", "2"], ["2", "3"]]},
        "partition": {"U": [["1"], ["2"], ["3"]], "V": []},
        "triples": [{"D": [2], "component": {"edges": [[f"w{i}"]]}} for i in (1, 2, 3)],
    })
    out = str(tmp_path / "h.json")
    assert run(["construct", "hybrid", "--spec", spec, "--out", out]) == 0
    h = json.loads(open(out).read())
    assert h["schema_version"] == 1
    assert sorted(map(sorted, h["edges"])) == [["1", "2"], ["1", "w1"], ["2", "3"], ["2", "w2"], ["3", "w3"]]
    assert run(["analyze", "--in", out, "--check", "vd"]) == 0
    (doc,) = lines(capsys)
    assert doc["report"]["vd"] and doc["report"]["pure"]


@pytest.mark.parametrize("what, edges", [
    ("glue", [["u", "v"], ["a", "b", "u"]]),
    ("glue-star", [["a", "b"], ["a", "u"], ["b", "u"], ["u", "v"]]),
])
def test_construct_glue(tmp_path, capsys, what, edges):
    spec = write(tmp_path, "g.json", {"central": {"edges": [["u", "v"]]},
                                      "attach": {"u": {"edges": [["a", "b"]]}}})
    assert run(["construct", what, "--spec", spec]) == 0
    (doc,) = lines(capsys)
    assert doc["kind"] == "clutter" and doc["edges"] == edges


def test_construct_coloring_and_padding(tmp_path, capsys):
    spec = write(tmp_path, "c.json", {"complex": {"facets": [[1, 2]]}, "parts": [[1], [2]]})
    assert run(["construct", "coloring", "--spec", spec]) == 0
    spec = write(tmp_path, "p.json", {"clutter": {"edges": [[1, 2, 3]]}, "d": 3})
    assert run(["construct", "pip-padding", "--spec", spec]) == 0
    col, pad = lines(capsys)
    assert len(col["facets"]) == 4
    assert len(pad["edges"]) == 7


def test_pip_check(tmp_path, capsys):
    spec = write(tmp_path, "p.json", {"alpha": 2, "D": [3], "hypergraph": {
        "edges": [[1], [2], [3], [4], [1, 2], [2, 4], [3, 4], [1, 2, 3]]}})
    assert run(["pip-check", "--spec", spec]) == 0
    (doc,) = lines(capsys)
    assert doc["holds"] is True and doc["kind"] == "pip-report"


def test_homology(tmp_path, capsys):
    path = write(tmp_path, "t.json", {"facets": [[1, 2], [1, 3], [2, 3]]})
    assert run(["homology", "--in", path, "--field", "q,gf:2"]) == 0
    (doc,) = lines(capsys)
    assert doc["betti"]["q"]["ranks"] == [0, 1]
    assert doc["reduced_euler_characteristic"] == -1


def test_verify_stream_is_byte_identical(tmp_path, capsys):
    args = ["verify", "--theorem", "hybrid", "--count", "5", "--seed", "42"]
    assert run(args) == 0
    first = capsys.readouterr().out
    assert run(args) == 0
    assert capsys.readouterr().out == first
    recs = [json.loads(x) for x in first.splitlines()]
    assert {r["repro"]["index"] for r in recs} == set(range(5))
    assert all(r["agree"] for r in recs)


def test_malformed_json_exits_two_with_position(tmp_path, capsys):
    path = write(tmp_path, "bad.json", '{"facets": [[1, 2]')
    assert run(["analyze", "--in", path]) == 2
    err = json.loads(capsys.readouterr().err)
    assert "line 1" in err["message"] and "column" in err["message"]


@pytest.mark.parametrize("argv", [
    ["analyze", "--in", "x.json", "--bogus"],
    ["verify", "--theorem", "nope"],
    ["frobnicate"],
])
def test_bad_arguments_exit_two(argv, capsys):
    assert run(argv) == 2


def test_domain_errors_exit_two(tmp_path, capsys):
    path = write(tmp_path, "c.json", {"kind": "clutter", "ground": [1, 2, 3], "edges": [[1, 2]]})
    assert run(["analyze", "--in", path, "--covering-clutter"]) == 2
    assert run(["analyze", "--in", path, "--check", "magic"]) == 2
    assert run(["analyze", "--in", path, "--field", "gf:6"]) == 2
    assert run(["homology", "--in", write(tmp_path, "v.json", {"facets": []})]) == 2
    assert run(["analyze", "--in", str(tmp_path / "missing.json")]) == 2


def test_disagreement_exits_one(monkeypatch, capsys):
    import glueyard.cli as cli
    fake = [{"check": "x", "digest": "0", "lhs": 1, "rhs": 2, "status": "disagree", "agree": False}]
    monkeypatch.setattr(cli, "run_family", lambda *a, **k: fake)
    assert run(["verify", "--theorem", "chain", "--count", "1"]) == 1
