"""End-to-end command line checks: formats, exit codes, determinism."""

from __future__ import annotations

import json

import pytest

from coverlab.cli import main


@pytest.fixture
def p5_file(tmp_path):
    doc = {
        "vertices": ["x1", "x2", "x3", "x4", "x5"],
        "edges": [["x1", "x2"], ["x2", "x3"], ["x3", "x4"], ["x4", "x5"]],
    }
    path = tmp_path / "p5.json"
    path.write_text(json.dumps(doc), encoding="utf-8")
    return str(path)


def test_analyze_text(p5_file, capsys):
    rc = main(["analyze", p5_file])
    out = capsys.readouterr().out
    assert rc == 0
    assert "not quasi-equigenerated" in out
    assert "x2*x4" in out
    assert "tree-grading-criterion" in out


def test_analyze_json_structure(p5_file, capsys):
    rc = main(["analyze", p5_file, "--format", "json"])
    assert rc == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["graph"]["vertices"] == 5
    assert doc["cover_ideal"]["generators"][0] == "x2*x4"
    assert doc["grading"]["quasi_equigenerated"] is False
    assert doc["fiber"] == {"status": "not quasi-equigenerated"}
    assert doc["unique_set_vertices"] == [
        {"vertex": "x3", "set": ["x1", "x3", "x5"]}
    ]


def test_analyze_deterministic(p5_file, capsys):
    main(["analyze", p5_file, "--format", "json"])
    first = capsys.readouterr().out
    main(["analyze", p5_file, "--format", "json"])
    second = capsys.readouterr().out
    assert first == second


def test_analyze_unit_ideal(tmp_path, capsys):
    doc = {"vertices": ["a", "b"], "edges": []}
    f = tmp_path / "edgeless.json"
    f.write_text(json.dumps(doc), encoding="utf-8")
    rc = main(["analyze", str(f)])
    out = capsys.readouterr().out
    assert rc == 0
    assert "unit ideal" in out


def test_analyze_writes_file(p5_file, tmp_path):
    target = tmp_path / "report.json"
    rc = main(["analyze", p5_file, "--format", "json", "--out", str(target)])
    assert rc == 0
    doc = json.loads(target.read_text(encoding="utf-8"))
    assert doc["graph"]["edges"] == 4


def test_unknown_field_rejected(tmp_path, capsys):
    f = tmp_path / "bad.json"
    f.write_text('{"vertices": ["a"], "edges": [], "extra": 1}', encoding="utf-8")
    rc = main(["analyze", str(f)])
    err = capsys.readouterr().err
    assert rc == 2
    assert "unknown field" in err


def test_malformed_json_rejected(tmp_path, capsys):
    f = tmp_path / "broken.json"
    f.write_text("{not json", encoding="utf-8")
    assert main(["analyze", str(f)]) == 2


def test_missing_file_rejected(tmp_path):
    assert main(["analyze", str(tmp_path / "nope.json")]) == 2


def test_duplicate_vertex_rejected(tmp_path, capsys):
    f = tmp_path / "dup.json"
    f.write_text('{"vertices": ["a", "a"], "edges": []}', encoding="utf-8")
    assert main(["analyze", str(f)]) == 2


def test_family_graph_output(capsys):
    rc = main(["family", "circulant", "--n", "6", "--s", "2"])
    assert rc == 0
    doc = json.loads(capsys.readouterr().out)
    assert len(doc["vertices"]) == 6
    assert len(doc["edges"]) == 12


def test_family_analyze_two_cliques(capsys):
    rc = main(["family", "two-cliques", "--n", "3", "--m", "3",
               "--analyze", "--format", "json"])
    assert rc == 0
    doc = json.loads(capsys.readouterr().out)
    fb = doc["fiber"]
    assert fb["generator_count"] == 5
    assert fb["analytic_spread"] == 4
    assert fb["square_generator_count"] == 14
    assert fb["freiman"] is True
    assert doc["toric"]["counts"] == {"2": 1, "3": 0, "4": 0}


def test_family_missing_parameter(capsys):
    assert main(["family", "circulant", "--n", "6"]) == 2
    assert "requires --s" in capsys.readouterr().err


def test_family_invalid_parameter(capsys):
    assert main(["family", "circulant", "--n", "6", "--s", "5"]) == 2


def test_family_whisker_and_join(tmp_path, capsys):
    base = tmp_path / "tri.json"
    base.write_text(
        json.dumps(
            {
                "vertices": ["a", "b", "c"],
                "edges": [["a", "b"], ["b", "c"], ["a", "c"]],
            }
        ),
        encoding="utf-8",
    )
    rc = main(["family", "whisker", "--base", str(base)])
    assert rc == 0
    doc = json.loads(capsys.readouterr().out)
    assert len(doc["vertices"]) == 6 and len(doc["edges"]) == 6

    rc = main(["family", "join", "--g1", str(base), "--g2", str(base)])
    assert rc == 0
    doc = json.loads(capsys.readouterr().out)
    assert len(doc["vertices"]) == 6 and len(doc["edges"]) == 3 + 3 + 9


def test_family_h_member(capsys):
    rc = main(["family", "h-family", "--k", "3", "--analyze", "--format", "json"])
    assert rc == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["fiber"]["generator_count"] == 6
    assert doc["fiber"]["freiman"] is False
    assert doc["toric"]["counts"]["3"] == 1


def test_sweep_csv_shape(capsys):
    rc = main(["sweep", "two-cliques", "--n-max", "3", "--m-max", "4"])
    assert rc == 0
    lines = capsys.readouterr().out.strip().split("\n")
    header = lines[0].split(",")
    assert header[0] == "n" and "match" in header
    # rows: (2,2),(2,3),(2,4),(3,3),(3,4) -> 5
    assert len(lines) == 6
    assert all(line.split(",")[len(header) - 2] == "true" for line in lines[1:])


def test_sweep_circulant_quasi_flags_but_passes(capsys):
    rc = main(["sweep", "circulant-quasi", "--n-max", "8"])
    assert rc == 0
    out = capsys.readouterr().out
    rows = [line.split(",") for line in out.strip().split("\n")[1:]]
    disagreeing = [(r[0], r[1]) for r in rows if r[6] == "true"]
    assert disagreeing == [("5", "1"), ("8", "2")]
    assert all(r[5] == "true" for r in rows)  # computed matches throughout


def test_sweep_trees(capsys):
    rc = main(["sweep", "trees", "--max-vertices", "6"])
    assert rc == 0
    out = capsys.readouterr().out
    rows = [line.split(",") for line in out.strip().split("\n")[1:]]
    assert all(r[6] == "true" for r in rows)
    freiman_yes = [r for r in rows if r[4] == "true"]
    # the 2-path, the 4-path, and the whiskered 3-path
    assert len(freiman_yes) == 3


def test_sweep_deterministic(capsys):
    main(["sweep", "banded-path-equigenerated", "--n-max", "9", "--s-max", "3"])
    first = capsys.readouterr().out
    main(["sweep", "banded-path-equigenerated", "--n-max", "9", "--s-max", "3"])
    second = capsys.readouterr().out
    assert first == second


def test_sweep_text_format(capsys):
    rc = main(["sweep", "whisker-freiman", "--max-base-vertices", "4",
               "--format", "text"])
    assert rc == 0
    out = capsys.readouterr().out
    assert "base" in out.split("\n")[0]
    assert "," not in out.split("\n")[1]


def test_capacity_exit_code(monkeypatch, capsys):
    monkeypatch.setenv("COVERLAB_MAX_PRODUCTS", "5")
    rc = main(["family", "two-cliques", "--n", "4", "--m", "5", "--analyze"])
    assert rc == 3
    assert "capacity" in capsys.readouterr().err
