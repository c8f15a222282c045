"""Command-line interface, driven through main(argv)."""

import io
import json

from adinkra import builtin, to_json, to_matrices
from adinkra.cli import main
from adinkra.fixtures import GRAPH_FILES, PRODUCT_FILES, fixture_text


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_check_pass(capsys):
    code, out, _ = run(capsys, "check", "builtin:cube")
    assert code == 0
    assert "result: PASS" in out
    assert "garden: left ok, right ok (0 violations)" in out


def test_check_rejected_graph(capsys):
    code, out, _ = run(capsys, "check", "builtin:rd")
    assert code == 1
    assert "equal counts    FAIL (6 vs 8)" in out
    assert "garden: skipped (matrices are not square)" in out
    assert "result: FAIL" in out


def test_check_square_but_failing(capsys):
    code, out, _ = run(capsys, "check", "builtin:ri")
    assert code == 1
    assert "garden: left FAIL" in out


def test_check_json(capsys):
    code, out, _ = run(capsys, "check", "builtin:cube", "--json")
    assert code == 0
    doc = json.loads(out)
    assert doc["graph"] == "cube"
    assert doc["candidacy"]["verdict"] == "candidate"
    assert doc["garden"]["ok"] is True
    assert doc["pass"] is True


def test_check_reads_file_and_stdin(capsys, monkeypatch, tmp_path):
    path = tmp_path / "g.json"
    path.write_text(to_json(builtin("diamond")))
    code, out, _ = run(capsys, "check", str(path))
    assert code == 0 and "result: PASS" in out

    monkeypatch.setattr("sys.stdin", io.StringIO(to_json(builtin("diamond"))))
    code, out, _ = run(capsys, "check", "-")
    assert code == 0 and "result: PASS" in out


def test_missing_file_is_usage_error(capsys):
    code, _, err = run(capsys, "check", "/no/such/file.json")
    assert code == 2
    assert err.startswith("error:")


def test_malformed_json_is_usage_error(capsys, tmp_path):
    path = tmp_path / "bad.json"
    path.write_text("{]")
    code, _, err = run(capsys, "check", str(path))
    assert code == 2 and "error:" in err
    assert "line 1 column 2" in err  # parse location is preserved


def test_matrices_json_round_trip(capsys):
    code, out, _ = run(capsys, "matrices", "builtin:diamond", "--json")
    assert code == 0
    doc = json.loads(out)
    mats = to_matrices(builtin("diamond"))
    assert doc["L"] == [m.tolist() for m in mats]
    assert doc["d"] == 2 and doc["d_hat"] == 2


def test_matrices_text_blocks(capsys):
    code, out, _ = run(capsys, "matrices", "builtin:diamond")
    assert code == 0
    assert "L1" in out and "R2" in out
    assert " 0  1" in out and "-1  0" in out


def test_garden_exit_codes(capsys):
    code, out, _ = run(capsys, "garden", "builtin:hypercube-2")
    assert code == 0 and "summary: left ok, right ok" in out
    code, out, _ = run(capsys, "garden", "builtin:rd")
    assert code == 1
    assert "summary: left ok, right FAIL (32 violations)" in out


def test_garden_caps_violation_listing(capsys):
    _, out, _ = run(capsys, "garden", "builtin:rd")
    assert "... and 12 more" in out


def test_dashings_feasible(capsys):
    code, out, _ = run(capsys, "dashings", "builtin:cube")
    assert code == 0
    assert "gauge: spanning forest fixes 7 edges, 5 free" in out
    assert "feasible: yes" in out
    assert "witness (edge order):" in out


def test_dashings_exhaustive_counts(capsys):
    code, out, _ = run(capsys, "dashings", "builtin:cube", "--exhaustive")
    assert code == 0
    assert "gauge orbits found: 1" in out
    assert "total dashings: 128" in out


def test_dashings_pruned(capsys):
    code, out, _ = run(capsys, "dashings", "builtin:rd")
    assert code == 1
    assert "pruned: equal-counts filter failed (6 vs 8)" in out
    assert "feasible: no" in out


def test_dashings_budget_errors(capsys):
    code, _, err = run(capsys, "dashings", "builtin:cube", "--budget", "4")
    assert code == 2
    assert "enumeration steps" in err


def test_dashings_env_budget(capsys, monkeypatch):
    monkeypatch.setenv("ADINKRA_BUDGET", "4")
    code, _, err = run(capsys, "dashings", "builtin:cube")
    assert code == 2 and "budget is 4" in err


def test_search_finds_diamond(capsys):
    code, out, _ = run(capsys, "search", "-d", "2", "-n", "2")
    assert code == 0
    assert "scanned: 2 raw candidates" in out
    assert "solutions: 1" in out
    assert "solution 1: 2+2 vertices, 4 edges, connected, multiplicity 1" in out


def test_search_empty_result(capsys):
    # No fixed-point-free involutions exist on 3 elements.
    code, out, _ = run(capsys, "search", "-d", "3", "-n", "2")
    assert code == 1
    assert "solutions: 0" in out


def test_search_disconnected_suppression(capsys):
    code, out, _ = run(capsys, "search", "-d", "4", "-n", "2")
    assert code == 1
    assert "disconnected" in out
    code, out, _ = run(
        capsys, "search", "-d", "4", "-n", "2", "--allow-disconnected"
    )
    assert code == 0
    assert "solutions: 1" in out


def test_search_json_to_file(capsys, tmp_path):
    dest = tmp_path / "out.json"
    code, _, _ = run(
        capsys, "search", "-d", "4", "-n", "3", "--json", str(dest)
    )
    assert code == 0
    doc = json.loads(dest.read_text())
    assert doc["scanned"] == 576
    assert len(doc["solutions"]) == 1
    assert doc["solutions"][0]["multiplicity"] == 6
    assert doc["solutions"][0]["connected"] is True


def test_search_budget_gate(capsys):
    code, _, err = run(capsys, "search", "-d", "8", "-n", "4")
    assert code == 2 and "error:" in err


def test_fixtures_ok(capsys):
    code, out, _ = run(capsys, "fixtures")
    assert code == 0
    assert "50/50 matrices match" in out


def test_fixtures_detects_damage(capsys, tmp_path):
    for fname in PRODUCT_FILES + GRAPH_FILES:
        (tmp_path / fname).write_text(fixture_text(fname))
    doc = json.loads((tmp_path / "rd_products.json").read_text())
    doc["left"][2]["matrix"][1][1] -= 2
    (tmp_path / "rd_products.json").write_text(json.dumps(doc))
    code, out, _ = run(capsys, "fixtures", "--dir", str(tmp_path))
    assert code == 1
    assert "49/50 matrices match" in out


def test_fixtures_missing_dir(capsys, tmp_path):
    code, _, err = run(capsys, "fixtures", "--dir", str(tmp_path / "nope"))
    assert code == 2 and "error:" in err


def test_export_dot(capsys, tmp_path):
    dest = tmp_path / "g.dot"
    code, _, _ = run(capsys, "export-dot", "builtin:diamond", str(dest))
    assert code == 0
    text = dest.read_text()
    assert text.startswith('graph "diamond" {')
    assert "style=dashed" in text


def test_builtin_list_and_dump(capsys):
    code, out, _ = run(capsys, "builtin", "--list")
    assert code == 0
    assert "rhombic-dodecahedron" in out and "hypercube-<n>" in out
    code, out, _ = run(capsys, "builtin", "rd")
    assert code == 0
    assert out == to_json(builtin("rd"))


def test_builtin_unknown(capsys):
    code, _, err = run(capsys, "builtin", "klein-bottle")
    assert code == 2
    assert "unknown builtin graph" in err


def test_no_arguments_shows_usage(capsys):
    code, _, _ = run(capsys)
    assert code == 2
