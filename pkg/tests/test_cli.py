"""Command line interface, run in process."""

import json

from spatialgraphs import cli
from spatialgraphs.multigraph import parse_edge_list


def run(capsys, *argv):
    code = cli.main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_families_census_lines(capsys):
    code, out, _ = run(capsys, "families", "--seed", "K6")
    assert code == 0
    assert "7 classes" in out
    code, out, _ = run(capsys, "families", "--seed", "K7")
    assert code == 0
    assert "20 classes" in out


def test_families_triangle_to_star_only(capsys):
    code, out, _ = run(capsys, "families", "--seed", "K7", "--moves", "dy")
    assert code == 0
    assert "14 classes" in out


def test_families_rejects_unknown_move(capsys):
    code, _, err = run(capsys, "families", "--seed", "K6", "--moves", "xy")
    assert code == 2
    assert "unknown move" in err


def test_families_manifest_output(capsys, tmp_path):
    out_dir = tmp_path / "pet"
    code, _, _ = run(capsys, "families", "--seed", "K6", "--out", str(out_dir))
    assert code == 0
    manifest = json.loads((out_dir / "manifest.json").read_text())
    assert manifest["collapse_convention"] == "skip"
    names = {m["name"] for m in manifest["members"]}
    assert names == {"K6", "P7", "Y7", "K44me", "P8", "P9", "P10"}
    for name in names:
        g = parse_edge_list((out_dir / f"{name}.edges").read_text())
        assert g.edge_count == 15


def test_families_json_format(capsys):
    code, out, _ = run(capsys, "families", "--seed", "K6", "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert len(payload["members"]) == 7


def test_verify_list(capsys):
    code, out, _ = run(capsys, "verify", "list")
    assert code == 0
    ids = out.split()
    assert "petersen-family" in ids
    assert "n9fn-dichotomy" in ids
    assert len(ids) == 15


def test_verify_pass_and_report(capsys):
    code, out, _ = run(
        capsys, "verify", "petersen-family", "--format", "json", "--seed", "0"
    )
    assert code == 0
    report = json.loads(out)
    assert report["result"] == "PASS"
    assert report["claim"] == "petersen-family"
    assert report["seed"] == 0
    assert "version" in report and "python" in report
    assert report["inputs"]  # pinned input certificates travel with the verdict


def test_verify_unknown_claim(capsys):
    code, _, err = run(capsys, "verify", "petersen-families")
    assert code == 2
    assert "unknown claim" in err


def test_spatial_d4_enumeration(capsys):
    code, out, _ = run(
        capsys, "spatial", "--graph", "D4", "--check", "d4-lemma",
        "--enumerate", "--format", "json",
    )
    assert code == 0
    report = json.loads(out)
    assert report["evidence"]["verdict"]["both_odd_cases"] == 128
    assert report["evidence"]["verdict"]["all_alpha_one"] is True


def test_spatial_shape_guard(capsys):
    code, _, err = run(capsys, "spatial", "--graph", "K6", "--check", "n9fn")
    assert code == 2
    assert "must be one of" in err


def test_spatial_jobs_deterministic(capsys):
    argv = ["spatial", "--graph", "K6", "--check", "cg-k6",
            "--trials", "12", "--seed", "9", "--format", "json"]
    code1, out1, _ = run(capsys, *argv, "--jobs", "1")
    code2, out2, _ = run(capsys, *argv, "--jobs", "3")
    assert code1 == code2 == 0
    assert json.loads(out1) == json.loads(out2)


def test_knot_seed_env_is_default(capsys, monkeypatch):
    monkeypatch.setenv("KNOT_SEED", "31")
    code, out, _ = run(capsys, "verify", "petersen-family", "--format", "json")
    assert code == 0
    assert json.loads(out)["seed"] == 31


def test_missing_graph_file_exits_2(capsys, tmp_path):
    code, _, err = run(capsys, "families", "--seed", str(tmp_path / "nope.edges"))
    assert code == 2
    assert "error" in err
