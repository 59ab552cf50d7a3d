import json
from pathlib import Path

import pytest

from normgeom.cli import run

DATA = Path(__file__).parent / "data"


def _run(args, capsys):
    code, _ = run([str(a) for a in args])
    return code, json.loads(capsys.readouterr().out)


def test_classify_l1(capsys):
    code, rep = _run(["classify", DATA / "l1_2.json", "--budget", "2000"], capsys)
    assert code == 0
    assert rep["results"]["verdict"] == "not-inner-product"
    assert {"command", "config", "timestamp", "version", "results"} <= set(rep)
    assert rep["config"]["budget"] == 2000 and rep["config"]["seed"] == 0


def test_cm_equilateral(capsys):
    code, rep = _run(["cm", DATA / "equilateral.json"], capsys)
    assert code == 0 and abs(rep["results"]["det"] + 3) <= 1e-9
    assert rep["results"]["affinely_dependent"] is False


def test_extend_mismatch_exit_2(capsys):
    code, rep = _run(["extend", DATA / "tri.json", DATA / "tri_bad.json"], capsys)
    assert code == 2 and rep["error"]["name"] == "NotAnIsometry"


def test_extend_flip(capsys):
    code, rep = _run(["extend", DATA / "tri.json", DATA / "tri.json", "--pairing", "0,2,1"],
                     capsys)
    assert code == 0 and rep["results"]["extension"]["Q"] == [[0.0, 1.0], [1.0, 0.0]]


def test_trilaterate(capsys):
    code, rep = _run(["trilaterate", DATA / "anchors.json",
                      "--dists", "1,0.894427190999916,0.6324555320336759"], capsys)
    assert code == 0
    assert rep["results"]["point"] == pytest.approx([0.6, 0.8], abs=1e-10)


def test_malformed_json_exit_1(capsys):
    code, rep = _run(["classify", DATA / "broken.json"], capsys)
    assert code == 1 and "line 2 column 1" in rep["error"]["message"]


def test_missing_file_and_bad_args(capsys):
    code, rep = _run(["cm", DATA / "nope.json"], capsys)
    assert code == 1
    code, rep = _run(["frobnicate"], capsys)
    assert code == 1 and rep["error"]["name"] == "InputError"
    code, rep = _run(["classify", DATA / "l1_2.json", "--budget", "0"], capsys)
    assert code == 1


def test_domain_error_names_reported(capsys):
    code, rep = _run(["cm", DATA / "l1_square.json"], capsys)
    assert code == 2 and rep["error"]["name"] == "NotEuclideanRealizable"
    code, rep = _run(["isosceles", DATA / "l1_2.json", "--n", "4", "--f", "1,0", "--g", "1,1"],
                     capsys)
    assert code == 2 and rep["error"]["name"] == "NotIsosceles"


def test_config_file_and_flag_precedence(tmp_path, capsys):
    cfg = tmp_path / "run.json"
    cfg.write_text(json.dumps({"seed": 5, "budget": 300,
                               "tolerances": {"violation_threshold": 1e-4}}))
    code, rep = _run(["strict-convexity", DATA / "l1_2.json", "--config", cfg,
                      "--budget", "100"], capsys)
    assert code == 0
    assert rep["config"]["seed"] == 5 and rep["config"]["budget"] == 100
    assert rep["config"]["tolerances"]["violation_threshold"] == 1e-4


def test_out_file(tmp_path, capsys):
    out = tmp_path / "r.json"
    code, _ = run(["cm", str(DATA / "collinear.json"), "--out", str(out)])
    assert code == 0 and capsys.readouterr().out == ""
    assert json.loads(out.read_text())["results"]["affinely_dependent"] is True


def test_isosceles_default_vectors(capsys):
    code, rep = _run(["isosceles", DATA / "l2_2.json", "--n", "5"], capsys)
    assert code == 0 and rep["results"]["n"] == 5
