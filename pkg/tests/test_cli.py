import json
import subprocess
import sys

import pytest

from polyreal.cli import main
from polyreal.crystal import CrystalPoint
from polyreal.linform import LinForm
from polyreal.tableaux import ColumnTableau, expand

from conftest import seq_of


def run(capsys, *argv):
    code = main(list(argv))
    return code, json.loads(capsys.readouterr().out)


def test_check_adapted(capsys):
    code, doc = run(capsys, "check", "A", "3", "--word", "3,1,2")
    assert code == 0 and doc["adapted"] is True
    assert doc["positivity"] and doc["strict_positivity"]


def test_check_counterexample_not_ample(capsys):
    code, doc = run(capsys, "check", "A", "3", "--word", "1,2,3,2", "--lambda", "0,1,0")
    assert doc["ample"] is False and doc["adapted"] is False
    assert doc["ample_witness"]["value_at_zero"] < 0


def test_check_zero_weight_ample(capsys):
    _, doc = run(capsys, "check", "--family", "A", "--rank", "2", "--word", "1,2", "--lambda", "0,0")
    assert doc["ample"] is True


def test_show_iota(capsys):
    _, doc = run(capsys, "check", "A", "3", "--word", "3,1,2", "--show-iota", "12")
    assert doc["iota"] == [2, 1, 3] * 4


@pytest.mark.parametrize("argv", [
    ["check", "A", "2", "--word", ""],
    ["check", "A", "1", "--word", "1"],
    ["check", "E", "6", "--word", "1"],
    ["check", "A", "3", "--word", "1,x"],
    ["check", "A", "3", "--word", "3,1,2", "--lambda", "1,0"],
    ["check", "A", "3", "--word", "3,3,1,2"],
    ["enumerate", "A", "2", "--word", "2,1"],
    ["enumerate", "A", "2", "--word", "2,1", "--lambda", "1,-1"],
    ["check", "A", "3", "--rank", "2", "--word", "1,2"],
    ["check", "--word", "1,2"],
])
def test_usage_errors(argv, capsys):
    with pytest.raises(SystemExit) as exc:
        main(argv)
    assert exc.value.code == 2


def test_malformed_word_reports_position(capsys):
    with pytest.raises(SystemExit):
        main(["check", "A", "3", "--word", "1,x"])
    assert "entry 2" in capsys.readouterr().err


def test_inequalities_roundtrip(capsys):
    seq = seq_of("A", 2, (2, 1))
    _, doc = run(capsys, "inequalities", "A", "2", "--word", "2,1", "--rows", "3")
    forms = [LinForm.from_json(seq, f) for f in doc["forms"]]
    assert [f.to_json(seq) for f in forms] == doc["forms"]
    assert doc["count"] == len(set(forms))
    assert {"window", "seeds", "family", "rank", "word"} <= doc.keys()


def test_inequalities_instantiated(capsys):
    _, doc = run(capsys, "inequalities", "A", "2", "--word", "2,1", "--rows", "2", "--lambda", "1,1")
    assert all(f["lambda"] == {} for f in doc["forms"])


def test_tableaux_roundtrip(capsys):
    seq = seq_of("C", 3, (3, 1, 2))
    _, doc = run(capsys, "tableaux", "C", "3", "--word", "3,1,2", "--k", "3")
    assert len(doc["lambda"]["3"]) == 7
    for row in doc["infty"]:
        T = ColumnTableau.from_json(row["tableau"])
        assert expand(seq, T) == LinForm.from_json(seq, row["form"])


def test_enumerate_matches_verify_count(capsys):
    _, doc = run(capsys, "enumerate", "C", "3", "--word", "3,1,2", "--lambda", "0,0,1")
    code, rep = run(capsys, "verify", "C", "3", "--word", "3,1,2", "--lambda", "0,0,1", "--suite", "realization")
    assert code == 0
    assert doc["count"] == rep["reports"][0]["counts"]["crystal"] == 14
    seq = seq_of("C", 3, (3, 1, 2))
    assert all(CrystalPoint.from_json(seq, p).to_json(seq) == p for p in doc["points"])


def test_epsilon_star(capsys):
    point = json.dumps([{"s": 1, "j": 2, "a": 1}, {"s": 1, "j": 1, "a": 2}, {"s": 1, "j": 3, "a": 1},
                        {"s": 2, "j": 2, "a": 3}, {"s": 2, "j": 1, "a": 1}, {"s": 2, "j": 3, "a": 2}])
    _, doc = run(capsys, "epsilon-star", "A", "3", "--word", "3,1,2", "--point", point, "--oracle")
    assert doc["epsilon_star"] == doc["oracle"] == {"1": 2, "2": 1, "3": 1}


def test_epsilon_star_bad_point(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["epsilon-star", "A", "3", "--word", "3,1,2", "--point", "{bad"])
    assert exc.value.code == 2


def test_epsilon_star_point_outside_image(capsys):
    code = main(["epsilon-star", "A", "3", "--word", "3,1,2", "--point", '[{"s": 2, "j": 1, "a": 1}]'])
    assert code == 1


def test_verify_exit_code_and_out(tmp_path, capsys):
    out = tmp_path / "r.json"
    code = main(["verify", "A", "2", "--suite", "all", "--out", str(out)])
    doc = json.loads(out.read_text())
    assert code == 0 and doc["summary"]["outcome"] == "pass" and doc["summary"]["failed"] == 0


def test_output_is_byte_identical():
    argv = [sys.executable, "-m", "polyreal", "inequalities", "B", "2", "--word", "1,2", "--rows", "3"]
    a = subprocess.run(argv, capture_output=True, check=True).stdout
    b = subprocess.run(argv, capture_output=True, check=True).stdout
    assert a == b and a.endswith(b"\n")
