"""End-to-end CLI behavior: JSON schemas, exit codes, SVG output."""

import json
import random

import pytest

from mwgap.cli import main
from mwgap.core import random_kway_cut
from mwgap.serialize import dump_cut, load_instance
from mwgap.svg import emit_svg
from mwgap.weights import build_fk, build_w3
from mwgap.core import WeightFunction


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


def test_build_and_lpc(tmp_path, capsys):
    inst = tmp_path / "w3.json"
    code, _ = run(capsys, "build", "--weights", "w3", "--n", "9", "--out", str(inst))
    assert code == 0
    w = load_instance(str(inst))
    assert w.n == 9 and w.k == 3
    code, out = run(capsys, "lpc", str(inst))
    assert code == 0
    assert json.loads(out)["lpc"] == "8/9"


def test_build_fk_lpc(tmp_path, capsys):
    inst = tmp_path / "fk.json"
    assert run(capsys, "build", "--weights", "fk", "--out", str(inst))[0] == 0
    code, out = run(capsys, "lpc", str(inst))
    assert json.loads(out)["lpc"] == "7/8"


def test_certify_pass_and_fail_exit_codes(tmp_path, capsys):
    inst = tmp_path / "w3.json"
    run(capsys, "build", "--weights", "w3", "--n", "6", "--out", str(inst))
    code, out = run(capsys, "certify", str(inst), "--family", "nonopposite", "--target", "1/1")
    assert code == 0
    obj = json.loads(out)
    assert obj["pass"] is True and obj["overall"] == "1/1"
    # an unreachable target fails with exit 1
    code, out = run(capsys, "certify", str(inst), "--family", "nonopposite", "--target", "2/1")
    assert code == 1
    assert json.loads(out)["pass"] is False


def test_brute_subcommand(tmp_path, capsys):
    inst = tmp_path / "fk.json"
    run(capsys, "build", "--weights", "fk", "--out", str(inst))
    code, out = run(capsys, "brute", str(inst), "--family", "nonopposite")
    assert code == 0
    obj = json.loads(out)
    assert obj["min"] == "1/1"
    assert {"k", "n", "labels", "family"} <= set(obj["cut"])


def test_project_subcommand(tmp_path, capsys):
    cutfile = tmp_path / "cut.json"
    dump_cut(random_kway_cut(5, 3, random.Random(1)), str(cutfile))
    code, out = run(capsys, "project", "--cut", str(cutfile))
    obj = json.loads(out)
    assert code == (0 if obj["bounds_hold"] else 1)
    assert len(obj["per_pair"]) == 10  # C(5, 2) terminal pairs


def test_round_subcommand_deterministic(capsys):
    code, out1 = run(capsys, "round", "--n", "3", "--samples", "5000", "--seed", "77")
    assert code == 0
    _, out2 = run(capsys, "round", "--n", "3", "--samples", "5000", "--seed", "77")
    assert out1 == out2
    obj = json.loads(out1)
    assert {"tau_hat", "worst_pair", "ci3sigma", "corner_fraction"} <= set(obj)


def test_round_requires_seed(capsys):
    code, _ = run(capsys, "round", "--n", "3", "--samples", "5000")
    assert code == 2


def test_lpsearch_subcommand(tmp_path, capsys):
    out_file = tmp_path / "weights.json"
    code, _ = run(capsys, "lpsearch", "--n", "3", "--out", str(out_file))
    assert code == 0
    obj = json.loads(out_file.read_text())
    assert obj["certified"] is True
    assert "/" in obj["lpc_exact"]
    assert obj["iterations"] >= 1


def test_usage_errors_exit_2(capsys, tmp_path):
    assert run(capsys, "build", "--weights", "nope")[0] == 2
    assert run(capsys, "lpc", str(tmp_path / "missing.json"))[0] == 2


def test_svg_subcommand(tmp_path, capsys):
    inst = tmp_path / "w3.json"
    run(capsys, "build", "--weights", "w3", "--n", "9", "--out", str(inst))
    code, out = run(capsys, "svg", str(inst), "--potential", "1")
    assert code == 0
    assert out.startswith("<svg")
    assert "stroke-dasharray" in out  # zero-weight edges inside corners
    _, out2 = run(capsys, "svg", str(inst), "--potential", "1")
    assert out == out2


def test_svg_rejects_non_triangle():
    w = WeightFunction(4, 2, {})
    with pytest.raises(ValueError):
        emit_svg(w)


def test_svg_empty_weights_all_dashed():
    w = WeightFunction(3, 2, {})
    text = emit_svg(w)
    assert text.count("stroke-dasharray") == text.count("<line")


def test_ledger_subset(tmp_path, capsys):
    report_file = tmp_path / "report.json"
    code, out = run(capsys, "ledger", "--only", "1", "--out", str(report_file))
    assert code == 0
    assert "criterion 1" in out
    report = json.loads(report_file.read_text())
    assert report["pass"] is True
    assert report["criteria"][0]["id"] == 1
