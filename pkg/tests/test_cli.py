import json

import pytest

from matroidlimit.cli import main
from matroidlimit.graph import load_graph


@pytest.fixture
def files(tmp_path):
    c3 = tmp_path / "c3.json"
    c4 = tmp_path / "c4.txt"
    assert main(["gen", "--family", "cycle", "--size", "3", "--format", "json", "--out", str(c3)]) == 0
    assert main(["gen", "--family", "cycle", "--size", "4", "--out", str(c4)]) == 0
    return tmp_path, str(c3), str(c4)


def test_gen_formats_agree(files):
    _, c3, c4 = files
    assert load_graph(c3).edge_count == 3
    assert load_graph(c4).vertex_count == 4


def test_rank(files, capsys):
    _, _, c4 = files
    assert main(["rank", "--graph", c4, "--edges", "0,1"]) == 0
    assert capsys.readouterr().out.strip() == "1/2"


def test_qset_and_dq(files, capsys):
    _, c3, c4 = files
    assert main(["qset", "--graph", c3, "--k", "2"]) == 0
    assert len(json.loads(capsys.readouterr().out)["points"]) == 4
    assert main(["dq", "--graph", c3, "--other", c3, "--K", "2"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["lower"] == 0


def test_budget_error_exit(files, capsys):
    _, c3, _ = files
    assert main(["qset", "--graph", c3, "--k", "2", "--budget", "3"]) == 2
    assert "error" in capsys.readouterr().err


def test_net_decorate_balls(files, capsys):
    tmp, c3, _ = files
    reg = str(tmp / "reg.json")
    assert main(["net", "--graph", c3, "--k", "2", "--n", "1", "--registry", reg]) == 0
    assert main(["decorate", "--graph", c3, "--registry", reg, "--window", "2,1"]) == 0
    assert json.loads(capsys.readouterr().out)["edge_count"] == 3
    assert main(["balls", "--graph", c3, "--r", "1", "--registry", reg, "--window", "2,1", "--m", "2"]) == 0
    assert len(json.loads(capsys.readouterr().out)["histogram"]) == 3
    assert main(["decorate", "--graph", c3, "--registry", reg, "--window", "2,2"]) == 2


def test_converge_writes_outputs(tmp_path):
    out = str(tmp_path / "conv")
    assert main(["converge", "--sizes", "3,4", "--K", "1", "--out", out]) == 0
    assert (tmp_path / "conv.csv").exists() and (tmp_path / "conv.json").exists()


def test_verify_all_skipped_exit(capsys):
    assert main(["verify", "--budget", "0"]) == 3
