import json

import pytest

from pmcsolver.cli import main
from pmcsolver.config.settings import settings
from pmcsolver.harness.generators import complete, cycle, path
from pmcsolver.harness.io import write_graph


@pytest.fixture
def graph_file(tmp_path):
    def write(name, g, weights=None):
        target = tmp_path / f"{name}.txt"
        write_graph(target, g, weights)
        return str(target)

    return write


def test_recognize(graph_file, capsys):
    assert main(["recognize", graph_file("c5", cycle(5))]) == 0
    report = json.loads(capsys.readouterr().out)
    assert report["in_class_c"] is True
    assert report["long_hole_free"] is False
    assert report["witnesses"]["long_hole"] is None


def test_seps_and_pmcs(graph_file, capsys):
    c4 = graph_file("c4", cycle(4))
    assert main(["seps", c4]) == 0
    assert capsys.readouterr().out == "0 2\n1 3\n"
    assert main(["pmcs", graph_file("p3", path(3))]) == 0
    assert capsys.readouterr().out == "0 1\n1 2\n"


def test_mwis_and_fvs(graph_file, capsys):
    assert main(["mwis", graph_file("c4w", cycle(4), (5, 1, 1, 1))]) == 0
    assert capsys.readouterr().out == "weight 6\nset 0 2\n"
    assert main(["fvs", graph_file("k4", complete(4))]) == 0
    assert capsys.readouterr().out == "weight 2\nset 0 1\n"


def test_tw_subgraph_strategies(graph_file, tmp_path, capsys):
    k4 = graph_file("k4", complete(4))
    assert main(["tw-subgraph", k4, "--k", "2"]) == 0
    assert capsys.readouterr().out == "weight 2\nset 2 3\n"

    family = tmp_path / "family.txt"
    family.write_text("0 1 2 3\n")
    assert main(["tw-subgraph", k4, "--k", "2", "--strategy", "family", str(family)]) == 0
    assert capsys.readouterr().out == "weight 2\nset 2 3\n"

    assert main(["tw-subgraph", graph_file("p4", path(4)), "--k", "1", "--strategy", "class-c"]) == 0
    assert capsys.readouterr().out == "weight 2\nset 1 3\n"


def test_empty_solution_prints_bare_set(graph_file, capsys):
    assert main(["mwis", graph_file("zero", path(2), (0, 0))]) == 0
    assert capsys.readouterr().out == "weight 0\nset\n"


def test_exit_codes(graph_file, tmp_path, capsys):
    c5 = graph_file("c5", cycle(5))
    assert main(["mwis", c5]) == 2
    assert main(["seps", c5, "--budget", "1"]) == 3
    bad = tmp_path / "bad.txt"
    bad.write_text("3 1\n0 7\n")
    assert main(["seps", str(bad)]) == 4
    assert main(["tw-subgraph", c5, "--k", "1", "--strategy", "greedy"]) == 1
    assert main(["tw-subgraph", c5, "--k", "1", "--strategy", "family"]) == 1
    assert "error:" in capsys.readouterr().err


def test_verify_suite(graph_file, monkeypatch, capsys):
    monkeypatch.setattr(settings, "verify_instances", 2)
    assert main(["verify", graph_file("c4", cycle(4)), "--suite", "dp", "--max-n", "5"]) == 0
    out = capsys.readouterr().out
    assert out.startswith("dp: 3 instances")
    assert "0 failures" in out


def test_usage_errors_exit_with_invalid_argument(graph_file, capsys):
    c4 = graph_file("c4", cycle(4))
    assert main(["tw-subgraph", c4]) == 1
    assert main(["mwis", c4, "--seed", "3"]) == 1
    assert main(["frobnicate", c4]) == 1
    assert main(["--help"]) == 0
    assert "usage:" in capsys.readouterr().out
