import json

import networkx as nx
import pytest

from cli import build_parser, build_task, main
from data.connectors import write_edge_list


@pytest.fixture
def toy_graph_path(tmp_path):
    graph = nx.cycle_graph(8)
    graph.add_edges_from([(0, 4), (2, 6)])
    path = tmp_path / "toy.txt"
    write_edge_list(graph, str(path))
    return str(path)


def _task(argv):
    parser = build_parser()
    return build_task(parser, parser.parse_args(argv))


def test_bound_g(capsys):
    assert main(["bound", "--g", "4", "2", "2"]) == 0
    assert capsys.readouterr().out.strip() == "g(4, 2, 2) = 4"


def test_bound_partition(capsys):
    assert main(["bound", "--partition-bound", "2,2", "1,1", "--r", "2"]) == 0
    assert capsys.readouterr().out.strip() == "partition ss bound = 4"
    task = _task(["bound", "--partition-bound", "3,4", "1,2", "--r", "3"])
    assert task["payload"] == {"kind": "partition", "sizes": [3, 4], "caps": [1, 2], "r": 3}


def test_json_output(capsys):
    assert main(["--json", "bound", "--ratio", "6", "3", "1", "2"]) == 0
    result = json.loads(capsys.readouterr().out)
    assert result["data"]["ratio"] == "2/3"


def test_run_builds_common_task(toy_graph_path):
    task = _task(["run", "--graph", toy_graph_path, "--uniform", "3", "--r", "4", "--b", "1"])
    assert task["type"] == "run"
    assert task["payload"]["algo"] == "common"
    assert task["payload"]["param"] == 1
    assert task["payload"]["uniform"] == 3


def test_run_infers_replimit_from_l():
    task = _task(["run", "--standin", "frb30-15-1", "--degree-partition", "3", "--caps", "1,2,1", "--r", "4", "--l", "2"])
    assert task["payload"]["algo"] == "replimit"
    assert task["payload"]["caps"] == [1, 2, 1]


def test_sweep_task_defaults_to_full_range(toy_graph_path):
    task = _task(["sweep", "--graph", toy_graph_path, "--uniform", "3", "--r", "4", "--algo", "replimit", "--csv", "out.csv"])
    assert "params" not in task["payload"]
    assert task["payload"]["csv_path"] == "out.csv"
    single = _task(["sweep", "--graph", toy_graph_path, "--uniform", "3", "--r", "4", "--b", "2"])
    assert single["payload"]["params"] == [2]


@pytest.mark.parametrize(
    "argv",
    [
        ["run", "--graph", "g.txt", "--uniform", "3", "--r", "4"],
        ["run", "--graph", "g.txt", "--r", "4", "--b", "1"],
        ["run", "--graph", "g.txt", "--uniform", "3", "--r", "4", "--algo", "replimit", "--b", "1"],
        ["run", "--graph", "g.txt", "--degree-partition", "3", "--r", "4", "--b", "1"],
        ["run", "--graph", "g.txt", "--uniform", "3", "--partition", "p.txt", "--r", "4", "--b", "1"],
        ["bound"],
        ["bound", "--partition-bound", "2,2", "1,1"],
        ["fixtures", "spiral"],
    ],
)
def test_usage_errors_exit_with_code_2(argv):
    with pytest.raises(SystemExit) as excinfo:
        _task(argv)
    assert excinfo.value.code == 2


def test_run_end_to_end(toy_graph_path, capsys):
    assert main(["run", "--graph", toy_graph_path, "--uniform", "3", "--r", "4", "--b", "1"]) == 0
    assert "ss=22" in capsys.readouterr().out


def test_run_error_returns_one(toy_graph_path, capsys):
    assert main(["run", "--graph", toy_graph_path, "--uniform", "3", "--r", "4", "--b", "5"]) == 1
    assert "exceeds the constraint rank" in capsys.readouterr().err


def test_sweep_end_to_end(toy_graph_path, tmp_path):
    csv_path = tmp_path / "sweep.csv"
    plot_path = tmp_path / "sweep.svg"
    argv = ["sweep", "--graph", toy_graph_path, "--uniform", "3", "--r", "4", "--algo", "common",
            "--csv", str(csv_path), "--plot", str(plot_path), "--plot-kind", "diversity"]
    assert main(argv) == 0
    assert len(csv_path.read_text(encoding="utf-8").splitlines()) == 5
    assert plot_path.exists()


def test_oracle_end_to_end(capsys):
    assert main(["oracle", "--weights", "4,3,2,1", "--uniform", "2", "--r", "2", "--alpha", "1/2"]) == 0
    assert "OPT=7" in capsys.readouterr().out


def test_check_end_to_end(capsys):
    assert main(["check", "--suite", "uniform_exact", "--trials", "3"]) == 0
    assert "uniform_exact: 3 checks, 0 violations" in capsys.readouterr().out


def test_fixtures_end_to_end(capsys):
    assert main(["fixtures", "cyclic", "--n", "6", "--s", "2", "--r", "3"]) == 0
    assert "ss=12, g=12" in capsys.readouterr().out
