import os

import networkx as nx
import pytest
from pydantic import ValidationError

from algorithms.guarantees import uniform_replimit_ss_floor
from data.connectors import write_edge_list
from diversity.bounds import g
from errors import InputError
from harness.experiment import (
    CSV_COLUMNS,
    ExperimentConfig,
    SweepRow,
    build_instance,
    compare_diversity,
    constraint_rank,
    degree_partition,
    objective_gaps,
    parameter_range,
    parse_constraint_spec,
    read_sweep_csv,
    row_dict,
    run_sweep,
    ss_bound,
    write_sweep_csv,
)
from matroids.oracles import IntersectionConstraint, UniformMatroid


@pytest.fixture
def toy_graph_path(tmp_path):
    graph = nx.cycle_graph(8)
    graph.add_edges_from([(0, 4), (2, 6)])
    path = tmp_path / "toy.txt"
    write_edge_list(graph, str(path))
    return str(path)


def _row(algo, param, ss, r=4, min_f=10, best_known=12):
    return SweepRow("toy", "U3", algo, param, r, min_f, float(min_f), ss, 40, best_known, 0, 0, 0)


def test_parse_constraint_specs():
    assert parse_constraint_spec("uniform:10").K == 10
    assert parse_constraint_spec("partition:blocks.txt").path == "blocks.txt"
    spec = parse_constraint_spec("degree:3:1,2,1:reverse")
    assert (spec.blocks, spec.caps, spec.reverse) == (3, [1, 2, 1], True)


@pytest.mark.parametrize("text", ["bogus", "uniform:x", "partition:", "degree:x:1"])
def test_parse_constraint_spec_rejects(text):
    with pytest.raises(InputError):
        parse_constraint_spec(text)


def test_config_needs_one_constraint_and_one_graph():
    with pytest.raises(ValidationError):
        ExperimentConfig(graph="g.txt", uniform=3, partition="p.txt", r=4)
    with pytest.raises(ValidationError):
        ExperimentConfig(graph="g.txt", r=4)
    with pytest.raises(ValidationError):
        ExperimentConfig(graph="g.txt", standin="frb30-15-1", uniform=3, r=4)
    with pytest.raises(ValidationError):
        ExperimentConfig(graph="g.txt", uniform=3, r=1)
    with pytest.raises(ValidationError):
        ExperimentConfig(graph="g.txt", degree_partition=3, r=4)
    assert ExperimentConfig(graph="data/g.txt", uniform=3, r=4).graph_name == "g"


def test_degree_partition_blocks():
    M = degree_partition(nx.path_graph(12), 10, [1] * 10)
    assert M.block_sizes == [3] + [1] * 9
    assert M.blocks[0] == [0, 1, 11]
    assert M.rank == 10
    reverse = degree_partition(nx.path_graph(12), 10, [1] * 10, reverse=True)
    assert reverse.blocks[0] == [1, 2, 3]
    assert degree_partition(nx.path_graph(12), 10, [6] + [1] * 9).rank == 12


def test_degree_partition_rejects_bad_shapes():
    with pytest.raises(InputError):
        degree_partition(nx.path_graph(4), 5, [1] * 5)
    with pytest.raises(InputError):
        degree_partition(nx.path_graph(4), 2, [1])


def test_build_instance_from_file(toy_graph_path):
    cfg = ExperimentConfig(graph=toy_graph_path, uniform=3, r=4)
    graph, f, C = build_instance(cfg)
    assert graph.number_of_nodes() == 8
    assert f.value({0}) == 4
    assert C.label == "U3"
    assert constraint_rank(C) == 3


def test_build_instance_intersection(toy_graph_path):
    cfg = ExperimentConfig(graph=toy_graph_path, intersect=["uniform:3", "degree:2:1,2"], r=3)
    _, _, C = build_instance(cfg)
    assert isinstance(C, IntersectionConstraint)
    assert constraint_rank(C) == 3
    assert ss_bound(C, 3) == min(g(8, 3, 3), g(4, 1, 3) + g(4, 2, 3))


def test_ss_bound_uniform_caps_rank():
    assert ss_bound(UniformMatroid(4, 9), 2) == g(4, 4, 2)


def test_parameter_range():
    assert parameter_range("common", 3, 4) == [0, 1, 2, 3]
    assert parameter_range("replimit", 3, 4) == [1, 2, 3, 4]


def test_common_sweep_is_exact_under_uniform(toy_graph_path, tmp_path):
    csv_path = str(tmp_path / "common.csv")
    result = run_sweep(ExperimentConfig(graph=toy_graph_path, uniform=3, r=4, algo="common", csv_path=csv_path))
    assert not result.failures
    assert [row.param for row in result.rows] == [0, 1, 2, 3]
    for row in result.rows:
        assert row.ss == g(8 - row.param, 3 - row.param, 4)
        assert row.ss <= row.ss_bound == g(8, 3, 4)
        assert row.min_f <= row.best_known
        assert row.ms == 0
    best = result.rows[0].best_known
    assert all(row.best_known == best for row in result.rows)
    assert [row_dict(r) for r in read_sweep_csv(csv_path)] == [row_dict(r) for r in result.rows]


def test_replimit_sweep_meets_uniform_floor(toy_graph_path):
    result = run_sweep(ExperimentConfig(graph=toy_graph_path, uniform=3, r=4, algo="replimit"))
    assert [row.param for row in result.rows] == [1, 2, 3, 4]
    for row in result.rows[:-1]:
        assert row.ss >= uniform_replimit_ss_floor(8, 3, 4, row.param)
    # l = r: every solution is a plain greedy run, but coverage ties may still spread them
    last = result.rows[-1]
    assert 0 <= last.ss <= last.ss_bound


def test_sweep_csv_is_deterministic(toy_graph_path, tmp_path):
    paths = [str(tmp_path / f"run{i}.csv") for i in range(2)]
    for path in paths:
        run_sweep(ExperimentConfig(graph=toy_graph_path, uniform=3, r=4, algo="replimit", csv_path=path))
    with open(paths[0], "rb") as a, open(paths[1], "rb") as b:
        assert a.read() == b.read()


def test_empty_parameter_list_writes_header_only(toy_graph_path, tmp_path):
    csv_path = str(tmp_path / "empty.csv")
    result = run_sweep(ExperimentConfig(graph=toy_graph_path, uniform=3, r=4, params=[], csv_path=csv_path))
    assert result.rows == [] and result.failures == []
    with open(csv_path, encoding="utf-8") as f:
        assert f.read() == ",".join(CSV_COLUMNS) + "\n"


def test_failed_rows_are_collected(toy_graph_path):
    result = run_sweep(ExperimentConfig(graph=toy_graph_path, uniform=3, r=4, params=[1, 7]))
    assert [row.param for row in result.rows] == [1]
    assert result.failures[0]["param"] == 7
    assert "exceeds" in result.failures[0]["error"]


def test_external_best_known_is_used_for_large_graphs(tmp_path):
    path = tmp_path / "cycle.txt"
    write_edge_list(nx.cycle_graph(15), str(path))
    best = tmp_path / "best.csv"
    best.write_text("graph,constraint,best_known\ncycle,U2,99\n", encoding="utf-8")
    result = run_sweep(ExperimentConfig(graph=str(path), uniform=2, r=2, params=[0], best_known_path=str(best)))
    assert result.rows[0].best_known == 99


def test_objective_gaps_and_row_dict():
    rows = [_row("common", 0, 4), _row("common", 1, 3, best_known=None)]
    assert objective_gaps(rows) == [10 / 12]
    assert "max_f" not in row_dict(rows[0])
    assert set(row_dict(rows[0])) == set(CSV_COLUMNS)


def test_compare_diversity_matches_nearest_parameter():
    common = [_row("common", b, ss) for b, ss in [(0, 20), (1, 12), (2, 4), (3, 0)]]
    replimit = [_row("replimit", l, ss) for l, ss in [(1, 15), (2, 13), (3, 2), (4, 0)]]
    # l/r = 1/4 → b=1 (1/3), 1/2 → b=1 (ties go to the smaller b), 3/4 → b=2, 1 → b=3
    assert compare_diversity(common, replimit, 3) == 0.5
    assert compare_diversity([], replimit, 3) == 0.0


@pytest.mark.slow
@pytest.mark.skipif(os.getenv("DIVERSE_RUN_SLOW") != "1", reason="set DIVERSE_RUN_SLOW=1 for experiment-scale sweeps")
def test_representation_limit_is_more_diverse_on_standin():
    wins = []
    for constraint in ({"uniform": 10}, {"degree_partition": 10, "caps": [1] * 10}):
        common = run_sweep(ExperimentConfig(standin="frb30-15-1", complement=True, r=20, algo="common", **constraint))
        replimit = run_sweep(ExperimentConfig(standin="frb30-15-1", complement=True, r=20, algo="replimit", **constraint))
        assert not common.failures and not replimit.failures
        wins.append(compare_diversity(common.rows, replimit.rows, 10))
    assert sum(wins) / len(wins) >= 0.6
