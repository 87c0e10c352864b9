import numpy as np
import pytest

from errors import EnumerationLimitError, InputError, NotAMatroidError
from matroids.operations import (
    axioms_check,
    closure_of,
    feasible_extensions,
    has_loops,
    load_partition_file,
    parse_partition_spec,
    rank_of,
)
from matroids.oracles import (
    CountedConstraint,
    ExplicitMatroid,
    IntersectionConstraint,
    LinearMatroid,
    PartitionMatroid,
    PredicateConstraint,
    UniformMatroid,
    random_binary_matroid,
)


@pytest.fixture
def two_blocks():
    return PartitionMatroid.from_blocks([[0, 1], [2, 3]], [1, 1])


def test_uniform_independence_and_rank():
    M = UniformMatroid(3, 2)
    assert M.is_independent({0, 1})
    assert not M.is_independent({0, 1, 2})
    assert rank_of(M, {0, 1, 2}) == 2
    assert M.label == "U2"


def test_partition_rank_and_label(two_blocks):
    assert rank_of(two_blocks, {0, 1, 2}) == 2
    assert two_blocks.rank == 2
    assert two_blocks.label == "P2"
    assert two_blocks.block_sizes == [2, 2]


def test_elements_outside_ground_set_are_rejected():
    with pytest.raises(InputError):
        UniformMatroid(3, 2).is_independent({3})


def test_partition_blocks_must_cover_ground_set():
    with pytest.raises(InputError):
        PartitionMatroid.from_blocks([[0, 1]], [1], ground_size=3)
    with pytest.raises(InputError):
        PartitionMatroid.from_blocks([[0, 1], [1]], [1, 1])


def test_closure(two_blocks):
    assert closure_of(two_blocks, {0}) == {0, 1}
    assert closure_of(UniformMatroid(4, 2), {0, 1}) == {0, 1, 2, 3}
    with pytest.raises(InputError):
        closure_of(two_blocks, {0, 1})


def test_feasible_extensions(two_blocks):
    assert feasible_extensions(UniformMatroid(4, 2), {0}) == {1, 2, 3}
    assert feasible_extensions(two_blocks, {0}) == {2, 3}
    assert feasible_extensions(UniformMatroid(4, 2), {0, 1}) == frozenset()


def test_loops():
    assert not has_loops(UniformMatroid(3, 1))
    assert has_loops(PartitionMatroid.from_blocks([[0], [1, 2]], [0, 1]))


def test_linear_matroid_over_gf2():
    M = LinearMatroid([0b01, 0b10, 0b11])
    assert M.is_independent({0, 1})
    assert not M.is_independent({0, 1, 2})
    assert rank_of(M, range(3)) == 2


def test_random_binary_matroid_is_loop_free():
    M = random_binary_matroid(8, 3, np.random.default_rng(7))
    assert not has_loops(M)
    assert rank_of(M, range(8)) <= 3
    with pytest.raises(InputError):
        random_binary_matroid(3, 0, np.random.default_rng(0))


def test_axioms_hold_for_materialized_matroids(two_blocks):
    assert axioms_check(ExplicitMatroid.from_oracle(two_blocks))
    assert axioms_check(ExplicitMatroid.from_oracle(UniformMatroid(5, 3)))


def test_axioms_report_first_violation():
    assert axioms_check(ExplicitMatroid(3, [{0}])).axiom == "empty"
    report = axioms_check(ExplicitMatroid(2, [set(), {0, 1}]))
    assert not report
    assert report.axiom == "hereditary"
    report = axioms_check(ExplicitMatroid(3, [set(), {0}, {1}, {2}, {0, 1}]))
    assert report.axiom == "exchange"
    assert report.witness == ([2], [0, 1])


def test_explicit_matroid_size_limit():
    with pytest.raises(EnumerationLimitError):
        ExplicitMatroid(21, [])


def test_intersection_is_not_a_matroid(two_blocks):
    C = IntersectionConstraint([two_blocks, UniformMatroid(4, 1)])
    assert C.is_independent({0})
    assert not C.is_independent({0, 2})
    assert C.label == "I(P2&U1)"
    with pytest.raises(NotAMatroidError):
        rank_of(C, range(4))
    with pytest.raises(InputError):
        IntersectionConstraint([UniformMatroid(3, 1), UniformMatroid(4, 1)])


def test_predicate_constraint_refuses_matroid_operations():
    C = PredicateConstraint(3, lambda x: len(x) <= 1)
    assert C.is_independent({2})
    with pytest.raises(NotAMatroidError):
        closure_of(C, {0})


def test_counted_constraint_counts_queries():
    C = CountedConstraint(UniformMatroid(4, 2))
    feasible_extensions(C, {0})
    assert C.calls == 3
    assert C.label == "U2"


def test_parse_partition_spec_is_one_based():
    M = parse_partition_spec("# two blocks\n1: 1 2\n2: 3 4 5\n")
    assert M.blocks == [[0, 1], [2, 3, 4]]
    assert M.caps == (1, 2)
    assert M.rank == 3


@pytest.mark.parametrize("text", ["", "1 2 3", "x: 1 2", "1: 0 2"])
def test_parse_partition_spec_rejects_malformed_input(text):
    with pytest.raises(InputError):
        parse_partition_spec(text)


def test_load_partition_file(tmp_path):
    path = tmp_path / "blocks.txt"
    path.write_text("1: 1 2\n1: 3 4\n", encoding="utf-8")
    M = load_partition_file(str(path), ground_size=4)
    assert M.rank == 2
    assert feasible_extensions(M, {0}) == {2, 3}


@pytest.mark.parametrize("seed", range(6))
def test_closure_is_monotone_on_independent_sets(seed):
    rng = np.random.default_rng(seed)
    n = 3 + seed % 4
    M = ExplicitMatroid.from_oracle(random_binary_matroid(n, 1 + seed % 3, rng))
    closures = {frozenset(x): closure_of(M, x) for x in M.independent_sets}
    for x, cx in closures.items():
        assert x <= cx
        for y, cy in closures.items():
            if x <= y:
                assert cx <= cy, (sorted(x), sorted(y))
