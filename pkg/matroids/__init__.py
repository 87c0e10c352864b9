from matroids.oracles import (
    CallCounter,
    ConstraintOracle,
    CountedConstraint,
    ExplicitMatroid,
    IntersectionConstraint,
    LinearMatroid,
    PartitionMatroid,
    PredicateConstraint,
    UniformMatroid,
    random_binary_matroid,
)
from matroids.operations import (
    AxiomReport,
    axioms_check,
    closure_of,
    feasible_extensions,
    has_loops,
    load_partition_file,
    parse_partition_spec,
    rank_of,
)
