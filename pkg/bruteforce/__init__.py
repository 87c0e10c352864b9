from bruteforce.exact import (
    DEFAULT_LIMITS,
    OracleLimits,
    approximations,
    as_threshold,
    best_of_size,
    disjoint_approx_count,
    exact_diverse_optimum,
    exact_optimum,
    feasible_sets,
    max_feasible_size,
    smallest_dependent_size,
)
from bruteforce.fixtures import (
    fixture_cyclic_uniform,
    fixture_disjoint_paths,
    fixture_disjoint_triangles,
    fixture_modular_decreasing,
    fixture_rank_tight_matroid,
)
