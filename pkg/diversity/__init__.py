from diversity.multiset import Solution, SolutionMultiset, delta, explicit_distance_sum, pairwise_distance_sum
from diversity.bounds import (
    GBoundInputs,
    closure_sharpened_bound,
    common_greedy_diversity_ratio,
    disjoint_diversity_upper_bound,
    g,
    g_bound,
    g_ratio_check,
    matroid_diversity_upper_bound,
    min_closure_sharpened_bound,
    partition_diversity_upper_bound,
)
