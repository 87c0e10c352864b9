from algorithms.common_greedy import CommonGreedyConfig, greedy_prefix, max_feasible_size, run_common_greedy
from algorithms.guarantees import (
    Verdict,
    benchmark_factor,
    matroid_common_lower_bound,
    phase1_factor,
    running_ss_floor,
    uniform_replimit_ss_floor,
    verify_intersection_replimit,
    verify_balanced_growth,
    verify_disjoint_family_bound,
    verify_gains_nonincreasing,
    verify_phase1_objective,
    verify_running_diversity,
    verify_ss_nondecreasing,
    verify_uniform_exact_ss,
    verify_matroid_common_ss,
    verify_disjoint_regime,
    verify_uniform_replimit,
    verify_matroid_replimit,
    verify_benchmark_bound,
)
from algorithms.pool import CandidatePool
from algorithms.replimit_greedy import RepLimitConfig, best_singleton, run_replimit_greedy, suggest_rep_limit
from algorithms.trace import COMMON, DIVERSE, RunTrace, TraceRecord
