"""
Greedy with common elements.

The first phase runs the classical greedy for ``b`` steps; the resulting set is
copied into all r solutions. The second phase then grows the copies, always
inserting the least represented element, preferring solutions with the fewest
remaining choices, then lower value, then larger gain.
"""
from dataclasses import dataclass

from algorithms.pool import CandidatePool
from algorithms.trace import COMMON, DIVERSE, RunTrace, TraceRecord
from config.settings import get_logger
from diversity.multiset import SolutionMultiset
from errors import InputError
from matroids.operations import feasible_extensions, rank_of
from matroids.oracles import ConstraintOracle, CountedConstraint
from objectives.oracles import CountedObjective, ValueOracle

logger = get_logger(__name__)


@dataclass(frozen=True)
class CommonGreedyConfig:
    b: int
    r: int

    def __post_init__(self):
        if self.r < 2:
            raise InputError(f"r must be at least 2, got {self.r}")
        if self.b < 0:
            raise InputError(f"b must be nonnegative, got {self.b}")


def greedy_prefix(f: ValueOracle, C: ConstraintOracle, steps: int, trace: RunTrace = None):
    """Classical greedy for at most ``steps`` insertions; ties go to the smallest id."""
    state = f.start()
    while len(state.members) < steps:
        extensions = feasible_extensions(C, state.members)
        if not extensions:
            break
        best, best_gain = None, None
        for u in sorted(extensions):
            gain = f.gain(state, u)
            if best is None or gain > best_gain:
                best, best_gain = u, gain
        state = f.extend(state, best)
        if trace is not None:
            trace.records.append(TraceRecord(COMMON, None, best, 0, best_gain, 0, (state.value,)))
    return state


def run_common_greedy(f: ValueOracle, M: ConstraintOracle, cfg: CommonGreedyConfig):
    """
    Runs both phases and returns the solutions with their trace.

    Accepts b up to and including the constraint rank. At b = rank the second phase
    has nothing left to add and the output is r copies of the classical greedy
    solution; parameter sweeps include that endpoint. ``verify_uniform_exact_ss``
    still rejects b = K, since the exact uniform formula needs b < K.
    """
    if not M.is_matroid:
        logger.warning(f"Common-element greedy called on non-matroid constraint {M.label}; guarantees do not apply.")
    f_counted = CountedObjective(f)
    M_counted = CountedConstraint(M)
    n = M.ground_size
    rank = rank_of(M_counted, range(n)) if M.is_matroid else max_feasible_size(M_counted)
    if cfg.b > rank:
        raise InputError(f"b={cfg.b} exceeds the constraint rank {rank}")
    logger.info(f"Starting common-element greedy: n={n}, constraint={M.label}, b={cfg.b}, r={cfg.r}")

    trace = RunTrace("common", cfg.r)
    common = greedy_prefix(f_counted, M_counted, cfg.b, trace)
    trace.seed = common.members
    trace.seed_value = common.value

    r = cfg.r
    cap = (r + 1) // 2
    P = SolutionMultiset.copies(n, common.members, r)
    first = CandidatePool.build(
        f_counted, M_counted, common, range(n), P, cap, count_first=True, keep_capped=True
    )
    pools = [first] + [first.clone() for _ in range(r - 1)]
    ss = P.ss()

    while True:
        choice = None
        for i, pool in enumerate(pools):
            best = pool.top()
            if best is None:
                continue
            n_u, gain, u = best
            key = (n_u, len(pool.feasible), pool.state.value, -gain, i, u)
            if choice is None or key < choice:
                choice = key
        if choice is None:
            break
        n_u, _, _, neg_gain, i, u = choice
        ss += P.insert(i, u)
        old = pools[i]
        state = f_counted.extend(old.state, u)
        pools[i] = CandidatePool.build(
            f_counted, M_counted, state, old.feasible - {u}, P, cap, count_first=True, keep_capped=True
        )
        trace.records.append(
            TraceRecord(DIVERSE, i, u, n_u, -neg_gain, ss, tuple(pool.state.value for pool in pools))
        )

    trace.f_calls = f_counted.calls
    trace.indep_calls = M_counted.calls
    logger.info(
        f"Common-element greedy finished: ss={ss}, steps={len(trace.records)}, "
        f"f_calls={trace.f_calls}, indep_calls={trace.indep_calls}"
    )
    return P, trace


def max_feasible_size(C: ConstraintOracle) -> int:
    """Size of a greedily grown maximal feasible set; exact for matroids only."""
    kept = set()
    for v in range(C.ground_size):
        if C.is_independent(kept | {v}):
            kept.add(v)
    return len(kept)
