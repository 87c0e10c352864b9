"""
Greedy with representation limits.

Every solution starts from the best feasible singleton v*. Solutions then grow in
lockstep (smallest first), each step taking the largest marginal gain among elements
contained in fewer than ``l`` solutions.
"""
from dataclasses import dataclass

from algorithms.pool import CandidatePool
from algorithms.trace import DIVERSE, RunTrace, TraceRecord
from config.settings import get_logger
from diversity.multiset import SolutionMultiset
from errors import InputError
from matroids.oracles import ConstraintOracle, CountedConstraint
from objectives.oracles import CountedObjective, ValueOracle

logger = get_logger(__name__)


@dataclass(frozen=True)
class RepLimitConfig:
    r: int
    l: int

    def __post_init__(self):
        if self.r < 2:
            raise InputError(f"r must be at least 2, got {self.r}")
        if not 1 <= self.l <= self.r:
            raise InputError(f"l must lie in [1, r={self.r}], got {self.l}")


def best_singleton(f: ValueOracle, C: ConstraintOracle) -> int:
    best, best_value = None, None
    for v in range(C.ground_size):
        if not C.is_independent((v,)):
            continue
        value = f.value((v,))
        if best is None or value > best_value:
            best, best_value = v, value
    if best is None:
        raise InputError(f"no feasible singleton under {C.label}; constraint must be loop-free")
    return best


def run_replimit_greedy(f: ValueOracle, C: ConstraintOracle, cfg: RepLimitConfig):
    f_counted = CountedObjective(f)
    C_counted = CountedConstraint(C)
    n = C.ground_size
    r, l = cfg.r, cfg.l
    logger.info(f"Starting representation-limit greedy: n={n}, constraint={C.label}, r={r}, l={l}")

    seed = best_singleton(f_counted, C_counted)
    trace = RunTrace("replimit", r, frozenset((seed,)))
    P = SolutionMultiset.copies(n, (seed,), r)
    state = f_counted.start((seed,))
    trace.seed_value = state.value
    first = CandidatePool.build(f_counted, C_counted, state, range(n), P, l, count_first=False, keep_capped=False)
    pools = [first] + [first.clone() for _ in range(r - 1)]
    ss = 0

    while True:
        choice = None
        for i, pool in enumerate(pools):
            best = pool.top()
            if best is None:
                continue
            n_u, gain, u = best
            key = (len(pool.state.members), -gain, pool.state.value, n_u, i, u)
            if choice is None or key < choice:
                choice = key
        if choice is None:
            break
        _, neg_gain, _, n_u, i, u = choice
        ss += P.insert(i, u)
        old = pools[i]
        state = f_counted.extend(old.state, u)
        pools[i] = CandidatePool.build(
            f_counted, C_counted, state, old.feasible - {u}, P, l, count_first=False, keep_capped=False
        )
        trace.records.append(
            TraceRecord(DIVERSE, i, u, n_u, -neg_gain, ss, tuple(pool.state.value for pool in pools))
        )

    trace.f_calls = f_counted.calls
    trace.indep_calls = C_counted.calls
    logger.info(
        f"Representation-limit greedy finished: v*={seed}, ss={ss}, steps={len(trace.records)}, "
        f"f_calls={trace.f_calls}, indep_calls={trace.indep_calls}"
    )
    return P, trace


def suggest_rep_limit(n: int, rank: int, r: int, pathological: bool = False) -> int:
    """
    Diversity-oriented representation limit: max(floor(r (rank - 1) / (n - 1)), 1) for
    uniform constraints, floor(r / 2) when the matroid may be arbitrarily unfavourable.
    """
    if pathological:
        return max(r // 2, 1)
    if n <= 1:
        return 1
    return max(r * (rank - 1) // (n - 1), 1)
