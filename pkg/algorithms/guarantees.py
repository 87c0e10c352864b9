"""
Checkable forms of the approximation and diversity guarantees of both greedy algorithms.

Every verifier returns a ``Verdict``; exact arithmetic (ints and Fractions) is used
throughout so a verdict never depends on rounding.
"""
import math
from collections.abc import Sequence
from dataclasses import dataclass, field
from fractions import Fraction

from algorithms.trace import RunTrace
from diversity.bounds import g
from diversity.multiset import SolutionMultiset
from errors import InputError
from matroids.operations import closure_of, rank_of
from matroids.oracles import ConstraintOracle, IntersectionConstraint, UniformMatroid
from objectives.oracles import ValueOracle


@dataclass
class Verdict:
    holds: bool
    name: str
    details: dict = field(default_factory=dict)
    applicable: bool = True

    def __bool__(self) -> bool:
        return self.holds


def _min_value(trace: RunTrace):
    return min(trace.final_values())


def _check_limit(r: int, l: int) -> None:
    if not 1 <= l < r:
        raise InputError(f"guarantees need 1 <= l < r, got l={l}, r={r}")


def verify_uniform_exact_ss(P: SolutionMultiset, trace: RunTrace, n: int, K: int, b: int, r: int) -> Verdict:
    """Under a rank-K uniform matroid the common-element greedy ends at exactly g(n - b, K - b, r)."""
    if not 0 <= b < K <= n:
        raise InputError(f"exact diversity needs 0 <= b < K <= n, got b={b}, K={K}, n={n}")
    expected = g(n - b, K - b, r)
    ss = P.ss()
    return Verdict(ss == expected, "uniform_exact_ss", {"ss": ss, "expected": expected, "steps": len(trace.records)})


def matroid_common_lower_bound(M: ConstraintOracle, x_phase1, b: int, r: int) -> int:
    n = M.ground_size
    rank = rank_of(M, range(n))
    if not 0 <= b < rank:
        raise InputError(f"lower bound needs 0 <= b < rank={rank}, got b={b}")
    closure = closure_of(M, x_phase1)
    m = max(n - len(closure) - rank + b + 1, 0)
    return g(rank - b - 1, rank - b - 1, r) + g(m, 1, r)


def verify_matroid_common_ss(P: SolutionMultiset, M: ConstraintOracle, x_phase1, b: int, r: int) -> Verdict:
    bound = matroid_common_lower_bound(M, x_phase1, b, r)
    ss = P.ss()
    return Verdict(ss >= bound, "matroid_common_ss_lower_bound", {"ss": ss, "bound": bound})


def phase1_factor(b: int, rank: int, uniform: bool, k: int = None) -> Fraction:
    """
    Approximation factor of b classical greedy steps. ``k`` is one less than the size
    of the smallest dependent set; it only matters for non-uniform matroids.
    """
    if rank <= 0 or b == 0:
        return Fraction(0)
    decay = 1 - Fraction(1, rank)
    if uniform:
        return 1 - decay ** b
    steps = b if k is None else min(b, k)
    return max(1 - decay ** steps, Fraction(b, 2 * rank))


def verify_phase1_objective(x_phase1, f: ValueOracle, M: ConstraintOracle, b: int, rank: int, oracle_opt, k: int = None, uniform: bool = None) -> Verdict:
    if uniform is None:
        uniform = isinstance(M, UniformMatroid)
    factor = phase1_factor(b, rank, uniform, k)
    value = f.value(x_phase1)
    return Verdict(value >= factor * oracle_opt, "common_elements_objective", {"value": value, "factor": factor, "opt": oracle_opt})


def verify_uniform_replimit(P: SolutionMultiset, trace: RunTrace, n: int, K: int, r: int, l: int, k: int, oracle_best_k) -> Verdict:
    """
    Uniform-constraint guarantees of the representation-limit greedy: an objective
    factor against the best set of size at most k, and an ss floor.
    """
    _check_limit(r, l)
    if not 1 <= k or k * l > (r - 1) * K:
        raise InputError(f"k must lie in [1, (r-1)K/l], got k={k}")
    min_f = _min_value(trace)
    factor = min(Fraction(r - 1, l) + 1, k)
    objective_ok = factor * min_f >= oracle_best_k
    floor = uniform_replimit_ss_floor(n, K, r, l)
    ss = P.ss()
    return Verdict(
        objective_ok and ss >= floor,
        "uniform_replimit",
        {"min_f": min_f, "factor": factor, "best_k": oracle_best_k, "ss": ss, "ss_floor": floor},
    )


def uniform_replimit_ss_floor(n: int, K: int, r: int, l: int) -> int:
    h = min(r * (K - 1), l * (n - 1))
    c = h % l
    return l * (r - l) * (h // l) + c * (r - c)


def verify_matroid_replimit(P: SolutionMultiset, trace: RunTrace, M: ConstraintOracle, r: int, l: int, oracle_opt) -> Verdict:
    _check_limit(r, l)
    rank = rank_of(M, range(M.ground_size))
    min_f = _min_value(trace)
    factor = min(Fraction(r - 1, l) + 2, rank)
    floor = l * (r - l) * (rank - 1)
    ss = P.ss()
    return Verdict(
        factor * min_f >= oracle_opt and ss >= floor,
        "matroid_replimit",
        {"min_f": min_f, "factor": factor, "opt": oracle_opt, "ss": ss, "ss_floor": floor},
    )


def _constraint_kind(C: ConstraintOracle) -> str:
    inner = getattr(C, "inner", C)
    if isinstance(inner, IntersectionConstraint):
        return "intersection"
    if isinstance(inner, UniformMatroid):
        return "uniform"
    return "matroid"


def benchmark_factor(Y: Sequence, kind: str, r: int, l: int, K: int = None, k_members: int = None) -> Fraction:
    """Factor relating min f over the output to the total value of a benchmark family Y."""
    counts: dict[int, int] = {}
    for y in Y:
        for v in y:
            counts[v] = counts.get(v, 0) + 1
    m = max(counts.values(), default=0)
    if m == 0:
        raise InputError("benchmark family must contain a nonempty set")
    total_size = sum(len(y) for y in Y)
    if kind == "uniform":
        if not K:
            raise InputError("uniform benchmark factor needs the rank K")
        h = max(Fraction(l * total_size, K * m * (r - 1)), 1)
        factor = Fraction(m * (r - 1), l) * h + len(Y)
    elif kind == "matroid":
        factor = Fraction(m * (r - 1), l) + 2 * len(Y)
    elif kind == "intersection":
        factor = Fraction(m * (r - 1), l) + (k_members + 1) * len(Y)
    else:
        raise InputError(f"unknown constraint kind {kind!r}")
    return min(factor, Fraction(total_size))


def verify_benchmark_bound(P: SolutionMultiset, Y: Sequence, f: ValueOracle, C: ConstraintOracle, r: int, l: int, kind: str = None) -> Verdict:
    _check_limit(r, l)
    Y = [frozenset(y) for y in Y]
    if not Y:
        raise InputError("benchmark family is empty")
    for y in Y:
        if not C.is_independent(y):
            raise InputError(f"benchmark set {sorted(y)} is infeasible under {C.label}")
    kind = kind or _constraint_kind(C)
    inner = getattr(C, "inner", C)
    K = inner.K if isinstance(inner, UniformMatroid) else None
    k_members = len(inner.members) if isinstance(inner, IntersectionConstraint) else None
    factor = benchmark_factor(Y, kind, r, l, K, k_members)
    min_f = min(f.value(x) for x in P.solutions)
    total = sum(f.value(y) for y in Y)
    return Verdict(factor * min_f >= total, f"{kind}_benchmark", {"min_f": min_f, "factor": factor, "total": total})


def verify_disjoint_family_bound(P: SolutionMultiset, f: ValueOracle, C: ConstraintOracle, r: int, l: int, alpha: Fraction, disjoint: int, oracle_opt) -> Verdict:
    """
    With ``disjoint`` pairwise disjoint alpha-approximations available, the output
    keeps alpha/2 (uniform) or alpha/3 (matroid) of the optimum once l * disjoint >= r - 1,
    and alpha/(2 + 1/disjoint) for matroids at l = r - 1.
    """
    _check_limit(r, l)
    alpha = Fraction(alpha)
    min_f = min(f.value(x) for x in P.solutions)
    details = {"min_f": min_f, "opt": oracle_opt, "disjoint": disjoint}
    checks = []
    uniform = _constraint_kind(C) == "uniform"
    if disjoint >= 1 and l * disjoint >= r - 1:
        ratio = alpha / 2 if uniform else alpha / 3
        checks.append(("half" if uniform else "third", ratio))
    if not uniform and disjoint >= 1 and l == r - 1:
        checks.append(("tight_limit", alpha * disjoint / (2 * disjoint + 1)))
    if not checks:
        return Verdict(True, "disjoint_family", details, applicable=False)
    failed = [name for name, ratio in checks if min_f < ratio * oracle_opt]
    details["ratios"] = {name: ratio for name, ratio in checks}
    details["failed"] = failed
    return Verdict(not failed, "disjoint_family", details)


def verify_intersection_replimit(P: SolutionMultiset, f: ValueOracle, members: Sequence[ConstraintOracle], r: int, l: int, oracle_opt, max_size: int, Y: Sequence = None) -> Verdict:
    """
    Objective guarantee under an intersection of ``len(members)`` matroids;
    ``max_size`` is the largest feasible set size of the intersection.
    """
    _check_limit(r, l)
    k = len(members)
    min_f = min(f.value(x) for x in P.solutions)
    factor = min(Fraction(r - 1, l) + k + 1, max_size)
    holds = factor * min_f >= oracle_opt
    details = {"min_f": min_f, "factor": factor, "opt": oracle_opt}
    if Y is not None:
        benchmark = verify_benchmark_bound(P, Y, f, IntersectionConstraint(members), r, l, kind="intersection")
        details["benchmark"] = benchmark.details
        holds = holds and benchmark.holds
    return Verdict(holds, "intersection_replimit", details)


def running_ss_floor(t: int, r: int, l: int) -> int:
    c = t % l
    return (t // l) * l * (r - l) + c * (r - c)


def verify_running_diversity(trace: RunTrace, r: int, l: int) -> Verdict:
    """ss after the t-th insertion is at least floor(t/l) l (r-l) + c (r-c), c = t mod l."""
    _check_limit(r, l)
    for t, ss in enumerate(trace.ss_series(), 1):
        floor = running_ss_floor(t, r, l)
        if ss < floor:
            return Verdict(False, "running_ss", {"step": t, "ss": ss, "floor": floor})
    return Verdict(True, "running_ss", {"steps": len(trace.ss_series())})


def verify_ss_nondecreasing(trace: RunTrace) -> Verdict:
    series = trace.ss_series()
    for t in range(1, len(series)):
        if series[t] < series[t - 1]:
            return Verdict(False, "ss_nondecreasing", {"step": t + 1, "before": series[t - 1], "after": series[t]})
    return Verdict(True, "ss_nondecreasing", {"steps": len(series)})


def verify_balanced_growth(trace: RunTrace) -> Verdict:
    for t, sizes in enumerate(trace.size_history(), 1):
        if max(sizes) - min(sizes) > 1:
            return Verdict(False, "balanced_growth", {"step": t, "sizes": sizes})
    return Verdict(True, "balanced_growth")


def verify_gains_nonincreasing(trace: RunTrace) -> Verdict:
    """Per solution, marginal gains along the run never increase."""
    last: dict[int, object] = {}
    for t, rec in enumerate(trace.phase("diverse"), 1):
        previous = last.get(rec.solution)
        if previous is not None and rec.gain > previous:
            return Verdict(False, "diminishing_gains", {"step": t, "solution": rec.solution})
        last[rec.solution] = rec.gain
    return Verdict(True, "diminishing_gains")


def verify_disjoint_regime(P: SolutionMultiset, trace: RunTrace, f: ValueOracle, C: ConstraintOracle, r: int, l: int, alpha: Fraction, disjoint: int, oracle_opt) -> Verdict:
    """
    Strengthened per-solution objective bound when many disjoint alpha-approximations
    exist: alpha (1 - (1 - 1/|x|)^|x|) OPT for uniform constraints, alpha OPT / 2 otherwise.
    """
    _check_limit(r, l)
    alpha = Fraction(alpha)
    uniform = _constraint_kind(C) == "uniform"
    checked, failed = [], []
    for i, x in enumerate(P.solutions):
        size = len(x)
        if size <= 1:
            continue
        eta = size - 1 if uniform else trace.improvement_size(i)
        if disjoint <= math.floor(Fraction(eta * (r - 1), l)):
            continue
        if uniform:
            ratio = alpha * (1 - (1 - Fraction(1, size)) ** size)
        else:
            ratio = alpha / 2
        checked.append(i)
        if f.value(x) < ratio * oracle_opt:
            failed.append(i)
    return Verdict(not failed, "disjoint_regime", {"checked": checked, "failed": failed}, applicable=bool(checked))
