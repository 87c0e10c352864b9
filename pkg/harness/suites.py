"""
Seeded randomized suites that run both greedy algorithms against the exact oracle
and the closed-form bounds, counting every violated guarantee.
"""
import time
from dataclasses import dataclass, field
from fractions import Fraction

import networkx as nx
import numpy as np

from algorithms.common_greedy import CommonGreedyConfig, run_common_greedy
from algorithms.guarantees import (
    verify_intersection_replimit,
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
from algorithms.replimit_greedy import RepLimitConfig, run_replimit_greedy
from bruteforce.exact import (
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
    fixture_modular_decreasing,
    fixture_rank_tight_matroid,
)
from config.settings import get_logger
from diversity.bounds import (
    common_greedy_diversity_ratio,
    disjoint_diversity_upper_bound,
    g,
    g_ratio_check,
    min_closure_sharpened_bound,
)
from diversity.multiset import SolutionMultiset
from errors import InputError
from matroids.operations import closure_of, rank_of
from matroids.oracles import ExplicitMatroid, IntersectionConstraint, PartitionMatroid, UniformMatroid, random_binary_matroid
from objectives.certify import certify_monotone_submodular
from objectives.oracles import ModularObjective, VertexCoverageObjective

logger = get_logger(__name__)

HALF = Fraction(1, 2)


@dataclass
class SuiteReport:
    name: str
    checked: int = 0
    violations: list[dict] = field(default_factory=list)
    seconds: float = 0.0

    @property
    def passed(self) -> bool:
        return not self.violations

    def check(self, verdict, **context) -> None:
        self.checked += 1
        if not verdict:
            self.violations.append({"check": getattr(verdict, "name", "assertion"), **context, **getattr(verdict, "details", {})})

    def summary(self) -> dict:
        return {"name": self.name, "checked": self.checked, "violations": len(self.violations), "seconds": round(self.seconds, 3)}


def random_objective(rng: np.random.Generator, n: int):
    if rng.random() < 0.5:
        graph = nx.gnp_random_graph(n, float(rng.uniform(0.15, 0.5)), seed=int(rng.integers(1 << 31)))
        return VertexCoverageObjective.from_graph(graph)
    return ModularObjective(rng.integers(0, 10, size=n).tolist())


def random_partition(rng: np.random.Generator, n: int) -> PartitionMatroid:
    blocks = int(rng.integers(1, min(3, n) + 1))
    block_of = rng.integers(0, blocks, size=n).tolist()
    caps = rng.integers(1, 3, size=blocks).tolist()
    return PartitionMatroid(block_of, caps)


def random_matroid(rng: np.random.Generator, n: int, kind: str):
    if kind == "uniform":
        return UniformMatroid(n, int(rng.integers(1, min(5, n) + 1)))
    if kind == "partition":
        return random_partition(rng, n)
    return random_binary_matroid(n, int(rng.integers(2, 5)), rng)


def suite_uniform_exact(report: SuiteReport, rng: np.random.Generator, trials: int) -> None:
    """The common-element greedy under a uniform matroid ends at exactly g(n - b, K - b, r)."""
    for trial in range(trials):
        n = int(rng.integers(2, 13))
        K = int(rng.integers(1, min(5, n) + 1))
        r = int(rng.integers(2, 7))
        b = int(rng.integers(0, K))
        f = random_objective(rng, n)
        P, trace = run_common_greedy(f, UniformMatroid(n, K), CommonGreedyConfig(b=b, r=r))
        report.check(verify_uniform_exact_ss(P, trace, n, K, b, r), trial=trial, n=n, K=K, b=b, r=r)


def suite_diversity_bound(report: SuiteReport, rng: np.random.Generator, trials: int) -> None:
    """Brute-force optimal ss against g: equality for uniform matroids, upper bound otherwise."""
    for n in range(1, 7):
        for K in range(1, n + 1):
            for r in (2, 3):
                f = ModularObjective([1] * n)
                best, _ = exact_diverse_optimum(f, UniformMatroid(n, K), r, 0)
                report.check(best == g(n, K, r), n=n, K=K, r=r, best=best)
    for trial in range(trials):
        n = int(rng.integers(2, 7))
        M = ExplicitMatroid.from_oracle(random_binary_matroid(n, int(rng.integers(1, 4)), rng))
        r = int(rng.integers(2, 4))
        f = ModularObjective([1] * n)
        best, _ = exact_diverse_optimum(f, M, r, 0)
        rank = rank_of(M, range(n))
        report.check(best <= g(n, rank, r), trial=trial, n=n, rank=rank, r=r, best=best)
        closure_bound = min_closure_sharpened_bound(M, feasible_sets(M), r)
        report.check(best <= closure_bound, trial=trial, n=n, rank=rank, r=r, best=best, closure_bound=closure_bound)
    for trial in range(trials // 5):
        n = int(rng.integers(2, 7))
        K = int(rng.integers(1, n + 1))
        r = int(rng.integers(2, 4))
        f = random_objective(rng, n)
        C = UniformMatroid(n, K)
        if exact_optimum(f, C)[0] == 0:
            continue
        best, _ = exact_diverse_optimum(f, C, r, HALF)
        disjoint = disjoint_approx_count(f, C, HALF)
        bound = disjoint_diversity_upper_bound(n, K, r, disjoint)
        report.check(best <= bound, trial=trial, n=n, K=K, r=r, best=best, bound=bound)


def _benchmark_family(rng, f, C):
    family = [x for x in feasible_sets(C) if x and f.value(x) > 0]
    if not family:
        return []
    picks = rng.choice(len(family), size=min(3, len(family)), replace=False)
    return [family[int(i)] for i in sorted(picks)]


def greedy_within_diverse_optimum(f, C, P, opt, r: int) -> tuple:
    """
    Compares the ss of a greedy output with the exact diverse optimum over the
    alpha-approximations, alpha being the worst value of the output relative to OPT.
    """
    alpha = Fraction(min(f.value(x) for x in P.solutions), opt)
    best, _ = exact_diverse_optimum(f, C, r, alpha)
    return P.ss() <= best, {"alpha": alpha, "ss": P.ss(), "best": best}


def _check_diverse_optimum(report: SuiteReport, f, C, P, opt, r: int, /, **context) -> None:
    if opt <= 0 or C.ground_size > 6 or r > 3:
        return
    ok, details = greedy_within_diverse_optimum(f, C, P, opt, r)
    report.check(ok, **context, **details)


def suite_objective(report: SuiteReport, rng: np.random.Generator, trials: int) -> None:
    """
    Objective guarantees of both algorithms against the exact optimum, n <= 10; for
    n <= 6 and r <= 3 the output ss is also held against the exact diverse optimum.
    """
    kinds = ("uniform", "partition", "binary", "intersection")
    for trial in range(trials):
        kind = kinds[trial % len(kinds)]
        n = int(rng.integers(3, 11))
        f = random_objective(rng, n)
        r = int(rng.integers(2, 7))
        l = int(rng.integers(1, r))
        context = {"trial": trial, "kind": kind, "n": n, "r": r, "l": l}
        if kind == "intersection":
            members = [random_partition(rng, n), random_partition(rng, n)]
            C = IntersectionConstraint(members)
            opt, _ = exact_optimum(f, C)
            P, trace = run_replimit_greedy(f, C, RepLimitConfig(r=r, l=l))
            Y = _benchmark_family(rng, f, C) or None
            report.check(verify_intersection_replimit(P, f, members, r, l, opt, max_feasible_size(C), Y), **context)
            _check_diverse_optimum(report, f, C, P, opt, r, algo="replimit", **context)
            continue

        M = random_matroid(rng, n, kind)
        rank = rank_of(M, range(n))
        opt, _ = exact_optimum(f, M)

        b = int(rng.integers(0, rank))
        P1, trace1 = run_common_greedy(f, M, CommonGreedyConfig(b=b, r=r))
        dependent = smallest_dependent_size(M)
        k = None if dependent is None else dependent - 1
        report.check(verify_phase1_objective(trace1.seed, f, M, b, rank, opt, k), b=b, **context)
        report.check(verify_matroid_common_ss(P1, M, trace1.seed, b, r), b=b, **context)
        _check_diverse_optimum(report, f, M, P1, opt, r, algo="common", b=b, **context)

        P, trace = run_replimit_greedy(f, M, RepLimitConfig(r=r, l=l))
        if kind == "uniform":
            best_k, _ = best_of_size(f, M.K)
            report.check(verify_uniform_replimit(P, trace, n, M.K, r, l, M.K, best_k), **context)
        else:
            report.check(verify_matroid_replimit(P, trace, M, r, l, opt), **context)
        _check_diverse_optimum(report, f, M, P, opt, r, algo="replimit", **context)
        Y = _benchmark_family(rng, f, M)
        if Y:
            report.check(verify_benchmark_bound(P, Y, f, M, r, l), **context)
        if opt > 0:
            disjoint = disjoint_approx_count(f, M, HALF)
            report.check(verify_disjoint_family_bound(P, f, M, r, l, HALF, disjoint, opt), **context)
            report.check(verify_disjoint_regime(P, trace, f, M, r, l, HALF, disjoint, opt), **context)


def suite_running_diversity(report: SuiteReport, rng: np.random.Generator, trials: int) -> None:
    """Per-step ss floor and diminishing gains of the representation-limit greedy; monotone ss of the common-element greedy."""
    kinds = ("uniform", "partition", "binary")
    for trial in range(trials):
        n = int(rng.integers(3, 13))
        kind = kinds[trial % len(kinds)]
        M = random_matroid(rng, n, kind)
        f = random_objective(rng, n)
        r = int(rng.integers(2, 7))
        l = int(rng.integers(1, r))
        context = {"trial": trial, "kind": kind, "n": n, "r": r, "l": l}
        _, trace = run_replimit_greedy(f, M, RepLimitConfig(r=r, l=l))
        report.check(verify_running_diversity(trace, r, l), **context)
        report.check(verify_gains_nonincreasing(trace), **context)
        b = int(rng.integers(0, rank_of(M, range(n)) + 1))
        _, trace1 = run_common_greedy(f, M, CommonGreedyConfig(b=b, r=r))
        report.check(verify_ss_nondecreasing(trace1), b=b, **context)


def suite_fixtures(report: SuiteReport, rng: np.random.Generator, trials: int) -> None:
    """Constructed instances whose ss is known exactly."""
    for n in range(3, 9):
        f = fixture_modular_decreasing(n)
        for K in range(2, n):
            for r in range(2, 6):
                for l in range(1, r):
                    P, _ = run_replimit_greedy(f, UniformMatroid(n, K), RepLimitConfig(r=r, l=l))
                    h = min(r * (K - 1), l * (n - 1))
                    expected = l * (r - l) * (h // l) + (h % l) * (r - h % l)
                    report.check(P.ss() == expected, fixture="modular_decreasing", n=n, K=K, r=r, l=l, ss=P.ss())
        for s in range(1, n // 2 + 1):
            for r in range(1, 6):
                P = fixture_cyclic_uniform(n, s, r)
                report.check(P.ss() == g(n, s, r), fixture="cyclic", n=n, s=s, r=r, ss=P.ss())
        for s in range(1, n + 1):
            M = fixture_rank_tight_matroid(n, s)
            for r in range(2, 5):
                for l in range(1, r):
                    P, _ = run_replimit_greedy(f, M, RepLimitConfig(r=r, l=l))
                    report.check(P.ss() == l * (r - l) * (s - 1), fixture="rank_tight", n=n, s=s, r=r, l=l, ss=P.ss())
    for count in (2, 3, 4):
        f = fixture_disjoint_paths(count)
        n = f.ground_size
        C = UniformMatroid(n, 2)
        opt, _ = exact_optimum(f, C)
        disjoint = disjoint_approx_count(f, C, HALF)
        for r in range(2, 5):
            for l in range(1, r):
                P, trace = run_replimit_greedy(f, C, RepLimitConfig(r=r, l=l))
                report.check(verify_disjoint_regime(P, trace, f, C, r, l, HALF, disjoint, opt), fixture="disjoint_paths", count=count, r=r, l=l)


def suite_bound_properties(report: SuiteReport, rng: np.random.Generator, trials: int) -> None:
    """Properties of g, the ss decomposition, the closure limit and coverage certification."""
    for a in range(0, 31):
        for b in range(0, 31):
            for c in range(1, 13):
                value = g(a, b, c)
                ok = g(a + 1, b, c) >= value and g(a, b + 1, c) >= value and g(a, b, c + 1) >= value
                report.check(ok, prop="g_monotone", a=a, b=b, c=c)
    for a in range(1, 21):
        for b in range(1, a + 1):
            for c in range(1, 9):
                for k in range(0, b + 1):
                    report.check(g_ratio_check(a, b, c, k), prop="ratio", a=a, b=b, c=c, k=k)
                for common in range(0, b + 1):
                    ratio = common_greedy_diversity_ratio(a, b, common, c)
                    report.check(ratio >= 1 - Fraction(common, b), prop="common_ratio", n=a, K=b, b=common, r=c)
    for trial in range(trials):
        n = int(rng.integers(1, 11))
        r = int(rng.integers(1, 7))
        P = SolutionMultiset(n, [np.flatnonzero(rng.random(n) < 0.5).tolist() for _ in range(r)])
        labels = rng.integers(0, 3, size=n)
        parts = [np.flatnonzero(labels == i).tolist() for i in range(3)]
        report.check(P.ss() == sum(P.restrict(part).ss() for part in parts), prop="decomposition", trial=trial)
        sizes = rng.integers(0, 10, size=3).tolist()
        caps = [int(rng.integers(0, size + 1)) for size in sizes]
        report.check(g(sum(sizes), sum(caps), r) >= sum(g(a, b, r) for a, b in zip(sizes, caps)), prop="superadditive", sizes=sizes, caps=caps, r=r)
    for trial in range(max(trials // 10, 1)):
        n = int(rng.integers(4, 9))
        M = ExplicitMatroid.from_oracle(random_binary_matroid(n, int(rng.integers(2, 5)), rng))
        independent = M.independent_sets
        worst = 0
        for x in independent:
            closure = closure_of(M, x)
            worst = max(worst, max(len(y & closure) - len(x) for y in independent))
        report.check(worst <= 0, prop="closure_limit", trial=trial, n=n)
    for trial in range(20):
        n = int(rng.integers(2, 13))
        graph = nx.gnp_random_graph(n, float(rng.uniform(0.1, 0.6)), seed=int(rng.integers(1 << 31)))
        report.check(certify_monotone_submodular(VertexCoverageObjective.from_graph(graph)), prop="coverage_certified", trial=trial, n=n)


SUITES = {
    "uniform_exact": (suite_uniform_exact, 200),
    "diversity_bound": (suite_diversity_bound, 50),
    "objective": (suite_objective, 100),
    "running_diversity": (suite_running_diversity, 100),
    "fixtures": (suite_fixtures, 0),
    "bound_properties": (suite_bound_properties, 100),
}


def run_suite(name: str, trials: int = None, seed: int = 0) -> SuiteReport:
    if name not in SUITES:
        raise InputError(f"unknown suite {name!r}; available: {sorted(SUITES)}")
    runner, default_trials = SUITES[name]
    report = SuiteReport(name)
    started = time.perf_counter()
    runner(report, np.random.default_rng(seed), default_trials if trials is None else trials)
    report.seconds = time.perf_counter() - started
    if report.violations:
        logger.warning(f"Suite {name}: {len(report.violations)} violations out of {report.checked} checks")
    else:
        logger.info(f"Suite {name}: {report.checked} checks passed in {report.seconds:.2f}s")
    return report


def run_suites(names=None, trials: int = None, seed: int = 0) -> list[SuiteReport]:
    return [run_suite(name, trials, seed) for name in (names or list(SUITES))]
