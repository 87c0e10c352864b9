from hypothesis import given, settings
from hypothesis import strategies as st

from algorithms.common_greedy import CommonGreedyConfig, run_common_greedy
from algorithms.guarantees import verify_running_diversity, verify_ss_nondecreasing, verify_uniform_exact_ss
from algorithms.replimit_greedy import RepLimitConfig, run_replimit_greedy
from diversity.bounds import g, g_ratio_check
from diversity.multiset import SolutionMultiset, delta, explicit_distance_sum
from matroids.oracles import UniformMatroid
from objectives.oracles import ModularObjective


@st.composite
def multisets(draw, max_n=8, max_r=6):
    n = draw(st.integers(1, max_n))
    r = draw(st.integers(1, max_r))
    solutions = draw(st.lists(st.sets(st.integers(0, n - 1)), min_size=r, max_size=r))
    return n, solutions


@given(multisets())
def test_count_formula_matches_pairwise_hamming(data):
    n, solutions = data
    assert SolutionMultiset(n, solutions).ss() == explicit_distance_sum(solutions)


@given(multisets(), st.data())
def test_insert_changes_ss_by_delta(data, extra):
    n, solutions = data
    P = SolutionMultiset(n, solutions)
    index = extra.draw(st.integers(0, P.r - 1))
    missing = sorted(set(range(n)) - P.solution(index))
    if not missing:
        return
    v = extra.draw(st.sampled_from(missing))
    before, count = P.ss(), P.count(v)
    assert P.insert(index, v) == delta(P.r, count)
    assert P.ss() == before + delta(P.r, count)


@given(multisets(), st.lists(st.integers(0, 2), min_size=8, max_size=8))
def test_ss_decomposes_over_partitions(data, labels):
    n, solutions = data
    P = SolutionMultiset(n, solutions)
    parts = [{v for v in range(n) if labels[v] == i} for i in range(3)]
    assert P.ss() == sum(P.restrict(part).ss() for part in parts)


@given(multisets(max_n=7, max_r=5))
def test_g_bounds_every_multiset_of_small_sets(data):
    n, solutions = data
    s = max(len(x) for x in solutions)
    assert SolutionMultiset(n, solutions).ss() <= g(n, s, len(solutions))


@given(st.integers(0, 40), st.integers(0, 40), st.integers(1, 12))
def test_g_is_monotone(a, b, c):
    value = g(a, b, c)
    assert g(a + 1, b, c) >= value
    assert g(a, b + 1, c) >= value
    assert g(a, b, c + 1) >= value


@given(st.lists(st.tuples(st.integers(0, 10), st.integers(0, 10)), min_size=1, max_size=4), st.integers(1, 8))
def test_g_is_superadditive(blocks, c):
    blocks = [(a, min(b, a)) for a, b in blocks]
    total = g(sum(a for a, _ in blocks), sum(b for _, b in blocks), c)
    assert total >= sum(g(a, b, c) for a, b in blocks)


@given(st.data())
def test_ratio_check_holds(data):
    a = data.draw(st.integers(1, 20))
    b = data.draw(st.integers(1, a))
    c = data.draw(st.integers(1, 8))
    k = data.draw(st.integers(0, b))
    assert g_ratio_check(a, b, c, k)


@settings(max_examples=40, deadline=None)
@given(st.data())
def test_common_greedy_is_exact_under_uniform(data):
    n = data.draw(st.integers(2, 9))
    K = data.draw(st.integers(1, min(4, n)))
    b = data.draw(st.integers(0, K - 1))
    r = data.draw(st.integers(2, 5))
    f = ModularObjective(data.draw(st.lists(st.integers(0, 9), min_size=n, max_size=n)))
    P, trace = run_common_greedy(f, UniformMatroid(n, K), CommonGreedyConfig(b=b, r=r))
    assert verify_uniform_exact_ss(P, trace, n, K, b, r)
    assert verify_ss_nondecreasing(trace)


@settings(max_examples=40, deadline=None)
@given(st.data())
def test_replimit_running_diversity(data):
    n = data.draw(st.integers(2, 9))
    K = data.draw(st.integers(1, n))
    r = data.draw(st.integers(2, 5))
    l = data.draw(st.integers(1, r - 1))
    f = ModularObjective(data.draw(st.lists(st.integers(0, 9), min_size=n, max_size=n)))
    P, trace = run_replimit_greedy(f, UniformMatroid(n, K), RepLimitConfig(r=r, l=l))
    assert verify_running_diversity(trace, r, l)
    assert all(P.count(v) <= l for v in range(n) if v not in trace.seed)
