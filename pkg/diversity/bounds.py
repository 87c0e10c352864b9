"""
Closed-form diversity yardsticks.

``g(a, b, c)`` is the largest ss attainable by c subsets of size at most b drawn from
an a-element set. Every other bound in this module is assembled from it.
"""
import math
from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from errors import InputError
from matroids.operations import closure_of, rank_of


@dataclass(frozen=True)
class GBoundInputs:
    a: int
    b: int
    c: int

    def __post_init__(self):
        if self.a < 0 or self.b < 0 or self.c < 0:
            raise InputError(f"g arguments must be nonnegative, got ({self.a}, {self.b}, {self.c})")


@lru_cache(maxsize=65536)
def g(a: int, b: int, c: int) -> int:
    if a <= 0 or b <= 0 or c <= 1:
        return 0
    # h = min(b, a/2) may be half-integral; take its ceiling and floor directly
    if 2 * b <= a:
        ceil_h = floor_h = b
    else:
        ceil_h, floor_h = (a + 1) // 2, a // 2
    total = ((c + 1) // 2) * ceil_h + (c // 2) * floor_h
    q, m = divmod(total, a)
    return a * q * (c - q) + m * (c - 2 * q - 1)


def g_bound(inputs: GBoundInputs) -> int:
    return g(inputs.a, inputs.b, inputs.c)


def matroid_diversity_upper_bound(M, r: int) -> int:
    """No r-multiset of independent sets of ``M`` has larger ss than this."""
    rank = rank_of(M, range(M.ground_size))
    return g(M.ground_size, rank, r)


def partition_diversity_upper_bound(block_sizes: Sequence[int], caps: Sequence[int], r: int) -> int:
    if len(block_sizes) != len(caps):
        raise InputError(f"{len(block_sizes)} block sizes but {len(caps)} caps")
    return sum(g(size, cap, r) for size, cap in zip(block_sizes, caps))


def closure_sharpened_bound(M, x: Iterable[int], r: int) -> int:
    """
    Evaluates the closure-sharpened diversity bound for one independent set ``x``.

    The minimum of this value over several candidate sets is still an upper bound on
    the ss of any feasible multiset; a single evaluation need not be.
    """
    x = frozenset(x)
    n = M.ground_size
    if n == 0:
        return 0
    closure = closure_of(M, x)
    rank = rank_of(M, range(n))
    n_x = min(Fraction(rank * len(closure), n), Fraction(len(x)))
    outside = g(n - len(closure), rank - math.floor(n_x), r)
    inside = g(len(closure), math.ceil(n_x), r)
    return outside + inside


def min_closure_sharpened_bound(M, candidates: Iterable[Iterable[int]], r: int) -> int:
    best = matroid_diversity_upper_bound(M, r)
    for x in candidates:
        best = min(best, closure_sharpened_bound(M, x, r))
    return best


def g_ratio_check(a: int, b: int, c: int, k: int) -> bool:
    """Whether b * g(ceil(k*a/b), k, c) >= k * g(a, b, c); evaluated in integers."""
    if a < 1 or b < 1 or c < 1 or k < 0:
        raise InputError(f"ratio check needs a,b,c >= 1 and k >= 0, got ({a}, {b}, {c}, {k})")
    scaled = -(-k * a // b)
    return b * g(scaled, k, c) >= k * g(a, b, c)


def common_greedy_diversity_ratio(n: int, K: int, b: int, r: int) -> Fraction:
    """Exact ss of the common-element greedy under a rank-K uniform matroid, relative to g(n, K, r)."""
    if not 0 <= b <= K <= n:
        raise InputError(f"need 0 <= b <= K <= n, got b={b}, K={K}, n={n}")
    best = g(n, K, r)
    if best == 0:
        return Fraction(1)
    return Fraction(g(n - b, K - b, r), best)


def disjoint_diversity_upper_bound(n: int, s: int, r: int, k: int) -> int:
    """
    Upper bound on the optimal ss given that at most ``k`` pairwise disjoint
    approximations exist and no feasible set exceeds size ``s``.
    """
    if min(n, s, r, k) < 0:
        raise InputError("bound arguments must be nonnegative")
    if s == 0:
        return 0
    return g(min(r * (s - 1) + k, n), s, r)
