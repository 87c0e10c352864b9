"""Exhaustive ground truth for small instances."""
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations, combinations_with_replacement
from numbers import Rational

import numpy as np

from config.settings import get_logger, load_settings
from diversity.multiset import SolutionMultiset
from errors import EnumerationLimitError, InputError
from matroids.oracles import ConstraintOracle, powerset, to_mask
from objectives.oracles import ValueOracle

logger = get_logger(__name__)


@dataclass(frozen=True)
class OracleLimits:
    max_ground: int = 12
    max_r: int = 3
    max_diverse_ground: int = 8

    @classmethod
    def from_settings(cls) -> "OracleLimits":
        settings = load_settings()
        return cls(settings.max_ground, settings.max_r, settings.max_diverse_ground)


DEFAULT_LIMITS = OracleLimits()


def as_threshold(alpha) -> Fraction:
    """Accepts ints, Fractions and strings like "1/2"; floats are refused."""
    if isinstance(alpha, str):
        try:
            alpha = Fraction(alpha.strip())
        except (ValueError, ZeroDivisionError):
            raise InputError(f"cannot parse threshold {alpha!r}")
    elif isinstance(alpha, bool) or not isinstance(alpha, Rational):
        raise InputError(f"threshold must be rational (int, Fraction or 'p/q'), got {type(alpha).__name__}")
    alpha = Fraction(alpha)
    if not 0 <= alpha <= 1:
        raise InputError(f"threshold must lie in [0, 1], got {alpha}")
    return alpha


def _check_ground(n: int, limit: int, what: str) -> None:
    if n > limit:
        raise EnumerationLimitError(f"{what} enumerates at most {limit} elements, got {n}")


def feasible_sets(C: ConstraintOracle, limits: OracleLimits = DEFAULT_LIMITS) -> list[frozenset[int]]:
    """All feasible sets, smallest first, lexicographic within a size."""
    _check_ground(C.ground_size, limits.max_ground, "feasible set enumeration")
    return [frozenset(x) for x in powerset(range(C.ground_size)) if C.is_independent(x)]


def exact_optimum(f: ValueOracle, C: ConstraintOracle, limits: OracleLimits = DEFAULT_LIMITS):
    best_value, witness = None, frozenset()
    for x in feasible_sets(C, limits):
        value = f.value(x)
        if best_value is None or value > best_value:
            best_value, witness = value, x
    return best_value, witness


def best_of_size(f: ValueOracle, k: int, limits: OracleLimits = DEFAULT_LIMITS):
    """max f(y) over all y with |y| <= k, ignoring any constraint."""
    _check_ground(f.ground_size, limits.max_ground, "size-bounded optimum")
    best_value, witness = f.value(()), frozenset()
    for size in range(1, min(k, f.ground_size) + 1):
        for y in combinations(range(f.ground_size), size):
            value = f.value(y)
            if value > best_value:
                best_value, witness = value, frozenset(y)
    return best_value, witness


def approximations(f: ValueOracle, C: ConstraintOracle, alpha, limits: OracleLimits = DEFAULT_LIMITS):
    alpha = as_threshold(alpha)
    family = feasible_sets(C, limits)
    values = [f.value(x) for x in family]
    opt = max(values)
    return [x for x, value in zip(family, values) if value >= alpha * opt], opt


def _hamming_matrix(sets: list[frozenset[int]], n: int) -> np.ndarray:
    bits = np.zeros((len(sets), n), dtype=np.int64)
    for i, x in enumerate(sets):
        bits[i, list(x)] = 1
    return bits @ (1 - bits).T + (1 - bits) @ bits.T


def exact_diverse_optimum(f: ValueOracle, C: ConstraintOracle, r: int, alpha, limits: OracleLimits = DEFAULT_LIMITS):
    """
    Largest ss over r-multisets of feasible alpha-approximations.

    Multisets are enumerated in canonical (sorted index) form. Returns the value and
    the lexicographically first optimal multiset.
    """
    n = C.ground_size
    _check_ground(n, limits.max_diverse_ground, "diverse optimum")
    if not 1 <= r <= limits.max_r:
        raise EnumerationLimitError(f"diverse optimum supports 1 <= r <= {limits.max_r}, got {r}")
    candidates, _ = approximations(f, C, alpha, limits)
    if r == 1:
        return 0, SolutionMultiset(n, [candidates[-1]])
    dist = _hamming_matrix(candidates, n)
    m = len(candidates)
    best, witness = -1, None
    if r == 2:
        upper = np.triu(dist)
        flat = int(np.argmax(upper))
        best, witness = int(upper.flat[flat]), divmod(flat, m)
    elif r == 3:
        allowed = np.triu(np.ones((m, m), dtype=bool))
        for i in range(m):
            row = dist[i]
            totals = row[:, None] + row[None, :] + dist
            totals = np.where(allowed, totals, -1)
            totals[:i, :] = -1
            flat = int(np.argmax(totals))
            value = int(totals.flat[flat])
            if value > best:
                best, witness = value, (i, *divmod(flat, m))
    else:
        for combo in combinations_with_replacement(range(m), r):
            value = sum(int(dist[a, b]) for a, b in combinations(combo, 2))
            if value > best:
                best, witness = value, combo
    P = SolutionMultiset(n, [candidates[i] for i in witness])
    logger.info(f"Exact diverse optimum: n={n}, r={r}, alpha={as_threshold(alpha)}, candidates={m}, ss={best}")
    return best, P


def disjoint_approx_count(f: ValueOracle, C: ConstraintOracle, alpha, limits: OracleLimits = DEFAULT_LIMITS) -> int:
    """Largest number of pairwise disjoint nonempty feasible alpha-approximations."""
    candidates, _ = approximations(f, C, alpha, limits)
    masks = sorted({to_mask(x) for x in candidates if x})
    # any packing can be shrunk to inclusion-minimal members
    minimal = [m for m in masks if not any(o != m and o & m == o for o in masks)]
    containing = {v: [m for m in minimal if m >> v & 1] for v in range(C.ground_size)}

    @lru_cache(maxsize=None)
    def pack(open_mask: int) -> int:
        if not open_mask:
            return 0
        low = open_mask & -open_mask
        v = low.bit_length() - 1
        best = pack(open_mask ^ low)
        for m in containing[v]:
            if m & open_mask == m:
                best = max(best, 1 + pack(open_mask & ~m))
        return best

    return pack((1 << C.ground_size) - 1)


def smallest_dependent_size(C: ConstraintOracle, limits: OracleLimits = DEFAULT_LIMITS):
    """Size of the smallest dependent set, or None when every subset is feasible."""
    _check_ground(C.ground_size, limits.max_ground, "dependent set search")
    for size in range(C.ground_size + 1):
        for x in combinations(range(C.ground_size), size):
            if not C.is_independent(x):
                return size
    return None


def max_feasible_size(C: ConstraintOracle, limits: OracleLimits = DEFAULT_LIMITS) -> int:
    return max(len(x) for x in feasible_sets(C, limits))
