from collections.abc import Iterable, Sequence
from itertools import combinations

from errors import InputError

Solution = frozenset[int]


def delta(a: int, b: int) -> int:
    """Change in ss when an element with representation count ``b`` is added to one
    solution of a multiset of size ``a``."""
    return a - 2 * b - 1


class SolutionMultiset:
    """
    An indexed list of r solutions over a ground set of ``ground_size`` elements,
    together with the representation count n_v of every element.

    Solutions are identified by their index so that duplicates stay distinguishable;
    the greedy algorithms grow one particular copy at a time.
    """

    def __init__(self, ground_size: int, solutions: Iterable[Iterable[int]]):
        if ground_size < 0:
            raise InputError(f"ground size must be nonnegative, got {ground_size}")
        self.ground_size = ground_size
        self._solutions: list[set[int]] = []
        self._counts = [0] * ground_size
        for members in solutions:
            members = set(members)
            for v in members:
                self._check_element(v)
                self._counts[v] += 1
            self._solutions.append(members)

    @classmethod
    def copies(cls, ground_size: int, members: Iterable[int], r: int) -> "SolutionMultiset":
        members = frozenset(members)
        return cls(ground_size, [members] * r)

    def _check_element(self, v: int) -> None:
        if not 0 <= v < self.ground_size:
            raise InputError(f"element {v} outside ground set [0, {self.ground_size})")

    @property
    def r(self) -> int:
        return len(self._solutions)

    @property
    def solutions(self) -> list[Solution]:
        return [frozenset(x) for x in self._solutions]

    @property
    def counts(self) -> tuple[int, ...]:
        return tuple(self._counts)

    def solution(self, index: int) -> Solution:
        return frozenset(self._solutions[index])

    def size_of(self, index: int) -> int:
        return len(self._solutions[index])

    def count(self, v: int) -> int:
        return self._counts[v]

    def insert(self, index: int, v: int) -> int:
        """Adds ``v`` to solution ``index`` and returns the resulting change in ss."""
        self._check_element(v)
        target = self._solutions[index]
        if v in target:
            raise InputError(f"element {v} already in solution {index}")
        change = delta(self.r, self._counts[v])
        target.add(v)
        self._counts[v] += 1
        return change

    def restrict(self, block: Iterable[int]) -> "SolutionMultiset":
        """The multiset {x ∩ block : x ∈ P}, keeping element ids and ground size."""
        block = frozenset(block)
        return SolutionMultiset(self.ground_size, [x & block for x in self._solutions])

    def validate(self) -> bool:
        recount = [0] * self.ground_size
        for x in self._solutions:
            for v in x:
                recount[v] += 1
        return recount == self._counts and all(0 <= c <= self.r for c in self._counts)

    def ss(self) -> int:
        return pairwise_distance_sum(self)

    def copy(self) -> "SolutionMultiset":
        return SolutionMultiset(self.ground_size, self._solutions)

    def sorted_key(self) -> tuple[tuple[int, ...], ...]:
        return tuple(sorted(tuple(sorted(x)) for x in self._solutions))

    def __eq__(self, other) -> bool:
        if not isinstance(other, SolutionMultiset):
            return NotImplemented
        return self.ground_size == other.ground_size and self._solutions == other._solutions

    def __len__(self) -> int:
        return self.r

    def __iter__(self):
        return iter(self.solutions)

    def __repr__(self) -> str:
        body = ", ".join("{" + ",".join(map(str, sorted(x))) + "}" for x in self._solutions)
        return f"SolutionMultiset(n={self.ground_size}, [{body}])"

    def to_lists(self) -> list[list[int]]:
        return [sorted(x) for x in self._solutions]


def pairwise_distance_sum(P: SolutionMultiset) -> int:
    r = P.r
    return sum(n_v * (r - n_v) for n_v in P.counts)


def explicit_distance_sum(solutions: Sequence[Iterable[int]]) -> int:
    """Sum of Hamming distances over unordered pairs, by direct comparison."""
    sets = [frozenset(x) for x in solutions]
    return sum(len(x ^ y) for x, y in combinations(sets, 2))
