import heapq
from collections.abc import Iterable

from diversity.multiset import SolutionMultiset
from matroids.oracles import ConstraintOracle
from objectives.oracles import ObjectiveState, ValueOracle


class CandidatePool:
    """
    Feasible extensions of one solution with their marginal gains, kept in a lazy heap.

    Heap entries carry the representation count seen when they were pushed. Counts
    only grow, so a stale entry is either dropped once its element reaches ``cap`` or
    pushed back with the current count.
    """

    def __init__(
        self,
        state: ObjectiveState,
        feasible: frozenset[int],
        gains: dict,
        P: SolutionMultiset,
        cap: int,
        count_first: bool,
    ):
        self.state = state
        self.feasible = feasible
        self.gains = gains
        self._P = P
        self._cap = cap
        self._count_first = count_first
        self._heap = [self._entry(u, P.count(u)) for u, gain in gains.items() if gain >= 0 and P.count(u) < cap]
        heapq.heapify(self._heap)

    def _entry(self, u: int, n_u: int) -> tuple:
        if self._count_first:
            return (n_u, -self.gains[u], u)
        return (-self.gains[u], n_u, u)

    def _count_of(self, entry: tuple) -> int:
        return entry[0] if self._count_first else entry[1]

    def clone(self) -> "CandidatePool":
        twin = object.__new__(CandidatePool)
        twin.__dict__.update(self.__dict__)
        twin._heap = list(self._heap)
        return twin

    def top(self):
        """Best (count, gain, element) under this pool's ordering, or None when empty."""
        heap = self._heap
        while heap:
            entry = heap[0]
            u = entry[2]
            n_u = self._P.count(u)
            if n_u >= self._cap:
                heapq.heappop(heap)
            elif n_u != self._count_of(entry):
                heapq.heapreplace(heap, self._entry(u, n_u))
            else:
                return n_u, self.gains[u], u
        return None

    @classmethod
    def build(
        cls,
        f: ValueOracle,
        C: ConstraintOracle,
        state: ObjectiveState,
        candidates: Iterable[int],
        P: SolutionMultiset,
        cap: int,
        count_first: bool,
        keep_capped: bool,
    ) -> "CandidatePool":
        """
        Tests every candidate for feasibility against ``state.members``. Gains are only
        evaluated for elements still below ``cap``; with ``keep_capped`` false, capped
        elements are not even tested for feasibility.
        """
        feasible = []
        gains = {}
        for u in sorted(candidates):
            if u in state.members:
                continue
            uncapped = P.count(u) < cap
            if not uncapped and not keep_capped:
                continue
            if not C.is_independent(state.members | {u}):
                continue
            feasible.append(u)
            if uncapped:
                gains[u] = f.gain(state, u)
        return cls(state, frozenset(feasible), gains, P, cap, count_first)
