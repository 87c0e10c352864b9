import threading
from abc import ABC, abstractmethod
from collections.abc import Callable, Iterable, Sequence
from dataclasses import dataclass
from fractions import Fraction
from numbers import Integral, Rational

import networkx as nx

from errors import InputError

Value = int | Fraction


def exact_value(value) -> Value:
    """Rejects floats so that tie-breaking on objective values stays exact."""
    if isinstance(value, bool) or not isinstance(value, Rational):
        raise InputError(f"objective values must be integers or fractions, got {type(value).__name__}")
    if isinstance(value, Integral):
        return int(value)
    return Fraction(value)


@dataclass(frozen=True)
class ObjectiveState:
    """A partial solution with its value; ``covered`` carries oracle-specific bookkeeping."""

    members: frozenset[int]
    value: Value
    covered: int = 0


class ValueOracle(ABC):
    def __init__(self, ground_size: int):
        if ground_size < 0:
            raise InputError(f"ground size must be nonnegative, got {ground_size}")
        self.ground_size = ground_size

    def _check(self, x: frozenset[int]) -> None:
        for v in x:
            if not 0 <= v < self.ground_size:
                raise InputError(f"element {v} outside ground set [0, {self.ground_size})")

    def value(self, x: Iterable[int]) -> Value:
        x = frozenset(x)
        self._check(x)
        return self._evaluate(x)

    @abstractmethod
    def _evaluate(self, x: frozenset[int]) -> Value:
        ...

    def marginal_gain(self, x: Iterable[int], v: int) -> Value:
        x = frozenset(x)
        if v in x:
            raise InputError(f"element {v} is already in the set")
        self._check(x | {v})
        return self._evaluate(x | {v}) - self._evaluate(x)

    def start(self, members: Iterable[int] = ()) -> ObjectiveState:
        state = ObjectiveState(frozenset(), self._evaluate(frozenset()))
        for v in sorted(set(members)):
            state = self.extend(state, v)
        return state

    def gain(self, state: ObjectiveState, v: int) -> Value:
        return self._evaluate(state.members | {v}) - state.value

    def extend(self, state: ObjectiveState, v: int) -> ObjectiveState:
        if v in state.members:
            raise InputError(f"element {v} is already in the set")
        members = state.members | {v}
        return ObjectiveState(members, self._evaluate(members))


class VertexCoverageObjective(ValueOracle):
    """Number of vertices in x or adjacent to x; closed neighbourhoods stored as bitmasks."""

    def __init__(self, n: int, adjacency: Sequence[Iterable[int]]):
        super().__init__(n)
        if len(adjacency) != n:
            raise InputError(f"adjacency has {len(adjacency)} rows for {n} vertices")
        self.neighborhoods = []
        for v, neighbors in enumerate(adjacency):
            mask = 1 << v
            for u in neighbors:
                if not 0 <= u < n:
                    raise InputError(f"vertex {v} has neighbour {u} outside [0, {n})")
                mask |= 1 << u
            self.neighborhoods.append(mask)

    @classmethod
    def from_graph(cls, graph: nx.Graph) -> "VertexCoverageObjective":
        n = graph.number_of_nodes()
        if set(graph.nodes) != set(range(n)):
            graph = nx.convert_node_labels_to_integers(graph, ordering="sorted")
        adjacency = [[u for u in graph.neighbors(v) if u != v] for v in range(n)]
        return cls(n, adjacency)

    def _covered(self, x: frozenset[int]) -> int:
        mask = 0
        for v in x:
            mask |= self.neighborhoods[v]
        return mask

    def _evaluate(self, x):
        return self._covered(x).bit_count()

    def start(self, members: Iterable[int] = ()) -> ObjectiveState:
        members = frozenset(members)
        self._check(members)
        covered = self._covered(members)
        return ObjectiveState(members, covered.bit_count(), covered)

    def gain(self, state, v):
        return (self.neighborhoods[v] & ~state.covered).bit_count()

    def extend(self, state, v):
        if v in state.members:
            raise InputError(f"element {v} is already in the set")
        covered = state.covered | self.neighborhoods[v]
        return ObjectiveState(state.members | {v}, covered.bit_count(), covered)


class ModularObjective(ValueOracle):
    def __init__(self, weights: Sequence[Value]):
        super().__init__(len(weights))
        self.weights = tuple(exact_value(w) for w in weights)
        if any(w < 0 for w in self.weights):
            raise InputError("modular weights must be nonnegative")

    def _evaluate(self, x):
        return sum((self.weights[v] for v in x), 0)

    def gain(self, state, v):
        return self.weights[v]

    def extend(self, state, v):
        if v in state.members:
            raise InputError(f"element {v} is already in the set")
        return ObjectiveState(state.members | {v}, state.value + self.weights[v])


class SetFunctionObjective(ValueOracle):
    """Arbitrary set function given as a callable; results must be exact numbers."""

    def __init__(self, ground_size: int, func: Callable[[frozenset[int]], Value]):
        super().__init__(ground_size)
        self.func = func

    def _evaluate(self, x):
        return exact_value(self.func(x))


class CountedObjective(ValueOracle):
    """Forwards to ``inner`` and counts every evaluation, including incremental gains."""

    def __init__(self, inner: ValueOracle):
        super().__init__(inner.ground_size)
        self.inner = inner
        self._lock = threading.Lock()
        self.calls = 0

    def _tick(self) -> None:
        with self._lock:
            self.calls += 1

    def _evaluate(self, x):
        self._tick()
        return self.inner._evaluate(x)

    def start(self, members: Iterable[int] = ()) -> ObjectiveState:
        self._tick()
        return self.inner.start(members)

    def gain(self, state, v):
        self._tick()
        return self.inner.gain(state, v)

    def extend(self, state, v):
        return self.inner.extend(state, v)
