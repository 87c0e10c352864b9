import threading
from abc import ABC, abstractmethod
from collections.abc import Callable, Iterable, Sequence
from itertools import chain, combinations

import numpy as np

from errors import EnumerationLimitError, InputError

EXPLICIT_MAX_GROUND = 20


def powerset(iterable: Iterable):
    """powerset([1,2,3]) → () (1,) (2,) (3,) (1,2) (1,3) (2,3) (1,2,3)"""
    s = list(iterable)
    return chain.from_iterable(combinations(s, r) for r in range(len(s) + 1))


def to_mask(members: Iterable[int]) -> int:
    mask = 0
    for v in members:
        mask |= 1 << v
    return mask


def from_mask(mask: int) -> frozenset[int]:
    members = []
    v = 0
    while mask:
        if mask & 1:
            members.append(v)
        mask >>= 1
        v += 1
    return frozenset(members)


class ConstraintOracle(ABC):
    """
    Independence oracle over the ground set {0, ..., ground_size - 1}.

    Subclasses answer ``_accepts`` for sets already checked to lie inside the ground
    set. ``is_matroid`` declares whether rank and closure may be computed greedily.
    """

    is_matroid = True

    def __init__(self, ground_size: int):
        if ground_size < 0:
            raise InputError(f"ground size must be nonnegative, got {ground_size}")
        self.ground_size = ground_size

    def is_independent(self, x: Iterable[int]) -> bool:
        x = frozenset(x)
        for v in x:
            if not 0 <= v < self.ground_size:
                raise InputError(f"element {v} outside ground set [0, {self.ground_size})")
        return self._accepts(x)

    @abstractmethod
    def _accepts(self, x: frozenset[int]) -> bool:
        ...

    @property
    def label(self) -> str:
        return type(self).__name__


class UniformMatroid(ConstraintOracle):
    def __init__(self, n: int, K: int):
        super().__init__(n)
        if K < 0:
            raise InputError(f"uniform rank must be nonnegative, got {K}")
        self.K = K

    def _accepts(self, x):
        return len(x) <= self.K

    @property
    def label(self) -> str:
        return f"U{self.K}"


class PartitionMatroid(ConstraintOracle):
    """|x ∩ B_i| <= caps[i] for every block B_i; ``block_of[v]`` is the block of v."""

    def __init__(self, block_of: Sequence[int], caps: Sequence[int]):
        super().__init__(len(block_of))
        self.caps = tuple(int(c) for c in caps)
        if any(c < 0 for c in self.caps):
            raise InputError(f"partition caps must be nonnegative, got {self.caps}")
        for v, block in enumerate(block_of):
            if not 0 <= block < len(self.caps):
                raise InputError(f"element {v} assigned to unknown block {block}")
        self.block_of = tuple(block_of)

    @classmethod
    def from_blocks(cls, blocks: Sequence[Iterable[int]], caps: Sequence[int], ground_size: int = None) -> "PartitionMatroid":
        if len(blocks) != len(caps):
            raise InputError(f"{len(blocks)} blocks but {len(caps)} caps")
        blocks = [sorted(set(b)) for b in blocks]
        n = ground_size if ground_size is not None else sum(len(b) for b in blocks)
        block_of = [-1] * n
        for i, block in enumerate(blocks):
            for v in block:
                if not 0 <= v < n:
                    raise InputError(f"element {v} outside ground set [0, {n})")
                if block_of[v] != -1:
                    raise InputError(f"element {v} appears in blocks {block_of[v]} and {i}")
                block_of[v] = i
        missing = [v for v, b in enumerate(block_of) if b == -1]
        if missing:
            raise InputError(f"blocks do not cover elements {missing[:10]}")
        return cls(block_of, caps)

    @property
    def blocks(self) -> list[list[int]]:
        out = [[] for _ in self.caps]
        for v, block in enumerate(self.block_of):
            out[block].append(v)
        return out

    @property
    def block_sizes(self) -> list[int]:
        return [len(b) for b in self.blocks]

    @property
    def rank(self) -> int:
        return sum(min(size, cap) for size, cap in zip(self.block_sizes, self.caps))

    def _accepts(self, x):
        used = [0] * len(self.caps)
        for v in x:
            block = self.block_of[v]
            used[block] += 1
            if used[block] > self.caps[block]:
                return False
        return True

    @property
    def label(self) -> str:
        return f"P{self.rank}"


class LinearMatroid(ConstraintOracle):
    """Column matroid of vectors over GF(2), each vector packed into an int."""

    def __init__(self, vectors: Sequence[int]):
        super().__init__(len(vectors))
        self.vectors = tuple(int(w) for w in vectors)

    def _accepts(self, x):
        basis = {}
        for v in x:
            row = self.vectors[v]
            while row:
                lead = row.bit_length() - 1
                if lead not in basis:
                    basis[lead] = row
                    break
                row ^= basis[lead]
            else:
                return False
        return True


class ExplicitMatroid(ConstraintOracle):
    """
    A set system given by its full list of independent sets.

    Nothing is assumed about the family; ``matroids.operations.axioms_check`` reports
    whether it really is a matroid.
    """

    def __init__(self, n: int, independent_sets: Iterable[Iterable[int]]):
        if n > EXPLICIT_MAX_GROUND:
            raise EnumerationLimitError(f"explicit set systems are limited to {EXPLICIT_MAX_GROUND} elements, got {n}")
        super().__init__(n)
        masks = set()
        for members in independent_sets:
            members = list(members)
            for v in members:
                if not 0 <= v < n:
                    raise InputError(f"element {v} outside ground set [0, {n})")
            masks.add(to_mask(members))
        self.masks = frozenset(masks)

    @classmethod
    def from_oracle(cls, oracle: ConstraintOracle) -> "ExplicitMatroid":
        n = oracle.ground_size
        if n > EXPLICIT_MAX_GROUND:
            raise EnumerationLimitError(f"cannot materialize {n} > {EXPLICIT_MAX_GROUND} elements")
        family = [x for x in powerset(range(n)) if oracle.is_independent(x)]
        return cls(n, family)

    @property
    def independent_sets(self) -> list[frozenset[int]]:
        return sorted((from_mask(m) for m in self.masks), key=lambda s: (len(s), sorted(s)))

    def _accepts(self, x):
        return to_mask(x) in self.masks


class IntersectionConstraint(ConstraintOracle):
    """Accepts a set exactly when every member accepts it; never treated as a matroid."""

    is_matroid = False

    def __init__(self, members: Sequence[ConstraintOracle]):
        if not members:
            raise InputError("intersection needs at least one member constraint")
        sizes = {m.ground_size for m in members}
        if len(sizes) != 1:
            raise InputError(f"member constraints disagree on ground size: {sorted(sizes)}")
        super().__init__(sizes.pop())
        self.members = tuple(members)

    def _accepts(self, x):
        return all(m._accepts(x) for m in self.members)

    @property
    def label(self) -> str:
        return "I(" + "&".join(m.label for m in self.members) + ")"


class CallCounter:
    def __init__(self):
        self._lock = threading.Lock()
        self.calls = 0

    def tick(self) -> None:
        with self._lock:
            self.calls += 1

    def reset(self) -> None:
        with self._lock:
            self.calls = 0


class CountedConstraint(ConstraintOracle):
    """Forwards to ``inner`` while counting independence queries."""

    def __init__(self, inner: ConstraintOracle, counter: CallCounter = None):
        super().__init__(inner.ground_size)
        self.inner = inner
        self.counter = counter or CallCounter()
        self.is_matroid = inner.is_matroid

    @property
    def calls(self) -> int:
        return self.counter.calls

    def _accepts(self, x):
        self.counter.tick()
        return self.inner._accepts(x)

    @property
    def label(self) -> str:
        return self.inner.label


class PredicateConstraint(ConstraintOracle):
    """Wraps an arbitrary downward-closed predicate; not assumed to be a matroid."""

    is_matroid = False

    def __init__(self, ground_size: int, predicate: Callable[[frozenset[int]], bool]):
        super().__init__(ground_size)
        self.predicate = predicate

    def _accepts(self, x):
        return bool(self.predicate(x))


def random_binary_matroid(n: int, dimension: int, rng: np.random.Generator) -> LinearMatroid:
    """n nonzero random vectors in GF(2)^dimension; loop-free by construction."""
    if dimension < 1:
        raise InputError(f"dimension must be positive, got {dimension}")
    vectors = []
    while len(vectors) < n:
        bits = rng.integers(0, 2, size=dimension)
        word = int(sum(int(b) << i for i, b in enumerate(bits)))
        if word:
            vectors.append(word)
    return LinearMatroid(vectors)
