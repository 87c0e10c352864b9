"""Constructed instances whose diversity values are known in closed form."""
import networkx as nx

from diversity.multiset import SolutionMultiset
from errors import InputError
from matroids.oracles import PartitionMatroid
from objectives.oracles import ModularObjective, VertexCoverageObjective


def fixture_cyclic_uniform(n: int, s: int, r: int) -> SolutionMultiset:
    """
    Solution i holds the s consecutive elements starting at i*s, wrapping around the
    ground set. Reaches ss = g(n, s, r) whenever s <= n/2.
    """
    if not 1 <= s <= n:
        raise InputError(f"need 1 <= s <= n, got s={s}, n={n}")
    if r < 1:
        raise InputError(f"r must be positive, got {r}")
    return SolutionMultiset(n, [[(i * s + j) % n for j in range(s)] for i in range(r)])


def fixture_modular_decreasing(n: int) -> ModularObjective:
    """Weights n, n-1, ..., 1."""
    if n < 1:
        raise InputError(f"ground size must be positive, got {n}")
    return ModularObjective([n - i for i in range(n)])


def fixture_rank_tight_matroid(n: int, s: int) -> PartitionMatroid:
    """
    Rank-s partition matroid where element 0 and elements s..n-1 share one slot while
    elements 1..s-1 are free; paired with decreasing weights the
    representation-limit greedy ends at ss = l(r - l)(s - 1).
    """
    if not 1 <= s <= n:
        raise InputError(f"need 1 <= s <= n, got s={s}, n={n}")
    blocks = [[0, *range(s, n)]]
    caps = [1]
    if s > 1:
        blocks.append(list(range(1, s)))
        caps.append(s - 1)
    return PartitionMatroid.from_blocks(blocks, caps, n)


def fixture_disjoint_paths(count: int) -> VertexCoverageObjective:
    """Coverage on ``count`` disjoint 3-vertex paths; each centre is the only optimal singleton."""
    graph = nx.disjoint_union_all([nx.path_graph(3) for _ in range(count)]) if count else nx.empty_graph(0)
    return VertexCoverageObjective.from_graph(graph)


def fixture_disjoint_triangles(count: int) -> VertexCoverageObjective:
    graph = nx.disjoint_union_all([nx.complete_graph(3) for _ in range(count)]) if count else nx.empty_graph(0)
    return VertexCoverageObjective.from_graph(graph)
