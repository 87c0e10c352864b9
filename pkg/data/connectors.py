"""
Graph ingestion: edge lists (plain ``u v`` lines or DIMACS ``e u v`` lines) and
MatrixMarket coordinate files, with optional complementation.

Vertex ids are 1-based in files and 0-based in every returned graph.
"""
import csv
import os

import networkx as nx
import scipy.io
import scipy.sparse

from config.settings import get_logger
from errors import InputError

logger = get_logger(__name__)

EDGE_LIST = "edge-list"
MATRIX_MARKET = "matrix-market"
FORMATS = (EDGE_LIST, MATRIX_MARKET)

# vertex and edge counts of the benchmark graphs before complementation
BENCHMARK_GRAPHS = {
    "frb30-15-1": (450, 17827),
    "frb30-15-2": (450, 17874),
    "frb35-17-1": (595, 27856),
    "frb40-19-1": (760, 41314),
}


def parse_edge_list(text: str) -> nx.Graph:
    declared = 0
    edges = set()
    duplicates = loops = 0
    max_id = 0
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line[0] in "%#c":
            continue
        tokens = line.split()
        if tokens[0] == "p":
            # DIMACS problem line: p edge <n> <m>
            try:
                declared = int(tokens[2])
            except (IndexError, ValueError):
                raise InputError(f"line {lineno}: malformed problem line {raw!r}")
            continue
        if tokens[0] == "e":
            tokens = tokens[1:]
        try:
            u, v = int(tokens[0]), int(tokens[1])
        except (IndexError, ValueError):
            raise InputError(f"line {lineno}: expected two vertex ids, got {raw!r}")
        if u < 1 or v < 1:
            raise InputError(f"line {lineno}: vertex ids are 1-based, got {raw!r}")
        max_id = max(max_id, u, v)
        if u == v:
            loops += 1
            continue
        edge = (min(u, v) - 1, max(u, v) - 1)
        if edge in edges:
            duplicates += 1
            continue
        edges.add(edge)
    n = max(declared, max_id)
    if duplicates:
        logger.warning(f"Dropped {duplicates} duplicate edges while parsing edge list.")
    if loops:
        logger.warning(f"Dropped {loops} self-loops while parsing edge list.")
    graph = nx.empty_graph(n)
    graph.add_edges_from(sorted(edges))
    return graph


def parse_matrix_market(path: str) -> nx.Graph:
    try:
        matrix = scipy.io.mmread(path)
    except (ValueError, IndexError) as e:
        raise InputError(f"cannot parse MatrixMarket file {path}: {e}")
    coo = scipy.sparse.coo_matrix(matrix)
    n = max(coo.shape)
    edges = {(min(i, j), max(i, j)) for i, j in zip(coo.row.tolist(), coo.col.tolist()) if i != j}
    graph = nx.empty_graph(n)
    graph.add_edges_from(sorted(edges))
    return graph


def load_graph(path: str, fmt: str = EDGE_LIST, complement: bool = False) -> nx.Graph:
    if fmt not in FORMATS:
        raise InputError(f"unknown graph format {fmt!r}; expected one of {FORMATS}")
    if not os.path.exists(path):
        raise InputError(f"graph file not found: {path}")
    if fmt == EDGE_LIST:
        with open(path, encoding="utf-8") as f:
            graph = parse_edge_list(f.read())
    else:
        graph = parse_matrix_market(path)
    logger.info(f"Loaded graph {path}: {graph.number_of_nodes()} vertices, {graph.number_of_edges()} edges")
    if complement:
        graph = complement_graph(graph)
        logger.info(f"Complemented graph {path}: {graph.number_of_edges()} edges")
    return graph


def complement_graph(graph: nx.Graph) -> nx.Graph:
    result = nx.complement(graph)
    result.remove_edges_from(nx.selfloop_edges(result))
    return result


def graph_id(path: str) -> str:
    base = os.path.basename(path)
    return base.split(".")[0] if base else path


def standin_graph(name: str, n: int = 450, seed: int = 0) -> nx.Graph:
    """
    Random graph with ``n`` vertices and the edge density of the named benchmark
    graph, for use when the benchmark file itself is not available.
    """
    if name not in BENCHMARK_GRAPHS:
        raise InputError(f"unknown benchmark graph {name!r}; known: {sorted(BENCHMARK_GRAPHS)}")
    vertices, edges = BENCHMARK_GRAPHS[name]
    density = edges / (vertices * (vertices - 1) / 2)
    m = round(density * n * (n - 1) / 2)
    return nx.gnm_random_graph(n, m, seed=seed)


def write_edge_list(graph: nx.Graph, path: str) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as f:
        f.write(f"% {graph.number_of_nodes()} vertices\n")
        f.write(f"p edge {graph.number_of_nodes()} {graph.number_of_edges()}\n")
        for u, v in sorted(tuple(sorted(e)) for e in graph.edges()):
            f.write(f"{u + 1} {v + 1}\n")


def load_best_known(path: str) -> dict[tuple[str, str], int]:
    """Reads ``graph,constraint,best_known`` rows into a lookup keyed by (graph, constraint)."""
    table = {}
    with open(path, encoding="utf-8", newline="") as f:
        for lineno, row in enumerate(csv.DictReader(f), 2):
            try:
                table[(row["graph"], row["constraint"])] = int(row["best_known"])
            except (KeyError, TypeError, ValueError):
                raise InputError(f"{path} line {lineno}: expected graph,constraint,best_known columns")
    return table
