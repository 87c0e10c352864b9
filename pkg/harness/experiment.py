"""
Experiment pipeline: constraint construction from a graph, parameter sweeps over
either greedy algorithm, normalization denominators and CSV output.
"""
import asyncio
import csv
import time
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from typing import Literal

import networkx as nx
from pydantic import BaseModel, Field, model_validator

from algorithms.common_greedy import CommonGreedyConfig, greedy_prefix, max_feasible_size, run_common_greedy
from algorithms.replimit_greedy import RepLimitConfig, run_replimit_greedy
from bruteforce.exact import exact_optimum
from config.settings import get_logger, load_settings
from data.connectors import EDGE_LIST, FORMATS, graph_id, load_best_known, load_graph, standin_graph
from diversity.bounds import g, partition_diversity_upper_bound
from errors import InputError
from matroids.operations import load_partition_file, rank_of
from matroids.oracles import ConstraintOracle, IntersectionConstraint, PartitionMatroid, UniformMatroid
from objectives.oracles import ValueOracle, VertexCoverageObjective

logger = get_logger(__name__)

CSV_COLUMNS = (
    "graph", "constraint", "algo", "param", "r", "min_f", "mean_f",
    "ss", "ss_bound", "best_known", "f_calls", "indep_calls", "ms",
)
ALGORITHMS = ("common", "replimit")
EXACT_BEST_KNOWN_LIMIT = 12


class ConstraintSpec(BaseModel):
    kind: Literal["uniform", "partition", "degree"]
    K: int | None = None
    path: str | None = None
    blocks: int | None = None
    caps: list[int] = Field(default_factory=list)
    reverse: bool = False


def parse_constraint_spec(text: str) -> ConstraintSpec:
    """``uniform:K``, ``partition:FILE`` or ``degree:k:c1,c2,...[:reverse]``."""
    kind, _, rest = text.strip().partition(":")
    try:
        if kind == "uniform":
            return ConstraintSpec(kind="uniform", K=int(rest))
        if kind == "partition" and rest:
            return ConstraintSpec(kind="partition", path=rest)
        if kind == "degree":
            parts = rest.split(":")
            caps = [int(c) for c in parts[1].split(",")] if len(parts) > 1 and parts[1] else []
            reverse = len(parts) > 2 and parts[2] == "reverse"
            return ConstraintSpec(kind="degree", blocks=int(parts[0]), caps=caps, reverse=reverse)
    except ValueError:
        pass
    raise InputError(f"malformed constraint spec {text!r}; expected uniform:K, partition:FILE or degree:k:caps")


class ExperimentConfig(BaseModel):
    graph: str | None = None
    standin: str | None = None
    seed: int = 0
    format: str = EDGE_LIST
    complement: bool = False
    uniform: int | None = None
    partition: str | None = None
    degree_partition: int | None = None
    caps: list[int] | None = None
    reverse_degree_order: bool = False
    intersect: list[str] | None = None
    r: int
    algo: Literal["common", "replimit"] = "common"
    params: list[int] | None = None
    csv_path: str | None = None
    plot_path: str | None = None
    plot_kind: Literal["objective", "diversity"] = "objective"
    best_known_path: str | None = None
    record_timings: bool = False

    @model_validator(mode="after")
    def _check(self):
        given = [
            name for name in ("uniform", "partition", "degree_partition", "intersect")
            if getattr(self, name) not in (None, [])
        ]
        if len(given) != 1:
            raise ValueError(f"exactly one constraint is required, got {given or 'none'}")
        if (self.graph is None) == (self.standin is None):
            raise ValueError("exactly one of graph and standin is required")
        if self.r < 2:
            raise ValueError(f"r must be at least 2, got {self.r}")
        if self.format not in FORMATS:
            raise ValueError(f"format must be one of {FORMATS}")
        if self.degree_partition is not None and self.caps is None:
            raise ValueError("degree partition needs caps")
        return self

    def constraint_specs(self) -> list[ConstraintSpec]:
        if self.uniform is not None:
            return [ConstraintSpec(kind="uniform", K=self.uniform)]
        if self.partition is not None:
            return [ConstraintSpec(kind="partition", path=self.partition)]
        if self.degree_partition is not None:
            return [ConstraintSpec(kind="degree", blocks=self.degree_partition, caps=self.caps, reverse=self.reverse_degree_order)]
        return [parse_constraint_spec(item) for item in self.intersect]

    @property
    def graph_name(self) -> str:
        return graph_id(self.graph) if self.graph else self.standin


def degree_partition(graph: nx.Graph, k: int, caps: list[int], reverse: bool = False) -> PartitionMatroid:
    """
    Groups vertices sorted by ascending degree (ties by id) into k consecutive blocks.
    Blocks 2..k hold floor(n/k) vertices each; block 1 absorbs the remainder.
    """
    n = graph.number_of_nodes()
    if k < 1 or k > n:
        raise InputError(f"cannot split {n} vertices into {k} blocks")
    if len(caps) != k:
        raise InputError(f"{k} blocks but {len(caps)} caps")
    sign = -1 if reverse else 1
    order = sorted(range(n), key=lambda v: (sign * graph.degree(v), v))
    size = n // k
    first = n - (k - 1) * size
    blocks = [order[:first]] + [order[first + i * size: first + (i + 1) * size] for i in range(k - 1)]
    return PartitionMatroid.from_blocks(blocks, caps, n)


def build_constraint(spec: ConstraintSpec, graph: nx.Graph) -> ConstraintOracle:
    n = graph.number_of_nodes()
    if spec.kind == "uniform":
        if spec.K is None or spec.K < 1:
            raise InputError(f"uniform rank must be positive, got {spec.K}")
        return UniformMatroid(n, spec.K)
    if spec.kind == "partition":
        return load_partition_file(spec.path, n)
    return degree_partition(graph, spec.blocks, spec.caps, spec.reverse)


def build_instance(cfg: ExperimentConfig, graph: nx.Graph = None):
    if graph is None:
        if cfg.graph:
            graph = load_graph(cfg.graph, cfg.format, cfg.complement)
        else:
            graph = standin_graph(cfg.standin, seed=cfg.seed)
            if cfg.complement:
                graph = nx.complement(graph)
    members = [build_constraint(spec, graph) for spec in cfg.constraint_specs()]
    constraint = members[0] if len(members) == 1 else IntersectionConstraint(members)
    return graph, VertexCoverageObjective.from_graph(graph), constraint


def constraint_rank(C: ConstraintOracle) -> int:
    if C.is_matroid:
        return rank_of(C, range(C.ground_size))
    return max_feasible_size(C)


def ss_bound(C: ConstraintOracle, r: int) -> int:
    """Upper bound on ss: per-block sum for partitions, g(n, rank, r) otherwise."""
    if isinstance(C, PartitionMatroid):
        return partition_diversity_upper_bound(C.block_sizes, C.caps, r)
    if isinstance(C, UniformMatroid):
        return g(C.ground_size, min(C.K, C.ground_size), r)
    if isinstance(C, IntersectionConstraint):
        return min(ss_bound(m, r) for m in C.members)
    return g(C.ground_size, constraint_rank(C), r)


@dataclass
class SweepRow:
    graph: str
    constraint: str
    algo: str
    param: int
    r: int
    min_f: int | float
    mean_f: float
    ss: int
    ss_bound: int
    best_known: int | float | None
    f_calls: int
    indep_calls: int
    ms: int
    max_f: int | float | None = field(default=None, compare=False, repr=False)


@dataclass
class SweepResult:
    rows: list[SweepRow] = field(default_factory=list)
    failures: list[dict] = field(default_factory=list)


def _plain(value):
    if isinstance(value, Fraction):
        return value.numerator if value.denominator == 1 else float(value)
    return value


def run_one(f: ValueOracle, C: ConstraintOracle, algo: str, r: int, param: int):
    if algo == "common":
        return run_common_greedy(f, C, CommonGreedyConfig(b=param, r=r))
    if algo == "replimit":
        return run_replimit_greedy(f, C, RepLimitConfig(r=r, l=param))
    raise InputError(f"unknown algorithm {algo!r}; expected one of {ALGORITHMS}")


def parameter_range(algo: str, rank: int, r: int) -> list[int]:
    return list(range(0, rank + 1)) if algo == "common" else list(range(1, r + 1))


def _row(graph_name, C, algo, r, param, bound, f, record_timings) -> SweepRow:
    started = time.perf_counter()
    P, trace = run_one(f, C, algo, r, param)
    elapsed = int(round((time.perf_counter() - started) * 1000)) if record_timings else 0
    values = [f.value(x) for x in P.solutions]
    mean = Fraction(sum(values), len(values))
    return SweepRow(
        graph=graph_name,
        constraint=C.label,
        algo=algo,
        param=param,
        r=r,
        min_f=_plain(min(values)),
        mean_f=round(float(mean), 6),
        ss=P.ss(),
        ss_bound=bound,
        best_known=None,
        f_calls=trace.f_calls,
        indep_calls=trace.indep_calls,
        ms=elapsed,
        max_f=_plain(max(values)),
    )


def best_known_value(f: ValueOracle, C: ConstraintOracle, rows: list[SweepRow], external: int = None):
    """Exact optimum on small ground sets; otherwise the best value seen anywhere."""
    if C.ground_size <= EXACT_BEST_KNOWN_LIMIT:
        value, _ = exact_optimum(f, C)
        return _plain(value)
    candidates = [row.max_f for row in rows if row.max_f is not None]
    candidates.append(_plain(greedy_prefix(f, C, constraint_rank(C)).value))
    if external is not None:
        candidates.append(external)
    return max(candidates)


async def run_sweep_async(cfg: ExperimentConfig, graph: nx.Graph = None) -> SweepResult:
    """Rows run concurrently in worker threads; output order follows the parameter order."""
    graph, f, C = build_instance(cfg, graph)
    rank = constraint_rank(C)
    params = cfg.params if cfg.params is not None else parameter_range(cfg.algo, rank, cfg.r)
    bound = ss_bound(C, cfg.r)
    name = cfg.graph_name
    logger.info(f"Sweep started: graph={name}, constraint={C.label}, algo={cfg.algo}, r={cfg.r}, params={params}")

    semaphore = asyncio.Semaphore(load_settings().sweep_workers)

    async def run_param(param):
        async with semaphore:
            try:
                return await asyncio.to_thread(_row, name, C, cfg.algo, cfg.r, param, bound, f, cfg.record_timings)
            except Exception as e:
                logger.error(f"Sweep row failed: param={param}, error={e}")
                return {"param": param, "error": str(e)}

    outcomes = await asyncio.gather(*[run_param(p) for p in params])
    result = SweepResult()
    for outcome in outcomes:
        if isinstance(outcome, SweepRow):
            result.rows.append(outcome)
        else:
            result.failures.append(outcome)

    external = None
    if cfg.best_known_path:
        external = load_best_known(cfg.best_known_path).get((name, C.label))
    if result.rows:
        best = best_known_value(f, C, result.rows, external)
        for row in result.rows:
            row.best_known = best
    if cfg.csv_path:
        write_sweep_csv(result.rows, cfg.csv_path)
    logger.info(f"Sweep finished: {len(result.rows)} rows, {len(result.failures)} failures")
    return result


def run_sweep(cfg: ExperimentConfig, graph: nx.Graph = None) -> SweepResult:
    return asyncio.run(run_sweep_async(cfg, graph))


def _fmt(value) -> str:
    if value is None:
        return ""
    if isinstance(value, float):
        return f"{value:.6f}"
    return str(value)


def write_sweep_csv(rows: list[SweepRow], path: str) -> None:
    with open(path, "w", encoding="utf-8", newline="") as f:
        writer = csv.writer(f, lineterminator="\n")
        writer.writerow(CSV_COLUMNS)
        for row in rows:
            writer.writerow([_fmt(getattr(row, col)) for col in CSV_COLUMNS])


def _number(text: str):
    if text == "":
        return None
    try:
        return int(text)
    except ValueError:
        return float(text)


def read_sweep_csv(path: str) -> list[SweepRow]:
    rows = []
    with open(path, encoding="utf-8", newline="") as f:
        for record in csv.DictReader(f):
            rows.append(
                SweepRow(
                    graph=record["graph"],
                    constraint=record["constraint"],
                    algo=record["algo"],
                    param=int(record["param"]),
                    r=int(record["r"]),
                    min_f=_number(record["min_f"]),
                    mean_f=float(record["mean_f"]),
                    ss=int(record["ss"]),
                    ss_bound=int(record["ss_bound"]),
                    best_known=_number(record["best_known"]),
                    f_calls=int(record["f_calls"]),
                    indep_calls=int(record["indep_calls"]),
                    ms=int(record["ms"]),
                )
            )
    return rows


def row_dict(row: SweepRow) -> dict:
    data = asdict(row)
    data.pop("max_f", None)
    return data


def objective_gaps(rows: list[SweepRow]) -> list[float]:
    """min_f / best_known for each row with a positive denominator."""
    return [row.min_f / row.best_known for row in rows if row.best_known]


def compare_diversity(common_rows: list[SweepRow], replimit_rows: list[SweepRow], rank: int) -> float:
    """
    Share of representation-limit rows whose ss beats the common-element row with the
    nearest normalized parameter (l/r against b/rank, ties to the smaller b).
    """
    if not common_rows or not replimit_rows or rank <= 0:
        return 0.0
    wins = 0
    for row in replimit_rows:
        target = Fraction(row.param, row.r)
        match = min(common_rows, key=lambda c: (abs(Fraction(c.param, rank) - target), c.param))
        if row.ss > match.ss:
            wins += 1
    return wins / len(replimit_rows)
