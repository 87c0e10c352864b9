import asyncio
from fractions import Fraction

from agents.formatting import jsonable
from algorithms.common_greedy import greedy_prefix
from algorithms.replimit_greedy import suggest_rep_limit
from config.settings import get_logger
from diversity.bounds import (
    common_greedy_diversity_ratio,
    disjoint_diversity_upper_bound,
    g,
    min_closure_sharpened_bound,
    partition_diversity_upper_bound,
)
from errors import InputError
from harness.experiment import ExperimentConfig, build_instance, constraint_rank, ss_bound
from harness.plots import emit_g_plot

logger = get_logger(__name__)

BOUND_KINDS = ("g", "ratio", "disjoint", "suggest", "partition", "instance", "g_plot")


def _ints(payload: dict, *names: str) -> list[int]:
    missing = [name for name in names if name not in payload]
    if missing:
        raise InputError(f"missing bound arguments: {missing}")
    try:
        return [int(payload[name]) for name in names]
    except (TypeError, ValueError):
        raise InputError(f"bound arguments {list(names)} must be integers")


class BoundAgent:
    description = "Evaluates the diversity bounds: g(a, b, c), the common-element diversity ratio, the disjoint-approximation bound, partition and instance bounds, and the suggested representation limit."

    async def handle(self, task):
        payload = dict(task.get("payload") or {})
        kind = payload.pop("kind", "g")
        if kind not in BOUND_KINDS:
            raise InputError(f"unknown bound kind {kind!r}; expected one of {BOUND_KINDS}")
        if kind == "instance":
            return await asyncio.to_thread(self._instance_bounds, ExperimentConfig(**payload))
        if kind == "g_plot":
            path = emit_g_plot(payload["path"])
            return {"report": f"Wrote g plot to {path}", "data": {"path": path}}
        if kind == "g":
            a, b, c = _ints(payload, "a", "b", "c")
            value = g(a, b, c)
            return {"report": f"g({a}, {b}, {c}) = {value}", "data": {"g": value}}
        if kind == "ratio":
            n, K, b, r = _ints(payload, "n", "K", "b", "r")
            ratio = common_greedy_diversity_ratio(n, K, b, r)
            floor = 1 - Fraction(b, K) if K else Fraction(1)
            return {
                "report": f"common-element ss / g({n}, {K}, {r}) = {ratio} (at least {floor})",
                "data": jsonable({"ratio": ratio, "ratio_float": float(ratio), "floor": floor}),
            }
        if kind == "disjoint":
            n, s, r, k = _ints(payload, "n", "s", "r", "k")
            value = disjoint_diversity_upper_bound(n, s, r, k)
            return {"report": f"ss is at most {value} with {k} disjoint approximations", "data": {"bound": value}}
        if kind == "partition":
            r = _ints(payload, "r")[0]
            value = partition_diversity_upper_bound(payload.get("sizes", []), payload.get("caps", []), r)
            return {"report": f"partition ss bound = {value}", "data": {"bound": value}}
        n, rank, r = _ints(payload, "n", "rank", "r")
        limit = suggest_rep_limit(n, rank, r, bool(payload.get("pathological", False)))
        return {"report": f"suggested representation limit l = {limit}", "data": {"l": limit}}

    def _instance_bounds(self, cfg: ExperimentConfig) -> dict:
        _, f, C = build_instance(cfg)
        n = C.ground_size
        rank = constraint_rank(C)
        data = {"graph": cfg.graph_name, "constraint": C.label, "n": n, "rank": rank, "ss_bound": ss_bound(C, cfg.r), "g_bound": g(n, rank, cfg.r)}
        if C.is_matroid:
            prefixes = [greedy_prefix(f, C, steps).members for steps in range(rank + 1)]
            data["closure_bound"] = min_closure_sharpened_bound(C, prefixes, cfg.r)
        logger.info(f"Instance bounds for {cfg.graph_name} under {C.label}: {data}")
        report = f"{C.label} on {cfg.graph_name}: ss bound {data['ss_bound']}, g({n}, {rank}, {cfg.r}) = {data['g_bound']}"
        if "closure_bound" in data:
            report += f", closure-sharpened {data['closure_bound']}"
        return {"report": report, "data": data}
