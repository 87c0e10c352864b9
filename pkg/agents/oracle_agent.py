import asyncio

import networkx as nx

from agents.formatting import jsonable, one_based
from bruteforce.exact import (
    OracleLimits,
    as_threshold,
    disjoint_approx_count,
    exact_diverse_optimum,
    exact_optimum,
    max_feasible_size,
)
from config.settings import get_logger
from data.connectors import EDGE_LIST, load_graph
from diversity.bounds import disjoint_diversity_upper_bound, g
from errors import InputError
from harness.experiment import build_constraint, parse_constraint_spec
from matroids.oracles import IntersectionConstraint
from objectives.oracles import ModularObjective, VertexCoverageObjective

logger = get_logger(__name__)


class OracleAgent:
    description = "Computes exact ground truth on small instances by enumeration: the optimum, the most diverse r-multiset of alpha-approximations and the number of disjoint approximations."

    async def handle(self, task):
        payload = task.get("payload") or {}
        return await asyncio.to_thread(self._solve, payload)

    def _instance(self, payload: dict):
        if payload.get("weights") is not None:
            weights = [int(w) for w in payload["weights"]]
            graph = nx.empty_graph(len(weights))
            f = ModularObjective(weights)
        elif payload.get("graph"):
            graph = load_graph(payload["graph"], payload.get("format", EDGE_LIST), bool(payload.get("complement", False)))
            f = VertexCoverageObjective.from_graph(graph)
        else:
            raise InputError("oracle needs either weights or a graph file")
        specs = payload.get("constraints") or []
        if not specs:
            raise InputError("oracle needs at least one constraint spec, e.g. uniform:2")
        members = [build_constraint(parse_constraint_spec(spec), graph) for spec in specs]
        C = members[0] if len(members) == 1 else IntersectionConstraint(members)
        return f, C

    def _solve(self, payload: dict) -> dict:
        f, C = self._instance(payload)
        r = int(payload.get("r", 2))
        alpha = as_threshold(payload.get("alpha", "0"))
        limits = OracleLimits.from_settings()
        opt, witness = exact_optimum(f, C, limits)
        ss, P = exact_diverse_optimum(f, C, r, alpha, limits)
        disjoint = disjoint_approx_count(f, C, alpha, limits)
        s = max_feasible_size(C, limits)
        n = C.ground_size
        data = {
            "constraint": C.label,
            "opt": opt,
            "opt_witness": [v + 1 for v in sorted(witness)],
            "alpha": str(alpha),
            "ss": ss,
            "solutions": one_based(P.solutions),
            "values": [f.value(x) for x in P.solutions],
            "disjoint": disjoint,
            "g_bound": g(n, s, r),
            "disjoint_bound": disjoint_diversity_upper_bound(n, s, r, disjoint),
        }
        logger.info(f"Oracle on {C.label}: opt={opt}, ss={ss}, disjoint={disjoint}")
        return {
            "report": f"{C.label}, r={r}, alpha={alpha}: OPT={opt}, max ss={ss} (bound {data['g_bound']}), {disjoint} disjoint approximations",
            "data": jsonable(data),
        }
