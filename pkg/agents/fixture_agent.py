import asyncio

from agents.formatting import one_based
from algorithms.guarantees import uniform_replimit_ss_floor
from algorithms.replimit_greedy import RepLimitConfig, run_replimit_greedy
from bruteforce.exact import as_threshold, disjoint_approx_count
from bruteforce.fixtures import (
    fixture_cyclic_uniform,
    fixture_disjoint_paths,
    fixture_disjoint_triangles,
    fixture_modular_decreasing,
    fixture_rank_tight_matroid,
)
from data.connectors import standin_graph, write_edge_list
from diversity.bounds import g
from errors import InputError
from matroids.oracles import UniformMatroid

FIXTURES = ("cyclic", "modular", "rank_tight", "paths", "triangles", "standin")


def _arg(payload: dict, name: str) -> int:
    if name not in payload:
        raise InputError(f"fixture argument {name!r} is required")
    return int(payload[name])


class FixtureAgent:
    description = "Builds the constructed instances with known diversity (cyclic uniform multisets, decreasing modular weights, the rank-tight matroid, disjoint paths and triangles) and writes stand-in benchmark graphs."

    async def handle(self, task):
        payload = dict(task.get("payload") or {})
        name = payload.pop("fixture", None)
        if name not in FIXTURES:
            raise InputError(f"unknown fixture {name!r}; expected one of {FIXTURES}")
        return await asyncio.to_thread(getattr(self, f"_{name}"), payload)

    def _cyclic(self, payload):
        n, s, r = (_arg(payload, k) for k in ("n", "s", "r"))
        P = fixture_cyclic_uniform(n, s, r)
        return {
            "report": f"cyclic multiset n={n}, s={s}, r={r}: ss={P.ss()}, g={g(n, s, r)}",
            "data": {"solutions": one_based(P.solutions), "ss": P.ss(), "g": g(n, s, r)},
        }

    def _modular(self, payload):
        n, K, r, l = (_arg(payload, k) for k in ("n", "K", "r", "l"))
        P, _ = run_replimit_greedy(fixture_modular_decreasing(n), UniformMatroid(n, K), RepLimitConfig(r=r, l=l))
        floor = uniform_replimit_ss_floor(n, K, r, l) if l < r else None
        return {
            "report": f"decreasing weights under U{K}, r={r}, l={l}: ss={P.ss()}, floor={floor}",
            "data": {"solutions": one_based(P.solutions), "ss": P.ss(), "floor": floor},
        }

    def _rank_tight(self, payload):
        n, s, r, l = (_arg(payload, k) for k in ("n", "s", "r", "l"))
        P, _ = run_replimit_greedy(fixture_modular_decreasing(n), fixture_rank_tight_matroid(n, s), RepLimitConfig(r=r, l=l))
        expected = l * (r - l) * (s - 1)
        return {
            "report": f"rank-tight matroid n={n}, s={s}, r={r}, l={l}: ss={P.ss()}, expected={expected}",
            "data": {"solutions": one_based(P.solutions), "ss": P.ss(), "expected": expected},
        }

    def _disjoint(self, f, payload, label):
        K = _arg(payload, "K")
        alpha = as_threshold(payload.get("alpha", "1"))
        count = disjoint_approx_count(f, UniformMatroid(f.ground_size, K), alpha)
        return {"report": f"{label} under U{K}: {count} disjoint {alpha}-approximations", "data": {"disjoint": count}}

    def _paths(self, payload):
        return self._disjoint(fixture_disjoint_paths(_arg(payload, "count")), payload, "disjoint paths")

    def _triangles(self, payload):
        return self._disjoint(fixture_disjoint_triangles(_arg(payload, "count")), payload, "disjoint triangles")

    def _standin(self, payload):
        name = payload.get("name")
        out = payload.get("out")
        if not out:
            raise InputError("stand-in graph needs an output path")
        graph = standin_graph(name, int(payload.get("n", 450)), int(payload.get("seed", 0)))
        write_edge_list(graph, out)
        return {
            "report": f"Wrote stand-in for {name}: {graph.number_of_nodes()} vertices, {graph.number_of_edges()} edges to {out}",
            "data": {"path": out, "vertices": graph.number_of_nodes(), "edges": graph.number_of_edges()},
        }
