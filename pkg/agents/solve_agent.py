import asyncio

from agents.formatting import jsonable, one_based, verdict_dict
from algorithms.guarantees import verify_running_diversity, verify_ss_nondecreasing, verify_uniform_exact_ss
from config.settings import get_logger
from errors import InputError
from harness.experiment import ExperimentConfig, build_instance, constraint_rank, run_one, ss_bound
from matroids.oracles import UniformMatroid

logger = get_logger(__name__)


class SolveAgent:
    description = "Runs one greedy algorithm (common elements with parameter b, or representation limit with parameter l) on a graph coverage instance and returns the r solutions with their values and diversity."

    async def handle(self, task):
        payload = dict(task.get("payload") or {})
        if "param" not in payload:
            raise InputError("run needs a parameter: b for the common-element greedy, l for the representation-limit greedy")
        param = int(payload.pop("param"))
        cfg = ExperimentConfig(**payload)
        return await asyncio.to_thread(self._solve, cfg, param)

    def _solve(self, cfg: ExperimentConfig, param: int) -> dict:
        _, f, C = build_instance(cfg)
        P, trace = run_one(f, C, cfg.algo, cfg.r, param)
        values = [f.value(x) for x in P.solutions]
        ss = P.ss()
        bound = ss_bound(C, cfg.r)

        verdicts = []
        if cfg.algo == "common":
            verdicts.append(verify_ss_nondecreasing(trace))
            if isinstance(C, UniformMatroid) and param < C.K <= C.ground_size:
                verdicts.append(verify_uniform_exact_ss(P, trace, C.ground_size, C.K, param, cfg.r))
        elif param < cfg.r:
            verdicts.append(verify_running_diversity(trace, cfg.r, param))

        logger.info(f"Solved {cfg.graph_name} under {C.label}: algo={cfg.algo}, param={param}, ss={ss}")
        report = (
            f"{cfg.algo} greedy on {cfg.graph_name} under {C.label} (r={cfg.r}, param={param}): "
            f"min f={min(values)}, ss={ss} of bound {bound}"
        )
        return {
            "report": report,
            "data": {
                "graph": cfg.graph_name,
                "constraint": C.label,
                "rank": constraint_rank(C),
                "solutions": one_based(P.solutions),
                "values": jsonable(values),
                "ss": ss,
                "ss_bound": bound,
                "trace": trace.summary() | {"seed": [v + 1 for v in sorted(trace.seed)]},
                "verdicts": [verdict_dict(v) for v in verdicts],
            },
        }
