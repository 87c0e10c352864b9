from agents.formatting import jsonable
from errors import InputError
from harness.experiment import ExperimentConfig, objective_gaps, row_dict, run_sweep_async
from harness.plots import emit_plot


class SweepAgent:
    description = "Runs a parameter sweep of one greedy algorithm over b or l, writes the CSV and optional SVG plot, and returns the rows."

    async def handle(self, task):
        cfg = ExperimentConfig(**(task.get("payload") or {}))
        result = await run_sweep_async(cfg)
        if not result.rows and result.failures:
            raise InputError(f"every sweep row failed; first error: {result.failures[0]['error']}")
        if cfg.plot_path and result.rows:
            emit_plot(result.rows, cfg.plot_kind, cfg.plot_path)
        gaps = objective_gaps(result.rows)
        report = f"Sweep of {cfg.algo} on {cfg.graph_name}: {len(result.rows)} rows, {len(result.failures)} failed"
        if gaps:
            report += f", worst objective gap {min(gaps):.4f}"
        return {
            "report": report,
            "data": {
                "rows": [jsonable(row_dict(row)) for row in result.rows],
                "failures": result.failures,
                "csv": cfg.csv_path,
                "plot": cfg.plot_path,
            },
        }
