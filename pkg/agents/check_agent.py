import asyncio

from harness.suites import run_suites


class CheckAgent:
    description = "Runs the seeded verification suites (exact uniform diversity, bounds, objective guarantees, running diversity, fixtures, bound properties) and reports violations."

    async def handle(self, task):
        payload = task.get("payload") or {}
        names = payload.get("suites") or None
        trials = payload.get("trials")
        seed = int(payload.get("seed", 0))
        reports = await asyncio.to_thread(run_suites, names, None if trials is None else int(trials), seed)
        passed = all(report.passed for report in reports)
        lines = [
            f"{report.name}: {report.checked} checks, {len(report.violations)} violations, {report.seconds:.2f}s"
            for report in reports
        ]
        return {
            "report": "\n".join(lines),
            "data": {
                "passed": passed,
                "suites": [report.summary() for report in reports],
                "violations": {report.name: [str(v) for v in report.violations[:5]] for report in reports if report.violations},
            },
        }
