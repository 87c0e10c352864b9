import asyncio

from config.settings import get_logger

logger = get_logger(__name__)


class Orchestrator:
    """
    Routes task dictionaries ``{"type": ..., "payload": {...}}`` to agents and turns
    agent failures into error dictionaries.
    """

    def __init__(self, agents: dict, default_agent_type: str = None):
        self.agents = {k: v["instance"] if isinstance(v, dict) else v for k, v in agents.items()}
        self.agent_descriptions = {
            k: v["description"] if isinstance(v, dict) else getattr(v, "description", "")
            for k, v in agents.items()
        }
        self.default_agent_type = default_agent_type
        logger.info(f"Orchestrator initialized with agents: {list(self.agents.keys())}")

    async def route_task(self, task: dict) -> dict:
        """Sends a task to the agent named by its type. Never raises."""
        try:
            agent_type = task.get("type") or self.default_agent_type
            agent = self.agents.get(agent_type)
            logger.info(f"Routing task of type '{agent_type}'")
            if not agent:
                logger.error(f"No agent found for type: {agent_type}. Task: {task}")
                return {
                    "error": f"No agent for task type '{agent_type}'. Available agents: {list(self.agents.keys())}"
                }
            try:
                return await agent.handle(task)
            except Exception as e:
                logger.error(f"Agent '{agent_type}' failed to handle task: {e}")
                return {"error": f"Agent '{agent_type}' could not complete the task.", "details": str(e)}
        except Exception as e:
            logger.error(f"Failed to route task: {e}")
            return {"error": "Something went wrong while routing the task.", "details": str(e)}

    async def handle_task(self, task) -> dict:
        """
        Runs a single task or a list of sub-tasks. Independent sub-tasks run
        concurrently; a sub-task whose payload asks for ``input`` receives the
        previous result and forces sequential execution.
        """
        sub_tasks = task if isinstance(task, list) else [task]
        logger.info(f"[TASK_FLOW] Starting handle_task with {len(sub_tasks)} sub-task(s)")
        if not sub_tasks:
            logger.error("[TASK_FLOW] No sub-tasks given.")
            return {"error": "No tasks to execute."}

        chained = any(idx > 0 and "input" in (st.get("payload") or {}) for idx, st in enumerate(sub_tasks))
        if len(sub_tasks) > 1 and not chained:
            logger.info(f"[TASK_FLOW] Executing {len(sub_tasks)} sub-tasks concurrently.")
            results = list(await asyncio.gather(*[self.route_task(st) for st in sub_tasks]))
        else:
            results = []
            prev_result = None
            for idx, sub_task in enumerate(sub_tasks):
                if idx > 0 and prev_result is not None and "input" in (sub_task.get("payload") or {}):
                    sub_task = {**sub_task, "payload": {**sub_task["payload"], "input": prev_result}}
                    logger.info(f"[TASK_FLOW] Passing previous result to sub-task {idx + 1}")
                logger.info(f"[TASK_FLOW] Sub-task {idx + 1}/{len(sub_tasks)}: type '{sub_task.get('type')}'")
                result = await self.route_task(sub_task)
                results.append(result)
                prev_result = None if "error" in result else result

        if len(results) == 1:
            logger.info(f"[TASK_FLOW] Task flow completed: {'error' if 'error' in results[0] else 'ok'}")
            return results[0]
        failed = [r for r in results if "error" in r]
        if failed:
            logger.warning(f"[TASK_FLOW] Task flow completed with {len(failed)} failed sub-task(s)")
            return {"error": f"{len(failed)} of {len(results)} sub-tasks failed.", "results": results}
        logger.info(f"[TASK_FLOW] Task flow completed with {len(results)} results")
        return {"final_status": "completed", "results": results}
