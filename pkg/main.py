from dotenv import load_dotenv
from fastapi import FastAPI, HTTPException
from pydantic import BaseModel, Field

from orchestrator.instance import orchestrator

# Load environment variables from .env file
load_dotenv()


class TaskRequest(BaseModel):
    type: str
    payload: dict = Field(default_factory=dict)


app = FastAPI(title="diverse-greedy")


@app.get("/")
async def root():
    return {"message": "diverse-greedy service is running", "agents": orchestrator.agent_descriptions}


@app.post("/tasks")
async def run_task(request: TaskRequest):
    result = await orchestrator.route_task(request.model_dump())
    if "error" in result:
        raise HTTPException(status_code=400, detail=result)
    return result


@app.post("/tasks/batch")
async def run_batch(requests: list[TaskRequest]):
    result = await orchestrator.handle_task([r.model_dump() for r in requests])
    if "error" in result:
        raise HTTPException(status_code=400, detail=result)
    return result
