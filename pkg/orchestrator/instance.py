from dotenv import load_dotenv

from agents.bound_agent import BoundAgent
from agents.check_agent import CheckAgent
from agents.fixture_agent import FixtureAgent
from agents.oracle_agent import OracleAgent
from agents.solve_agent import SolveAgent
from agents.sweep_agent import SweepAgent
from orchestrator.orchestrator import Orchestrator

load_dotenv()

agents = {
    "run": {"instance": SolveAgent(), "description": SolveAgent.description},
    "sweep": {"instance": SweepAgent(), "description": SweepAgent.description},
    "bound": {"instance": BoundAgent(), "description": BoundAgent.description},
    "oracle": {"instance": OracleAgent(), "description": OracleAgent.description},
    "check": {"instance": CheckAgent(), "description": CheckAgent.description},
    "fixtures": {"instance": FixtureAgent(), "description": FixtureAgent.description},
}

orchestrator = Orchestrator(agents)
