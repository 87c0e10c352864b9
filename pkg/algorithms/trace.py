from dataclasses import dataclass, field

COMMON = "common"
DIVERSE = "diverse"


@dataclass(frozen=True)
class TraceRecord:
    phase: str
    solution: int | None
    element: int
    count_before: int
    gain: object
    ss_after: int
    values_after: tuple


@dataclass
class RunTrace:
    """
    Step-by-step history of one greedy run.

    ``seed`` is the set every solution starts from: the common elements of the
    first phase for the common-element greedy, ``{v*}`` for the representation-limit
    greedy.
    """

    algorithm: str
    r: int
    seed: frozenset = frozenset()
    seed_value: object = 0
    records: list[TraceRecord] = field(default_factory=list)
    f_calls: int = 0
    indep_calls: int = 0

    def phase(self, name: str) -> list[TraceRecord]:
        return [rec for rec in self.records if rec.phase == name]

    @property
    def common_elements(self) -> frozenset:
        return self.seed

    def final_values(self) -> tuple:
        diverse = self.phase(DIVERSE)
        if diverse:
            return diverse[-1].values_after
        return (self.seed_value,) * self.r

    def ss_series(self) -> list[int]:
        return [rec.ss_after for rec in self.phase(DIVERSE)]

    def size_history(self) -> list[tuple[int, ...]]:
        """Solution sizes after every diversification step."""
        sizes = [len(self.seed)] * self.r
        history = []
        for rec in self.phase(DIVERSE):
            sizes[rec.solution] += 1
            history.append(tuple(sizes))
        return history

    def improvement_size(self, index: int) -> int:
        """Size of solution ``index`` right after its last strictly improving insertion."""
        size = last = len(self.seed)
        for rec in self.phase(DIVERSE):
            if rec.solution != index:
                continue
            size += 1
            if rec.gain > 0:
                last = size
        return max(last, 1)

    def summary(self) -> dict:
        return {
            "algorithm": self.algorithm,
            "r": self.r,
            "seed": sorted(self.seed),
            "steps": len(self.records),
            "f_calls": self.f_calls,
            "indep_calls": self.indep_calls,
        }
