from objectives.oracles import (
    CountedObjective,
    ModularObjective,
    ObjectiveState,
    SetFunctionObjective,
    ValueOracle,
    VertexCoverageObjective,
    exact_value,
)
from objectives.certify import Certificate, certify_monotone_submodular
