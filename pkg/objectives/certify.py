from dataclasses import dataclass, field

from errors import EnumerationLimitError
from matroids.oracles import from_mask
from objectives.oracles import ValueOracle

CERTIFY_MAX_GROUND = 12


@dataclass
class Certificate:
    holds: bool
    property: str = None
    witness: dict = field(default_factory=dict)

    def __bool__(self) -> bool:
        return self.holds


def certify_monotone_submodular(f: ValueOracle, max_n: int = CERTIFY_MAX_GROUND) -> Certificate:
    """
    Exhaustively checks f(∅) = 0, monotonicity and submodularity.

    Local forms suffice: f(S+v) >= f(S) for single additions, and
    f(S+v) + f(S+w) >= f(S+v+w) + f(S) for every S and v, w outside S.
    """
    if max_n > CERTIFY_MAX_GROUND:
        raise EnumerationLimitError(f"certification is capped at {CERTIFY_MAX_GROUND} elements, asked for {max_n}")
    n = f.ground_size
    if n > max_n:
        raise EnumerationLimitError(f"ground set of {n} elements exceeds certification limit {max_n}")
    values = [f.value(from_mask(mask)) for mask in range(1 << n)]
    if values[0] != 0:
        return Certificate(False, "normalized", {"set": [], "value": values[0]})
    for mask in range(1 << n):
        for v in range(n):
            if mask >> v & 1:
                continue
            with_v = mask | 1 << v
            if values[with_v] < values[mask]:
                return Certificate(False, "monotone", {"set": sorted(from_mask(mask)), "element": v})
            for w in range(v + 1, n):
                if mask >> w & 1:
                    continue
                if values[with_v] + values[mask | 1 << w] < values[with_v | 1 << w] + values[mask]:
                    return Certificate(
                        False,
                        "submodular",
                        {"set": sorted(from_mask(mask)), "elements": [v, w]},
                    )
    return Certificate(True)
