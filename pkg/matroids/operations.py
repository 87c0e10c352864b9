from collections.abc import Iterable
from dataclasses import dataclass, field

from errors import EnumerationLimitError, InputError, NotAMatroidError
from matroids.oracles import EXPLICIT_MAX_GROUND, ConstraintOracle, ExplicitMatroid, PartitionMatroid, from_mask


def _require_matroid(M: ConstraintOracle, operation: str) -> None:
    if not M.is_matroid:
        raise NotAMatroidError(f"{operation} is only defined for matroid oracles, got {M.label}")


def rank_of(M: ConstraintOracle, x: Iterable[int]) -> int:
    _require_matroid(M, "rank")
    kept = set()
    for v in sorted(set(x)):
        if M.is_independent(kept | {v}):
            kept.add(v)
    return len(kept)


def closure_of(M: ConstraintOracle, x: Iterable[int]) -> frozenset[int]:
    _require_matroid(M, "closure")
    x = frozenset(x)
    if not M.is_independent(x):
        raise InputError(f"closure needs an independent set, got {sorted(x)}")
    spanned = {v for v in range(M.ground_size) if v not in x and not M.is_independent(x | {v})}
    return x | frozenset(spanned)


def feasible_extensions(C: ConstraintOracle, z: Iterable[int]) -> frozenset[int]:
    z = frozenset(z)
    return frozenset(u for u in range(C.ground_size) if u not in z and C.is_independent(z | {u}))


def has_loops(M: ConstraintOracle) -> bool:
    return any(not M.is_independent((v,)) for v in range(M.ground_size))


@dataclass
class AxiomReport:
    holds: bool
    axiom: str = None
    witness: tuple = field(default_factory=tuple)

    def __bool__(self) -> bool:
        return self.holds


def axioms_check(M: ExplicitMatroid) -> AxiomReport:
    """
    Checks the three independence axioms by enumeration and returns the first violation.

    The exchange axiom is only tested for pairs whose sizes differ by one; together
    with the hereditary axiom this covers all pairs.
    """
    if M.ground_size > EXPLICIT_MAX_GROUND:
        raise EnumerationLimitError(f"axiom check limited to {EXPLICIT_MAX_GROUND} elements, got {M.ground_size}")
    family = M.masks
    if 0 not in family:
        return AxiomReport(False, "empty", ())
    by_size: dict[int, list[int]] = {}
    for mask in sorted(family):
        by_size.setdefault(bin(mask).count("1"), []).append(mask)
    for size in sorted(by_size):
        for mask in by_size[size]:
            rest = mask
            while rest:
                bit = rest & -rest
                rest ^= bit
                if mask ^ bit not in family:
                    return AxiomReport(False, "hereditary", (sorted(from_mask(mask ^ bit)), sorted(from_mask(mask))))
    for size in sorted(by_size):
        for small in by_size[size]:
            for large in by_size.get(size + 1, []):
                extra = large & ~small
                found = False
                while extra:
                    bit = extra & -extra
                    extra ^= bit
                    if small | bit in family:
                        found = True
                        break
                if not found:
                    return AxiomReport(False, "exchange", (sorted(from_mask(small)), sorted(from_mask(large))))
    return AxiomReport(True)


def parse_partition_spec(text: str, ground_size: int = None) -> PartitionMatroid:
    """
    Parses one block per line as ``cap: id id ...`` with 1-based element ids.
    Blank lines and lines starting with ``#`` or ``%`` are ignored.
    """
    blocks, caps = [], []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line[0] in "#%":
            continue
        head, sep, tail = line.partition(":")
        if not sep:
            raise InputError(f"line {lineno}: expected 'cap: id id ...', got {raw!r}")
        try:
            cap = int(head)
            ids = [int(tok) - 1 for tok in tail.split()]
        except ValueError:
            raise InputError(f"line {lineno}: non-integer token in {raw!r}")
        if cap < 0 or any(v < 0 for v in ids):
            raise InputError(f"line {lineno}: caps must be >= 0 and ids >= 1")
        caps.append(cap)
        blocks.append(ids)
    if not blocks:
        raise InputError("partition specification contains no blocks")
    n = ground_size if ground_size is not None else max((v + 1 for b in blocks for v in b), default=0)
    return PartitionMatroid.from_blocks(blocks, caps, n)


def load_partition_file(path: str, ground_size: int = None) -> PartitionMatroid:
    with open(path, encoding="utf-8") as f:
        return parse_partition_spec(f.read(), ground_size)
