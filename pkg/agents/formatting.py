from fractions import Fraction


def jsonable(value):
    """Fractions become ints when integral and ``"p/q"`` strings otherwise; containers are converted recursively."""
    if isinstance(value, Fraction):
        return value.numerator if value.denominator == 1 else str(value)
    if isinstance(value, dict):
        return {str(k): jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple, set, frozenset)):
        items = sorted(value) if isinstance(value, (set, frozenset)) else value
        return [jsonable(v) for v in items]
    return value


def one_based(solutions) -> list[list[int]]:
    return [sorted(v + 1 for v in x) for x in solutions]


def verdict_dict(verdict) -> dict:
    return {"name": verdict.name, "holds": verdict.holds, "applicable": verdict.applicable, "details": jsonable(verdict.details)}
