"""Exact happy nucleolus of set covering games.

Thin wrapper over the C++ core. Rational results come back as
``fractions.Fraction``.
"""

from fractions import Fraction

from . import _core
from ._core import (
    CapacityError,
    HnError,
    InfeasibleError,
    Instance,
    InstanceError,
    InternalError,
    ParseError,
    UnderdeterminedError,
    c_star,
    chain,
    check,
    random_instance,
)

__all__ = [
    "CapacityError",
    "HnError",
    "InfeasibleError",
    "Instance",
    "InstanceError",
    "InternalError",
    "ParseError",
    "UnderdeterminedError",
    "SolveResult",
    "c_star",
    "chain",
    "check",
    "excess_table",
    "fractional_cover_value",
    "happy_nucleolus_bruteforce",
    "integral_cover_value",
    "random_instance",
    "solve",
    "triangle",
    "unhappy_nucleolus_bruteforce",
    "vrp",
]


class SolveResult:
    """Allocation, LP value and stage log of one solve."""

    def __init__(self, raw):
        self.values = [Fraction(v) for v in raw["values"]]
        self.lp_value = Fraction(raw["lp_value"])
        self.stages = [(Fraction(eps), list(fixed)) for eps, fixed in raw["stages"]]
        self.pairs = [(list(c), i) for c, i in raw["pairs"]]

    def __repr__(self):
        return f"SolveResult(values={self.values}, lp_value={self.lp_value})"


def _fractions(values):
    return [Fraction(v) for v in values]


def solve(instance, pairs=None):
    """Happy nucleolus over C*, or over an explicit list of (coalition, set_index) pairs."""
    if pairs is None:
        return SolveResult(_core.solve(instance))
    return SolveResult(_core.solve_with_pairs(instance, [(list(c), int(i)) for c, i in pairs]))


def fractional_cover_value(instance):
    return Fraction(_core.fractional_cover_value(instance))


def integral_cover_value(instance):
    return Fraction(_core.integral_cover_value(instance))


def happy_nucleolus_bruteforce(instance):
    return _fractions(_core.happy_nucleolus_bruteforce(instance))


def unhappy_nucleolus_bruteforce(instance):
    return _fractions(_core.unhappy_nucleolus_bruteforce(instance))


def excess_table(instance, values):
    """Rows (coalition, cover_cost, excess) for every nonempty coalition."""
    raw = _core.excess_table(instance, [str(Fraction(v)) for v in values])
    return [(list(c), Fraction(cost), Fraction(e)) for c, cost, e in raw]


def triangle(c1, c2, c3):
    return _core.triangle(str(Fraction(c1)), str(Fraction(c2)), str(Fraction(c3)))


def vrp(spec):
    """Set cover instance of a VRP spec given as a dict or a JSON string."""
    import json

    return _core.vrp(spec if isinstance(spec, str) else json.dumps(spec))
