"""One entry point over the three algorithms."""

from __future__ import annotations

from dataclasses import dataclass

from .classic import solve_classic
from .instance import Instance, Objective
from .oracle import brute_force
from .pruned import solve_pruned
from .schedule import ProperSchedule

ALGORITHMS = ("oracle", "classic", "pruned")


@dataclass(frozen=True)
class Solution:
    value: int
    schedule: ProperSchedule | None
    peak_states: int
    total_states: int
    layer_counts: tuple[int, ...] = ()


def solve(instance: Instance, objective: Objective, algorithm: str = "pruned",
          keep_schedule: bool = True) -> Solution:
    """Solve with ``algorithm``.

    For the oracle, which has no layers, both state figures report the
    number of enumerated assignments.
    """
    if algorithm == "oracle":
        res = brute_force(instance, objective, keep_witnesses=keep_schedule)
        schedule = res.witnesses[0] if keep_schedule else None
        return Solution(res.value, schedule, res.enumerated, res.enumerated)
    if algorithm == "classic":
        res = solve_classic(instance, objective, keep_schedule)
    elif algorithm == "pruned":
        res = solve_pruned(instance, objective, keep_schedule)
    else:
        raise ValueError(f"unknown algorithm {algorithm!r}")
    return Solution(res.value, res.schedule, res.peak_states, res.total_states, res.layer_counts)
