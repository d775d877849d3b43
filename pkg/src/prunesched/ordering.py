"""Priority orderings: Smith's rule for weighted completion time, Jackson's rule (EDD) otherwise."""

from __future__ import annotations

import functools
from dataclasses import dataclass

from .instance import Instance, Job, Objective

SMITH = "smith"
JACKSON = "jackson"


@dataclass(frozen=True)
class PriorityOrder:
    """``permutation[k]`` is the 0-based index (into ``instance.jobs``) of the job at priority position k."""

    permutation: tuple[int, ...]
    rule: str

    def __len__(self) -> int:
        return len(self.permutation)

    def jobs(self, instance: Instance) -> list[Job]:
        return [instance.jobs[k] for k in self.permutation]


def rule_for(objective: Objective) -> str:
    return SMITH if objective is Objective.WCT else JACKSON


def _smith_cmp(a: Job, b: Job) -> int:
    # non-increasing w/p, compared as w_a * p_b vs w_b * p_a
    lhs, rhs = a.w * b.p, b.w * a.p
    return -1 if lhs > rhs else (1 if lhs < rhs else 0)


def priority_order(instance: Instance, objective: Objective) -> PriorityOrder:
    """Stable priority order; ties keep input order."""
    idx = range(instance.n)
    jobs = instance.jobs
    if objective is Objective.WCT:
        key = functools.cmp_to_key(lambda a, b: _smith_cmp(jobs[a], jobs[b]))
        perm = sorted(idx, key=key)
    else:
        perm = sorted(idx, key=lambda k: jobs[k].d)
    return PriorityOrder(tuple(perm), rule_for(objective))


def precedes(a: Job, b: Job, rule: str) -> bool:
    """True if ``a`` may be placed before ``b`` under ``rule`` (ties allowed)."""
    if rule == SMITH:
        return a.w * b.p >= b.w * a.p
    return a.d <= b.d
