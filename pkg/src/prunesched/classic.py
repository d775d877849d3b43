"""Classic Lawler-Moore dynamic programs over absolute machine loads.

WCT and LMAX track the loads of machines 1..m-1 (the last one is implied by
the prefix sum); WTARDY tracks all m loads because discarded jobs make the
scheduled total variable.
"""

from __future__ import annotations

import numpy as np

from . import _dp
from ._dp import DPResult, Engine
from .instance import Instance, Objective


def _engine(instance: Instance, objective: Objective, p, d, prefix) -> Engine:
    m, n = instance.machines, instance.n
    if objective is Objective.WTARDY:
        k = m
        eye = np.eye(k, dtype=np.int64)
        shift = np.vstack([eye, np.zeros((1, k), dtype=np.int64)])
        coef = shift.copy()
        discard = np.array([False] * m + [True])
        cap = np.concatenate(([0], np.minimum(prefix[1:], d)))
        size = np.repeat((cap + 1)[:, None], k, axis=1)
        machines = tuple(range(m)) + (None,)
    else:
        k = m - 1
        eye = np.eye(k, dtype=np.int64)
        shift = np.vstack([eye, np.zeros((1, k), dtype=np.int64)])
        coef = np.vstack([eye, -np.ones((1, k), dtype=np.int64)])
        discard = np.zeros(m, dtype=bool)
        size = np.repeat((prefix + 1)[:, None], k, axis=1)
        machines = tuple(range(m))
    pj_coef = np.zeros(len(shift), dtype=np.int64)
    if objective is not Objective.WTARDY:
        pj_coef[-1] = 1
    lo = np.zeros((n + 1, k), dtype=np.int64)
    return Engine(shift, coef, pj_coef, 1, discard, lo, size.astype(np.int64), machines)


def solve_classic(instance: Instance, objective: Objective, keep_schedule: bool = True) -> DPResult:
    """Optimal value (and schedule unless ``keep_schedule`` is false) by the unpruned recurrence."""
    return _dp.run(instance, objective, _engine, keep_schedule)


def index_space_bound(instance: Instance, objective: Objective) -> int:
    """Size of the classic state index space: (P+1)^m for WTARDY, (P+1)^(m-1) otherwise."""
    k = instance.machines if objective is Objective.WTARDY else instance.machines - 1
    return (instance.total_p + 1) ** k
