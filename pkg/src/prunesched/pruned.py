"""Pruned Lawler-Moore dynamic programs.

Some optimal proper schedule keeps every machine within 4·p_max² of the
prefix-average load at every step (and, pairwise, within 4·p_max² of each
other), so states outside that band are dropped.

WCT / LMAX state: D_i = m·load_i - P(J_j) for machines 1..m-1, kept in
[-4·m·p_max², 4·m·p_max²]. Completion times are (P(J_j) + D_i)/m, integral
by construction.

WTARDY state: Δ_i = load_i - load_m for machines 1..m-1, kept in
[-4·p_max², 4·p_max²], plus the absolute scheduled load of machine m.
"""

from __future__ import annotations

import numpy as np

from . import _dp
from ._dp import DPResult, Engine
from .instance import Instance, Objective


def deviation_bound(instance: Instance) -> int:
    return 4 * instance.machines * instance.pmax ** 2


def gap_bound(instance: Instance) -> int:
    return 4 * instance.pmax ** 2


def _engine(instance: Instance, objective: Objective, p, d, prefix) -> Engine:
    m, n = instance.machines, instance.n
    if objective is Objective.WTARDY:
        k = m
        b = gap_bound(instance)
        shift = np.zeros((m + 1, k), dtype=np.int64)
        coef = np.zeros((m + 1, k), dtype=np.int64)
        for c in range(m - 1):
            shift[c, c] = 1
            coef[c, c] = 1
            coef[c, m - 1] = 1
        shift[m - 1, : m - 1] = -1
        shift[m - 1, m - 1] = 1
        coef[m - 1, m - 1] = 1
        pj_coef = np.zeros(m + 1, dtype=np.int64)
        discard = np.array([False] * m + [True])
        reach = np.minimum(prefix, b)
        cap = np.concatenate(([0], np.minimum(prefix[1:], d)))
        lo = np.zeros((n + 1, k), dtype=np.int64)
        size = np.zeros((n + 1, k), dtype=np.int64)
        lo[:, : m - 1] = -reach[:, None]
        size[:, : m - 1] = 2 * reach[:, None] + 1
        size[:, m - 1] = cap + 1
        return Engine(shift, coef, pj_coef, 1, discard, lo, size, tuple(range(m)) + (None,))
    k = m - 1
    bound = deviation_bound(instance)
    shift = -np.ones((m, k), dtype=np.int64)
    coef = np.zeros((m, k), dtype=np.int64)
    for c in range(k):
        shift[c, c] += m
        coef[c, c] = 1
    coef[m - 1, :] = -1
    pj_coef = np.ones(m, dtype=np.int64)
    lo_1 = -np.minimum(prefix, bound)
    hi_1 = np.minimum((m - 1) * prefix, bound)
    lo = np.repeat(lo_1[:, None], k, axis=1)
    size = np.repeat((hi_1 - lo_1 + 1)[:, None], k, axis=1)
    return Engine(shift, coef, pj_coef, m, np.zeros(m, dtype=bool), lo, size, tuple(range(m)))


def solve_pruned(instance: Instance, objective: Objective, keep_schedule: bool = True,
                 mutate: bool = False) -> DPResult:
    """Optimal value by the pruned recurrence.

    ``mutate`` adds 1 to every transition onto the first machine; it exists
    only so the verification harness can prove it notices a broken solver.
    """
    return _dp.run(instance, objective, _engine, keep_schedule, mutate)


def state_bound(instance: Instance, objective: Objective) -> int:
    """Ceiling on the stored states of any pruned layer."""
    m, pmax = instance.machines, instance.pmax
    if objective is Objective.WTARDY:
        return (8 * pmax ** 2 + 1) ** (m - 1) * (instance.total_p + 1)
    return (8 * m * pmax ** 2 + 1) ** (m - 1)
