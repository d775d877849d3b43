"""Exhaustive reference solver for tiny instances.

Every assignment of priority-ordered jobs to machines (plus "discard" for
WTARDY) is enumerated in mixed-radix order, position 0 most significant, and
evaluated directly. No pruning of any kind.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .instance import Instance, Objective
from .ordering import priority_order
from .schedule import ProperSchedule

ENUMERATION_CAP = 10**7
WITNESS_CAP = 10**5
CHUNK = 1 << 16


class OracleCapError(ValueError):
    pass


@dataclass(frozen=True)
class OracleResult:
    value: int
    witnesses: tuple[ProperSchedule, ...]  # optimal assignments, at most WITNESS_CAP of them
    enumerated: int
    balanced_witness_exists: bool | None = None


def _radix(instance: Instance, objective: Objective) -> int:
    return instance.machines + (objective is Objective.WTARDY)


def _chunks(instance: Instance, objective: Objective, chunk: int = CHUNK):
    """Yield (digits, values, feasible, max_gap) for consecutive blocks of assignments."""
    m, n = instance.machines, instance.n
    radix = _radix(instance, objective)
    total = radix ** n
    if total > ENUMERATION_CAP:
        raise OracleCapError(f"{radix}^{n} = {total} assignments exceed the cap of {ENUMERATION_CAP}")
    order = priority_order(instance, objective)
    jobs = order.jobs(instance)
    p = np.array([j.p for j in jobs], dtype=np.int64)
    w = np.array([j.w for j in jobs], dtype=np.int64)
    d = np.array([j.d for j in jobs], dtype=np.int64)
    place = radix ** np.arange(n - 1, -1, -1, dtype=np.int64)
    for start in range(0, total, chunk):
        codes = np.arange(start, min(start + chunk, total), dtype=np.int64)
        digits = (codes[:, None] // place[None, :]) % radix
        # loads[i, r, k]: load of machine i after positions 0..k
        loads = np.stack([np.cumsum(np.where(digits == i, p, 0), axis=1) for i in range(m)])
        machine = np.minimum(digits, m - 1)
        completion = np.take_along_axis(loads, machine[None, :, :], axis=0)[0]
        scheduled = digits < m
        if objective is Objective.WCT:
            values = (w * completion).sum(axis=1)
            feasible = np.ones(len(codes), dtype=bool)
        elif objective is Objective.LMAX:
            values = (completion - d).max(axis=1)
            feasible = np.ones(len(codes), dtype=bool)
        else:
            values = np.where(scheduled, 0, w).sum(axis=1)
            feasible = ~np.any(scheduled & (completion > d), axis=1)
        gap = (loads.max(axis=0) - loads.min(axis=0)).max(axis=1)
        yield digits, values, feasible, gap


def _assignment(row, m: int) -> tuple[int | None, ...]:
    return tuple(int(a) if a < m else None for a in row)


def brute_force(instance: Instance, objective: Objective, keep_witnesses: bool = True,
                balance_bound: int | None = None) -> OracleResult:
    """Minimum over all assignments; infeasible WTARDY assignments are skipped.

    With ``balance_bound`` set, also decides whether some optimal assignment
    keeps every pairwise prefix load gap within the bound (streamed, so the
    witness cap does not affect the answer).
    """
    m = instance.machines
    order = priority_order(instance, objective)
    best = None
    balanced = False
    witnesses: list[tuple] = []
    enumerated = 0
    for digits, values, feasible, gap in _chunks(instance, objective):
        enumerated += len(values)
        if not feasible.any():
            continue
        low = int(values[feasible].min())
        if best is None or low < best:
            best, balanced = low, False
            witnesses = []
        if low != best:
            continue
        optimal = feasible & (values == best)
        if balance_bound is not None and not balanced:
            balanced = bool(np.any(optimal & (gap <= balance_bound)))
        if keep_witnesses and len(witnesses) < WITNESS_CAP:
            witnesses.extend(_assignment(r, m) for r in digits[optimal][: WITNESS_CAP - len(witnesses)])
    if best is None:  # pragma: no cover - discarding everything is always feasible
        raise AssertionError("no feasible assignment")
    return OracleResult(best, tuple(ProperSchedule(order, a, m) for a in witnesses), enumerated,
                        balanced if balance_bound is not None else None)


def balanced_optimum_exists(instance: Instance, objective: Objective, bound: int | None = None) -> bool:
    """True iff some optimal assignment keeps every pairwise prefix load gap ≤ ``bound``.

    ``bound`` defaults to 4·p_max². For WTARDY, loads count scheduled jobs only.
    """
    if bound is None:
        bound = 4 * instance.pmax ** 2
    return bool(brute_force(instance, objective, keep_witnesses=False, balance_bound=bound).balanced_witness_exists)
