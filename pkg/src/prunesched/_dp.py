"""Layered forward dynamic program shared by the classic and pruned engines.

An engine is described by tables, one row per choice (machine 0..m-1, then
optionally "discard"):

* ``shift[c]``: state change per unit of processing time, new = old + p_j * shift[c]
* ``coef[c]``, ``pj_coef[c]``, ``denom``: completion time of the placed job,
  C = (coef[c] · new + pj_coef[c] * P(J_j)) / denom
* ``discard[c]``: the choice drops the job at cost w_j

Layer j lives in a dense box ``lo[j] <= state < lo[j] + size[j]``; cells
outside the box are dropped, which is how the pruned engine prunes. Absent
states hold ``INF``.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np
from numba import njit

from .instance import Instance, Objective
from .ordering import PriorityOrder, priority_order
from .schedule import ProperSchedule

INF = np.iinfo(np.int64).max
NEG = np.iinfo(np.int64).min

OBJ_CODE = {Objective.WCT: 0, Objective.LMAX: 1, Objective.WTARDY: 2}

# largest choice table the reconstruction buffer may occupy, in cells (1 byte each)
MAX_CHOICE_CELLS = 1 << 31


class DPInternalError(AssertionError):
    pass


@njit(cache=True)
def _sweep(p, w, d, prefix, lo, size, shift, coef, pj_coef, denom, discard, objective,
           keep, choices, offsets, counts, mutate):
    n = p.shape[0]
    k = lo.shape[1]
    nc = shift.shape[0]
    cells = np.ones(n + 1, dtype=np.int64)
    for j in range(n + 1):
        for a in range(k):
            cells[j] *= size[j, a]
    cap = cells.max()
    cur = np.full(cap, INF, dtype=np.int64)
    nxt = np.full(cap, INF, dtype=np.int64)
    tie = np.zeros(cap, dtype=np.int8)
    x = np.zeros(k, dtype=np.int64)
    stride = np.ones(k, dtype=np.int64)
    delta = np.zeros((nc, k), dtype=np.int64)
    jump = np.zeros(nc, dtype=np.int64)
    const = np.zeros(nc, dtype=np.int64)
    cur[0] = NEG if objective == 1 else 0
    counts[0] = 1
    for j in range(1, n + 1):
        pj = p[j - 1]
        wj = w[j - 1]
        dj = d[j - 1]
        for a in range(k - 1, -1, -1):
            stride[a] = 1 if a == k - 1 else stride[a + 1] * size[j, a + 1]
        for c in range(nc):
            jump[c] = 0
            const[c] = pj_coef[c] * prefix[j]
            for a in range(k):
                delta[c, a] = pj * shift[c, a]
                jump[c] += delta[c, a] * stride[a]
                const[c] += coef[c, a] * delta[c, a]
        for t in range(cells[j]):
            nxt[t] = INF
        # odometer over the old box; base is the old cell's flat index in the new box
        base = 0
        for a in range(k):
            x[a] = lo[j - 1, a]
            base += (x[a] - lo[j, a]) * stride[a]
        for src in range(cells[j - 1]):
            v = cur[src]
            if v != INF:
                for c in range(nc):
                    inside = True
                    num = const[c]
                    for a in range(k):
                        off = x[a] + delta[c, a] - lo[j, a]
                        if off < 0 or off >= size[j, a]:
                            inside = False
                            break
                        num += coef[c, a] * x[a]
                    if not inside:
                        continue
                    if discard[c]:
                        cand = v + wj
                    else:
                        comp = num
                        if denom != 1:
                            if num % denom != 0:
                                raise AssertionError("non-integral completion time")
                            comp = num // denom
                        if comp < pj:
                            raise AssertionError("completion time below processing time")
                        if objective == 0:
                            cand = v + wj * comp
                        elif objective == 1:
                            late = comp - dj
                            cand = v if v > late else late
                        else:
                            if comp > dj:
                                continue
                            cand = v
                    if mutate and c == 0:
                        cand += 1
                    dst = base + jump[c]
                    cur_v = nxt[dst]
                    if cand < cur_v or (cand == cur_v and c < tie[dst]):
                        nxt[dst] = cand
                        tie[dst] = c
            a = k - 1
            while a >= 0:
                x[a] += 1
                base += stride[a]
                if x[a] < lo[j - 1, a] + size[j - 1, a]:
                    break
                x[a] = lo[j - 1, a]
                base -= size[j - 1, a] * stride[a]
                a -= 1
        count = 0
        off_j = offsets[j]
        for t in range(cells[j]):
            if nxt[t] != INF:
                count += 1
                if keep:
                    choices[off_j + t] = tie[t]
            elif keep:
                choices[off_j + t] = -1
        counts[j] = count
        cur, nxt = nxt, cur
    return cur[: cells[n]].copy()


@dataclass(frozen=True)
class Engine:
    """Transition tables and per-layer boxes for one (engine, objective, instance) triple."""

    shift: np.ndarray
    coef: np.ndarray
    pj_coef: np.ndarray
    denom: int
    discard: np.ndarray
    lo: np.ndarray
    size: np.ndarray
    choice_machine: tuple  # machine index per choice, None for discard


@dataclass
class DPResult:
    value: int
    schedule: ProperSchedule | None
    layer_counts: tuple[int, ...]
    final_state: tuple[int, ...] = field(default=())

    @property
    def peak_states(self) -> int:
        return max(self.layer_counts)

    @property
    def total_states(self) -> int:
        return sum(self.layer_counts)


def layer_stats(result: DPResult) -> tuple[int, ...]:
    """Stored-state count per layer, layer 0 (the empty prefix) first."""
    return result.layer_counts


def job_arrays(instance: Instance, order: PriorityOrder):
    jobs = order.jobs(instance)
    p = np.array([j.p for j in jobs], dtype=np.int64)
    w = np.array([j.w for j in jobs], dtype=np.int64)
    d = np.array([j.d for j in jobs], dtype=np.int64)
    prefix = np.concatenate(([0], np.cumsum(p))).astype(np.int64)
    return p, w, d, prefix


def run(instance: Instance, objective: Objective, build_engine, keep_schedule: bool = True,
        mutate: bool = False) -> DPResult:
    order = priority_order(instance, objective)
    p, w, d, prefix = job_arrays(instance, order)
    eng: Engine = build_engine(instance, objective, p, d, prefix)
    n = instance.n
    cells = np.prod(eng.size, axis=1, dtype=np.int64) if eng.size.shape[1] else np.ones(n + 1, dtype=np.int64)
    offsets = np.concatenate(([0], np.cumsum(cells))).astype(np.int64)
    if keep_schedule:
        if offsets[-1] > MAX_CHOICE_CELLS:
            raise MemoryError("choice table too large for schedule reconstruction; run value-only")
        choices = np.empty(offsets[-1], dtype=np.int8)
    else:
        choices = np.empty(0, dtype=np.int8)
    counts = np.zeros(n + 1, dtype=np.int64)
    try:
        final = _sweep(p, w, d, prefix, eng.lo, eng.size, eng.shift, eng.coef, eng.pj_coef,
                       eng.denom, eng.discard, OBJ_CODE[objective], keep_schedule, choices,
                       offsets, counts, mutate)
    except AssertionError as exc:
        raise DPInternalError(str(exc)) from exc
    if final.size == 0 or final.min() == INF:
        raise DPInternalError("no feasible final state")
    best = int(np.argmin(final))
    value = int(final[best])
    state = _decode(best, eng.lo[n], eng.size[n])
    schedule = None
    if keep_schedule:
        schedule = _reconstruct(eng, order, instance.machines, p, choices, offsets, state)
    return DPResult(value, schedule, tuple(int(c) for c in counts), tuple(int(s) for s in state))


def _decode(flat: int, lo: np.ndarray, size: np.ndarray) -> np.ndarray:
    coords = np.zeros(len(size), dtype=np.int64)
    for a in range(len(size) - 1, -1, -1):
        coords[a] = lo[a] + flat % size[a]
        flat //= size[a]
    return coords


def _encode(coords: np.ndarray, lo: np.ndarray, size: np.ndarray) -> int:
    flat = 0
    for a in range(len(size)):
        off = int(coords[a] - lo[a])
        if not 0 <= off < size[a]:
            raise DPInternalError("reconstruction left the layer box")
        flat = flat * int(size[a]) + off
    return flat


def _reconstruct(eng: Engine, order: PriorityOrder, machines: int, p, choices, offsets, state) -> ProperSchedule:
    n = len(p)
    assignment: list[int | None] = [None] * n
    coords = np.array(state, dtype=np.int64)
    for j in range(n, 0, -1):
        flat = _encode(coords, eng.lo[j], eng.size[j])
        c = int(choices[offsets[j] + flat])
        if c < 0:
            raise DPInternalError(f"no choice recorded at layer {j}")
        assignment[j - 1] = eng.choice_machine[c]
        coords = coords - p[j - 1] * eng.shift[c]
    if np.any(coords != 0):
        raise DPInternalError("reconstruction did not return to the empty state")
    return ProperSchedule(order, tuple(assignment), machines)
