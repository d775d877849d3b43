"""The equal-sum exchange between an overloaded and an underloaded machine.

At step j the donor h (the machine running job j) is ahead of the receiver i
by at least 4·p_max², and i still has at least 2·p_max jobs to run after the
prefix. The last 2·p_max prefix jobs of h (J_H) and the first 2·p_max future
jobs of i (J_I) contain equal-sum subsets J_H' and J_I'; swapping them gives
the intermediate schedule σ', and re-sorting every machine by priority gives
the proper schedule σ''.
"""

from __future__ import annotations

from dataclasses import dataclass

from .combinatorics import equal_sum_submultisets
from .instance import Instance, Objective, SplitMix64
from .ordering import priority_order
from .schedule import (OrderedSchedule, ProperSchedule, ScheduleError, completion_times,
                       evaluate)


class StalePlanError(ScheduleError):
    pass


@dataclass(frozen=True)
class SwapPlan:
    step: int  # j*: the prefix J_{j*} covers positions 0..step-1
    donor: int
    receiver: int
    t_receiver: int
    t_donor: int
    jh: tuple[int, ...]
    ji: tuple[int, ...]
    jh_prime: tuple[int, ...]
    ji_prime: tuple[int, ...]
    jh_second: tuple[int, ...]
    ji_second: tuple[int, ...]
    assignment: tuple[int | None, ...]  # snapshot of the schedule the plan was built for

    @property
    def gap(self) -> int:
        return self.t_donor - self.t_receiver


@dataclass(frozen=True)
class SwapOutcome:
    sigma_prime: OrderedSchedule
    sigma_double_prime: ProperSchedule


@dataclass(frozen=True)
class SwapReport:
    original: int
    intermediate: int
    final: int
    discarded_unchanged: bool

    @property
    def passed(self) -> bool:
        return self.final <= self.intermediate <= self.original and self.discarded_unchanged


def find_admissible_swap(schedule: ProperSchedule, step: int, instance: Instance) -> SwapPlan | None:
    """Plan for the swap at ``step`` (1 ≤ step ≤ n), or None if no receiver qualifies.

    Among qualifying receivers the one with the largest load gap wins, then the lowest index.
    """
    if not 1 <= step <= len(schedule.assignment):
        raise ValueError(f"step must lie in [1, {len(schedule.assignment)}]")
    h = schedule.assignment[step - 1]
    if h is None:
        return None
    jobs = schedule.order.jobs(instance)
    pmax = instance.pmax
    need = 2 * pmax
    loads = [0] * schedule.machines
    future = [0] * schedule.machines
    for k, a in enumerate(schedule.assignment):
        if a is None:
            continue
        if k < step:
            loads[a] += jobs[k].p
        else:
            future[a] += 1
    best = None
    for i in range(schedule.machines):
        gap = loads[h] - loads[i]
        if i == h or future[i] < need or gap < 4 * pmax * pmax:
            continue
        if best is None or gap > loads[h] - loads[best]:
            best = i
    if best is None:
        return None
    i = best
    donor_prefix = [k for k in range(step) if schedule.assignment[k] == h]
    jh = tuple(donor_prefix[-need:])
    ji = tuple([k for k in range(step, len(jobs)) if schedule.assignment[k] == i][:need])
    witness = equal_sum_submultisets([jobs[k].p for k in jh], [jobs[k].p for k in ji], pmax)
    jh_prime = tuple(jh[s] for s in witness.pick_a)
    ji_prime = tuple(ji[s] for s in witness.pick_b)
    return SwapPlan(
        step=step, donor=h, receiver=i, t_receiver=loads[i], t_donor=loads[h],
        jh=jh, ji=ji, jh_prime=jh_prime, ji_prime=ji_prime,
        jh_second=tuple(k for k in jh if k not in jh_prime),
        ji_second=tuple(k for k in ji if k not in ji_prime),
        assignment=schedule.assignment,
    )


def _replace_block(seq: tuple[int, ...], block: tuple[int, ...], new: tuple[int, ...]) -> tuple[int, ...]:
    start = seq.index(block[0])
    if seq[start:start + len(block)] != block:
        raise StalePlanError("swap block is not contiguous in the schedule")
    return seq[:start] + new + seq[start + len(block):]


def apply_swap(schedule: ProperSchedule, plan: SwapPlan, instance: Instance) -> SwapOutcome:
    if plan.assignment != schedule.assignment:
        raise StalePlanError("plan was built for a different schedule")
    h, i = plan.donor, plan.receiver
    seqs = list(schedule.sequences())
    seqs[h] = _replace_block(seqs[h], plan.jh, plan.jh_second + plan.ji_prime)
    seqs[i] = _replace_block(seqs[i], plan.ji, plan.jh_prime + plan.ji_second)
    sigma_prime = OrderedSchedule(schedule.order, tuple(seqs), schedule.discarded)
    return SwapOutcome(sigma_prime, sigma_prime.to_proper())


def verify_swap_optimality(schedule: ProperSchedule, plan: SwapPlan, instance: Instance,
                           objective: Objective) -> SwapReport:
    """Evaluate σ, σ' and σ''; the report passes iff f(σ'') ≤ f(σ') ≤ f(σ)."""
    outcome = apply_swap(schedule, plan, instance)
    return SwapReport(
        original=evaluate(schedule, instance, objective),
        intermediate=evaluate(outcome.sigma_prime, instance, objective),
        final=evaluate(outcome.sigma_double_prime, instance, objective),
        discarded_unchanged=outcome.sigma_double_prime.discarded == schedule.discarded,
    )


def completion_law_violations(schedule: ProperSchedule, plan: SwapPlan, outcome: SwapOutcome,
                              instance: Instance) -> list[str]:
    """Check how the swap moves completion times; an empty list means every law holds.

    Outside J_H ∪ J_I nothing changes, J_H jobs finish no later, J_I jobs no
    earlier, and every swapped job finishes by C_{j*} = t_h in σ'. Also checks
    the J_I-before-J_H separation and per-machine load conservation.
    """
    before = completion_times(schedule, instance).times
    after = completion_times(outcome.sigma_prime, instance).times
    jobs = schedule.order.jobs(instance)
    jh, ji = set(plan.jh), set(plan.ji)
    problems = []
    for k, (c, c2) in enumerate(zip(before, after)):
        if k in jh:
            if c2 > c:
                problems.append(f"J_H job at position {k} finishes later: {c} -> {c2}")
        elif k in ji:
            if c2 < c:
                problems.append(f"J_I job at position {k} finishes earlier: {c} -> {c2}")
        elif c != c2:
            problems.append(f"untouched job at position {k} moved: {c} -> {c2}")
        if (k in jh or k in ji) and c2 > plan.t_donor:
            problems.append(f"swapped job at position {k} finishes after C_j* = {plan.t_donor}")
    p_jh = sum(jobs[k].p for k in plan.jh)
    p_ji = sum(jobs[k].p for k in plan.ji)
    if plan.t_receiver + p_ji > plan.t_donor - p_jh:
        problems.append("J_I does not finish before J_H starts")
    if before[plan.step - 1] != plan.t_donor:
        problems.append("C_j* differs from t_h")
    for seq_a, seq_b in zip(schedule.sequences(), outcome.sigma_prime.sequences):
        if sum(jobs[k].p for k in seq_a) != sum(jobs[k].p for k in seq_b):
            problems.append("final machine load changed")
    weighted = [sum(jobs[k].p * t for k, t in enumerate(ts) if t is not None) for ts in (before, after)]
    if weighted[0] != weighted[1]:
        problems.append("Σ p_j C_j changed")
    return problems


def imbalanced_schedule(objective: Objective, seed: int, pmax: int | None = None,
                        machines: int | None = None, attempts: int = 1000
                        ) -> tuple[Instance, ProperSchedule, SwapPlan]:
    """Random proper schedule with an admissible swap at some step.

    Early priority positions pile onto one donor machine, later ones favour
    a receiver. WTARDY instances get due dates that keep every scheduled job
    on time and leave the due dates non-decreasing in input order, so the
    priority order is the input order.
    """
    rng = SplitMix64(seed)
    for _ in range(attempts):
        pm = pmax if pmax is not None else rng.uniform(1, 4)
        m = machines if machines is not None else rng.uniform(2, 3)
        donor, receiver = rng.uniform(0, m - 1), rng.uniform(0, m - 2)
        receiver += receiver >= donor
        head = 4 * pm * pm + rng.uniform(0, 2 * pm)
        tail = 2 * pm * m + rng.uniform(0, 3 * pm)
        n = head + tail
        p = [rng.uniform(1, pm) for _ in range(n)]
        w = [rng.uniform(0, 6) for _ in range(n)]

        def pick(k: int):
            favour = donor if k < head else receiver
            if rng.uniform(0, 99) < 80:
                return favour
            return rng.uniform(0, m - 1)

        if objective is Objective.WTARDY:
            assignment = [None if rng.uniform(0, 9) == 0 else pick(k) for k in range(n)]
            loads = [0] * m
            due, d = [], 0
            for k, a in enumerate(assignment):
                if a is not None:
                    loads[a] += p[k]
                    d = max(d, loads[a] + rng.uniform(0, pm))
                due.append(d)
            instance = Instance.from_lists(m, p, w, due)
        else:
            d = [rng.uniform(1, max(1, sum(p) // m)) for _ in range(n)]
            instance = Instance.from_lists(m, p, w, d)
            assignment = [pick(k) for k in range(n)]
        order = priority_order(instance, objective)
        schedule = ProperSchedule(order, tuple(assignment), m)
        steps = list(range(1, n + 1))
        for s in range(len(steps) - 1, 0, -1):
            t = rng.uniform(0, s)
            steps[s], steps[t] = steps[t], steps[s]
        for step in steps:
            plan = find_admissible_swap(schedule, step, instance)
            if plan is not None:
                return instance, schedule, plan
    raise RuntimeError("no admissible swap found; raise attempts")

