"""Schedule representations, objective evaluation, balance profiles and leveling.

Jobs inside schedules are identified by their *priority position*: position k
is the job ``instance.jobs[order.permutation[k]]``. A step j (0 ≤ j ≤ n) is the
prefix made of positions 0..j-1. Machines are 0-based.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Sequence, Union

from .instance import Instance, Objective
from .ordering import PriorityOrder, rule_for


class ScheduleError(ValueError):
    pass


class InfeasibleScheduleError(ScheduleError):
    """A scheduled job finishes after its due date under the discard formulation."""

    def __init__(self, job_index: int, completion: int, due: int):
        self.job_index = job_index
        super().__init__(f"job {job_index} is scheduled but late: C={completion} > d={due}")


@dataclass(frozen=True)
class ProperSchedule:
    """Machine per priority position (``None`` = discarded); each machine runs its jobs in priority order."""

    order: PriorityOrder
    assignment: tuple[int | None, ...]
    machines: int

    def __post_init__(self):
        object.__setattr__(self, "assignment", tuple(self.assignment))
        if len(self.assignment) != len(self.order):
            raise ScheduleError("assignment length does not match the priority order")
        for a in self.assignment:
            if a is not None and not 0 <= a < self.machines:
                raise ScheduleError(f"machine {a} out of range for m={self.machines}")

    @classmethod
    def from_machine_lists(cls, order: PriorityOrder, lists: Sequence[Sequence[int]],
                           discarded: Sequence[int] = ()) -> "ProperSchedule":
        assignment: list[int | None] = [None] * len(order)
        seen = set(discarded)
        for i, positions in enumerate(lists):
            for k in positions:
                if k in seen:
                    raise ScheduleError(f"position {k} assigned twice")
                seen.add(k)
                assignment[k] = i
        if len(seen) != len(order):
            raise ScheduleError("some positions are neither scheduled nor discarded")
        return cls(order, tuple(assignment), len(lists))

    def sequences(self) -> tuple[tuple[int, ...], ...]:
        seqs: list[list[int]] = [[] for _ in range(self.machines)]
        for k, a in enumerate(self.assignment):
            if a is not None:
                seqs[a].append(k)
        return tuple(tuple(s) for s in seqs)

    @property
    def discarded(self) -> tuple[int, ...]:
        return tuple(k for k, a in enumerate(self.assignment) if a is None)

    def to_ordered(self) -> "OrderedSchedule":
        return OrderedSchedule(self.order, self.sequences(), self.discarded)


@dataclass(frozen=True)
class OrderedSchedule:
    """Explicit per-machine sequences of positions; need not respect the priority order."""

    order: PriorityOrder
    sequences: tuple[tuple[int, ...], ...]
    discarded: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "sequences", tuple(tuple(s) for s in self.sequences))
        object.__setattr__(self, "discarded", tuple(self.discarded))
        seen: set[int] = set()
        for k in (k for seq in self.sequences for k in seq):
            if k in seen:
                raise ScheduleError(f"position {k} appears twice")
            seen.add(k)
        for k in self.discarded:
            if k in seen:
                raise ScheduleError(f"position {k} is both scheduled and discarded")
            seen.add(k)
        if seen != set(range(len(self.order))):
            raise ScheduleError("every position must be scheduled exactly once or discarded")

    @property
    def machines(self) -> int:
        return len(self.sequences)

    def to_proper(self) -> ProperSchedule:
        """Re-sort every machine by priority position."""
        return ProperSchedule.from_machine_lists(self.order, self.sequences, self.discarded)


AnySchedule = Union[ProperSchedule, OrderedSchedule]


@dataclass(frozen=True)
class CompletionProfile:
    times: tuple[int | None, ...]  # by priority position; None if discarded


@dataclass(frozen=True)
class BalanceProfile:
    """``loads[j][i]`` is the load of machine i over the first j positions (discarded jobs excluded)."""

    loads: tuple[tuple[int, ...], ...]

    def delta(self, h: int, i: int, j: int) -> int:
        return self.loads[j][h] - self.loads[j][i]

    def step_gap(self, j: int) -> int:
        row = self.loads[j]
        return max(row) - min(row)

    @property
    def max_abs_delta(self) -> int:
        return max(self.step_gap(j) for j in range(len(self.loads)))

    @property
    def worst_step(self) -> int:
        gaps = [self.step_gap(j) for j in range(len(self.loads))]
        return gaps.index(max(gaps))


def _as_ordered(schedule: AnySchedule) -> OrderedSchedule:
    if isinstance(schedule, ProperSchedule):
        return schedule.to_ordered()
    return schedule


def completion_times(schedule: AnySchedule, instance: Instance) -> CompletionProfile:
    ordered = _as_ordered(schedule)
    jobs = ordered.order.jobs(instance)
    times: list[int | None] = [None] * len(jobs)
    for seq in ordered.sequences:
        t = 0
        for k in seq:
            t += jobs[k].p
            times[k] = t
    return CompletionProfile(tuple(times))


def evaluate(schedule: AnySchedule, instance: Instance, objective: Objective) -> int:
    """Objective value of a schedule.

    WTARDY uses the discard formulation: the value is the weight of the
    discarded jobs, and every scheduled job must be on time.
    """
    ordered = _as_ordered(schedule)
    jobs = ordered.order.jobs(instance)
    times = completion_times(ordered, instance).times
    if objective is Objective.WTARDY:
        for k, c in enumerate(times):
            if c is not None and c > jobs[k].d:
                raise InfeasibleScheduleError(jobs[k].index, c, jobs[k].d)
        return sum(jobs[k].w for k in ordered.discarded)
    if ordered.discarded:
        raise ScheduleError(f"discarded jobs are only meaningful for {Objective.WTARDY}")
    if objective is Objective.WCT:
        return sum(job.w * c for job, c in zip(jobs, times))
    return max(c - job.d for job, c in zip(jobs, times))


def balance_profile(schedule: ProperSchedule, instance: Instance) -> BalanceProfile:
    jobs = schedule.order.jobs(instance)
    row = [0] * schedule.machines
    loads = [tuple(row)]
    for job, a in zip(jobs, schedule.assignment):
        if a is not None:
            row[a] += job.p
        loads.append(tuple(row))
    return BalanceProfile(tuple(loads))


def machine_loads(schedule: AnySchedule, instance: Instance) -> tuple[int, ...]:
    ordered = _as_ordered(schedule)
    jobs = ordered.order.jobs(instance)
    return tuple(sum(jobs[k].p for k in seq) for seq in ordered.sequences)


def leveling_moves(schedule: ProperSchedule, instance: Instance) -> Iterator[tuple[ProperSchedule, int, int, int]]:
    """Yield ``(schedule, position, from, to)`` after each leveling move.

    Each move takes the last job of a maximum-load machine to a minimum-load
    machine (lowest index on ties) while the final load gap exceeds p_max.
    """
    pmax = instance.pmax
    current = schedule
    while True:
        loads = machine_loads(current, instance)
        h = loads.index(max(loads))
        i = loads.index(min(loads))
        if loads[h] - loads[i] <= pmax:
            return
        last = max(k for k, a in enumerate(current.assignment) if a == h)
        assignment = list(current.assignment)
        assignment[last] = i
        current = ProperSchedule(current.order, tuple(assignment), current.machines)
        yield current, last, h, i


def levelize(schedule: ProperSchedule, instance: Instance, objective: Objective) -> ProperSchedule:
    """Leveled proper schedule whose objective is no larger than the input's.

    Discarded jobs (WTARDY) stay discarded and do not count towards loads.
    """
    if schedule.order.rule != rule_for(objective):
        raise ScheduleError(f"schedule ordered by {schedule.order.rule}, objective {objective} needs {rule_for(objective)}")
    result = schedule
    for result, *_ in leveling_moves(schedule, instance):
        pass
    return result


def format_schedule(schedule: ProperSchedule, instance: Instance, objective: Objective) -> list[str]:
    """Text lines ``machine <i>: <job indices>`` (1-based), plus ``discarded: ...`` for WTARDY."""
    jobs = schedule.order.jobs(instance)
    lines = []
    for i, seq in enumerate(schedule.sequences(), start=1):
        lines.append(f"machine {i}: " + " ".join(str(jobs[k].index) for k in seq))
    if objective is Objective.WTARDY:
        lines.append("discarded: " + " ".join(str(jobs[k].index) for k in schedule.discarded))
    return [line.rstrip() for line in lines]
