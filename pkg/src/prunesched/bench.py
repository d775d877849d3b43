"""Wall-clock timing of solver runs and doubling-ratio summaries."""

from __future__ import annotations

import statistics
import time
from dataclasses import dataclass
from typing import Sequence

from .instance import Instance, Objective
from .solvers import solve


@dataclass(frozen=True)
class TimingSample:
    config_id: str
    wall_ns: tuple[int, ...]  # timed runs, warm-up excluded
    value: int
    peak_states: int

    @property
    def repetitions(self) -> int:
        return len(self.wall_ns)

    @property
    def median_ns(self) -> int:
        return statistics.median_low(self.wall_ns)

    @property
    def min_ns(self) -> int:
        return min(self.wall_ns)

    @property
    def median_ms(self) -> int:
        return self.median_ns // 1_000_000

    @property
    def min_ms(self) -> int:
        return self.min_ns // 1_000_000


def time_solver(instance: Instance, objective: Objective, algorithm: str, repetitions: int = 3,
                keep_schedule: bool = False, config_id: str | None = None) -> TimingSample:
    """Run once to warm up, then ``repetitions`` timed runs on the same instance."""
    if repetitions < 3:
        raise ValueError("need at least 3 repetitions")
    warm = solve(instance, objective, algorithm, keep_schedule)
    times = []
    for _ in range(repetitions):
        start = time.perf_counter_ns()
        sol = solve(instance, objective, algorithm, keep_schedule)
        times.append(time.perf_counter_ns() - start)
        if sol.value != warm.value:
            raise AssertionError(f"solver value changed between runs: {warm.value} != {sol.value}")
    if config_id is None:
        config_id = f"{algorithm}/{objective}/n={instance.n}/m={instance.machines}/pmax={instance.pmax}"
    return TimingSample(config_id, tuple(times), warm.value, warm.peak_states)


def time_interleaved(configs: Sequence[tuple[Instance, Objective, str]], repetitions: int = 3,
                     keep_schedule: bool = False) -> list[TimingSample]:
    """Time several configurations round-robin: one warm-up each, then ``repetitions`` rounds.

    Each round runs every configuration once, so slow stretches on a shared
    machine spread over all samples instead of skewing one of them.
    """
    if repetitions < 3:
        raise ValueError("need at least 3 repetitions")
    warm = [solve(inst, obj, alg, keep_schedule) for inst, obj, alg in configs]
    times: list[list[int]] = [[] for _ in configs]
    for _ in range(repetitions):
        for k, (inst, obj, alg) in enumerate(configs):
            start = time.perf_counter_ns()
            sol = solve(inst, obj, alg, keep_schedule)
            times[k].append(time.perf_counter_ns() - start)
            if sol.value != warm[k].value:
                raise AssertionError(f"solver value changed between runs: {warm[k].value} != {sol.value}")
    return [TimingSample(f"{alg}/{obj}/n={inst.n}/m={inst.machines}/pmax={inst.pmax}", tuple(ts),
                         w.value, w.peak_states)
            for (inst, obj, alg), ts, w in zip(configs, times, warm)]


def scaling_ratio(samples: Sequence[TimingSample]) -> list[float]:
    """Consecutive median-time ratios of samples ordered by growing n."""
    if len(samples) < 2:
        raise ValueError("need at least two samples")
    return [b.median_ns / max(a.median_ns, 1) for a, b in zip(samples, samples[1:])]
