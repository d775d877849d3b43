"""Equal-sum submultisets of two small-integer multisets, by the pigeonhole construction."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence


@dataclass(frozen=True)
class EqualSumWitness:
    pick_a: tuple[int, ...]  # 0-based indices into A
    pick_b: tuple[int, ...]  # 0-based indices into B
    total: int


def greedy_differences(a: Sequence[int], b: Sequence[int], steps: int) -> tuple[list[int], list[bool]]:
    """Differences Σ(A_i) - Σ(B_i) for i = 0..steps and which side grew at each step.

    Step i adds a[i-1] when Σ(A_{i-1}) ≤ Σ(B_{i-1}), otherwise b[i-1].
    """
    diffs = [0]
    took_a: list[bool] = []
    for i in range(steps):
        if diffs[-1] <= 0:
            took_a.append(True)
            diffs.append(diffs[-1] + a[i])
        else:
            took_a.append(False)
            diffs.append(diffs[-1] - b[i])
    return diffs, took_a


def equal_sum_submultisets(a: Sequence[int], b: Sequence[int], bound: int) -> EqualSumWitness:
    """Nonempty ``A' ⊆ A``, ``B' ⊆ B`` with equal sums, given elements in [1, bound] and |A|, |B| ≥ 2·bound.

    Only the first 2·bound elements of each list are used. Among the colliding
    prefix pairs (i, j) the one with smallest j, then smallest i, is returned.
    """
    if bound < 1:
        raise ValueError("bound must be ≥ 1")
    steps = 2 * bound
    if len(a) < steps or len(b) < steps:
        raise ValueError(f"need at least {steps} elements in each multiset")
    for x in (*a[:steps], *b[:steps]):
        if not 1 <= x <= bound:
            raise ValueError(f"element {x} outside [1, {bound}]")
    diffs, took_a = greedy_differences(a, b, steps)
    first_seen: dict[int, int] = {}
    for j, diff in enumerate(diffs):
        assert -bound < diff <= bound, "pigeonhole range violated"
        if diff in first_seen:
            i = first_seen[diff]
            break
        first_seen[diff] = j
    else:  # pragma: no cover - excluded by the pigeonhole principle
        raise AssertionError("no collision among prefix differences")
    pick_a = tuple(s for s in range(i, j) if took_a[s])
    pick_b = tuple(s for s in range(i, j) if not took_a[s])
    total = sum(a[s] for s in pick_a)
    assert pick_a and pick_b and total == sum(b[s] for s in pick_b)
    return EqualSumWitness(pick_a, pick_b, total)
