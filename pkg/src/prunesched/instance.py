"""Jobs, instances, the instance file format and the seeded instance generator."""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterable

INT64_MAX = 2**63 - 1

DUE_MODES = ("tight", "loose", "common")


class Objective(enum.Enum):
    WCT = "wct"  # total weighted completion time
    LMAX = "lmax"  # maximum lateness
    WTARDY = "wtardy"  # weighted number of tardy jobs

    def __str__(self) -> str:
        return self.value


class InstanceError(ValueError):
    """Raised for malformed or out-of-range instance data.

    ``line`` is the 1-based line number in the source text, when there is one.
    """

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"{message} (line {line})"
        super().__init__(message)


@dataclass(frozen=True)
class Job:
    index: int  # 1-based ordinal in file order
    p: int
    w: int
    d: int

    def __post_init__(self):
        if self.p < 1:
            raise InstanceError("p must be ≥ 1")
        if self.w < 0:
            raise InstanceError("w must be ≥ 0")
        if self.d < 0:
            raise InstanceError("d must be ≥ 0")


def _objective_bound(n: int, total_p: int, wmax: int) -> int:
    return n * total_p * wmax


@dataclass(frozen=True)
class Instance:
    machines: int
    jobs: tuple[Job, ...]

    def __post_init__(self):
        object.__setattr__(self, "jobs", tuple(self.jobs))
        if self.machines < 1:
            raise InstanceError("machines must be ≥ 1")
        if not self.jobs:
            raise InstanceError("instance has no jobs")
        if _objective_bound(self.n, self.total_p, self.wmax) > INT64_MAX:
            raise InstanceError("n·P·w_max exceeds the signed 64-bit objective range")

    @property
    def n(self) -> int:
        return len(self.jobs)

    @property
    def total_p(self) -> int:
        return sum(job.p for job in self.jobs)

    @property
    def pmax(self) -> int:
        return max(job.p for job in self.jobs)

    @property
    def wmax(self) -> int:
        return max(job.w for job in self.jobs)

    @classmethod
    def from_lists(cls, machines: int, p: Iterable[int], w: Iterable[int] | None = None,
                   d: Iterable[int] | None = None) -> "Instance":
        """Build an instance from parallel lists; missing weights default to 1, due dates to 0."""
        p = list(p)
        w = [1] * len(p) if w is None else list(w)
        d = [0] * len(p) if d is None else list(d)
        if not (len(p) == len(w) == len(d)):
            raise InstanceError("p, w and d must have equal lengths")
        jobs = tuple(Job(k + 1, pk, wk, dk) for k, (pk, wk, dk) in enumerate(zip(p, w, d)))
        return cls(machines, jobs)


def _parse_uint(token: str, what: str, line: int) -> int:
    if not token.isdigit() or not token.isascii():
        raise InstanceError(f"malformed {what} {token!r}", line)
    return int(token)


def parse_instance(text: str) -> Instance:
    """Parse the line-oriented instance format.

    Blank lines and lines starting with ``#`` are ignored. The first remaining
    line must be ``machines <m>``; every following one is ``job <p> <w> <d>``.
    Jobs keep file order.
    """
    machines = None
    jobs: list[Job] = []
    n = total_p = wmax = 0
    lineno = 0
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.rstrip()
        if not line or line.lstrip().startswith("#"):
            continue
        tokens = line.split(" ")
        if machines is None:
            if tokens[0] != "machines":
                raise InstanceError("missing 'machines <m>' header", lineno)
            if len(tokens) != 2:
                raise InstanceError("malformed machines line, expected 'machines <m>'", lineno)
            machines = _parse_uint(tokens[1], "machine count", lineno)
            if machines < 1:
                raise InstanceError("machines must be ≥ 1", lineno)
            continue
        if tokens[0] != "job" or len(tokens) != 4:
            raise InstanceError("malformed job line, expected 'job <p> <w> <d>'", lineno)
        p, w, d = (_parse_uint(t, name, lineno) for t, name in zip(tokens[1:], ("p", "w", "d")))
        if p < 1:
            raise InstanceError("p must be ≥ 1", lineno)
        n, total_p, wmax = n + 1, total_p + p, max(wmax, w)
        if _objective_bound(n, total_p, wmax) > INT64_MAX:
            raise InstanceError("n·P·w_max exceeds the signed 64-bit objective range", lineno)
        jobs.append(Job(len(jobs) + 1, p, w, d))
    if machines is None:
        raise InstanceError("missing 'machines <m>' header", max(lineno, 1))
    if not jobs:
        raise InstanceError("instance has no jobs", max(lineno, 1))
    return Instance(machines, tuple(jobs))


def serialize_instance(instance: Instance) -> str:
    lines = [f"machines {instance.machines}"]
    lines += [f"job {j.p} {j.w} {j.d}" for j in instance.jobs]
    return "\n".join(lines) + "\n"


class SplitMix64:
    """SplitMix64 generator (Steele, Lea, Flood 2014).

    state += 0x9E3779B97F4A7C15, then the output mix
    z = (z ^ z >> 30) * 0xBF58476D1CE4E5B9; z = (z ^ z >> 27) * 0x94D049BB133111EB;
    z ^ z >> 31, all modulo 2**64.
    """

    MASK = (1 << 64) - 1

    def __init__(self, seed: int):
        self.state = seed & self.MASK

    def next_u64(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & self.MASK
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & self.MASK
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & self.MASK
        return z ^ (z >> 31)

    def uniform(self, lo: int, hi: int) -> int:
        """Uniform integer in [lo, hi], unbiased via rejection of the top remainder."""
        span = hi - lo + 1
        limit = (1 << 64) - ((1 << 64) % span)
        while True:
            x = self.next_u64()
            if x < limit:
                return lo + x % span


def generate_instance(n: int, m: int, pmax: int, wmax: int, due_mode: str = "loose",
                      seed: int = 0) -> Instance:
    """Seeded random instance.

    Draw order from one SplitMix64 stream: all p_j in [1, pmax], then all w_j in
    [0, wmax], then due dates. ``tight`` draws d_j in [1, ceil(P/m)], ``loose``
    in [1, P]; ``common`` sets every d_j = ceil(P/(2m)) without drawing.
    """
    if n < 1 or m < 1 or pmax < 1 or wmax < 0:
        raise ValueError("need n ≥ 1, m ≥ 1, pmax ≥ 1, wmax ≥ 0")
    if due_mode not in DUE_MODES:
        raise ValueError(f"due_mode must be one of {DUE_MODES}")
    rng = SplitMix64(seed)
    p = [rng.uniform(1, pmax) for _ in range(n)]
    w = [rng.uniform(0, wmax) for _ in range(n)]
    total = sum(p)
    if due_mode == "tight":
        hi = -(-total // m)
        d = [rng.uniform(1, hi) for _ in range(n)]
    elif due_mode == "loose":
        d = [rng.uniform(1, total) for _ in range(n)]
    else:
        d = [-(-total // (2 * m))] * n
    return Instance.from_lists(m, p, w, d)


def derive_seed(*parts: int) -> int:
    """Fold integers into one 64-bit seed by chaining SplitMix64 outputs."""
    state = 0
    for part in parts:
        state = SplitMix64(state ^ (part & SplitMix64.MASK)).next_u64()
    return state
