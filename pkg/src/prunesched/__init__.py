"""Lawler-Moore dynamic programs for Pm||ΣwC, Pm||Lmax and Pm||ΣwU, classic and pruned."""

from ._dp import DPInternalError, DPResult, layer_stats
from .bench import TimingSample, scaling_ratio, time_interleaved, time_solver
from .classic import index_space_bound, solve_classic
from .combinatorics import EqualSumWitness, equal_sum_submultisets
from .instance import (Instance, InstanceError, Job, Objective, generate_instance,
                       parse_instance, serialize_instance)
from .oracle import OracleCapError, OracleResult, balanced_optimum_exists, brute_force
from .ordering import PriorityOrder, priority_order
from .pruned import solve_pruned, state_bound
from .schedule import (BalanceProfile, CompletionProfile, InfeasibleScheduleError,
                       OrderedSchedule, ProperSchedule, ScheduleError, balance_profile,
                       completion_times, evaluate, levelize)
from .solvers import ALGORITHMS, Solution, solve
from .swap import (StalePlanError, SwapOutcome, SwapPlan, SwapReport, apply_swap,
                   find_admissible_swap, verify_swap_optimality)

__all__ = [
    "ALGORITHMS", "BalanceProfile", "CompletionProfile", "DPInternalError", "DPResult",
    "EqualSumWitness", "InfeasibleScheduleError", "Instance", "InstanceError", "Job", "Objective",
    "OracleCapError", "OracleResult", "OrderedSchedule", "PriorityOrder", "ProperSchedule",
    "ScheduleError", "Solution", "StalePlanError", "SwapOutcome", "SwapPlan", "SwapReport",
    "TimingSample", "apply_swap", "balance_profile", "balanced_optimum_exists", "brute_force",
    "completion_times", "equal_sum_submultisets", "evaluate", "find_admissible_swap",
    "generate_instance", "index_space_bound", "layer_stats", "levelize", "parse_instance",
    "priority_order", "scaling_ratio", "serialize_instance", "solve", "solve_classic",
    "solve_pruned", "state_bound", "time_interleaved", "time_solver", "verify_swap_optimality",
]
