"""Command line: ``solve``, ``verify``, ``bench`` and ``gen``.

Exit codes: 0 success, 1 parse/validation error or failed verification,
2 oracle enumeration cap exceeded, 3 internal assertion.
"""

from __future__ import annotations

import argparse
import os
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from typing import Optional, Sequence

from ._dp import DPInternalError
from .bench import time_solver
from .classic import index_space_bound, solve_classic
from .instance import (DUE_MODES, InstanceError, Objective, derive_seed, generate_instance,
                       parse_instance, serialize_instance)
from .oracle import OracleCapError, brute_force
from .pruned import solve_pruned, state_bound
from .schedule import evaluate, format_schedule
from .solvers import ALGORITHMS, solve
from .swap import apply_swap, completion_law_violations, imbalanced_schedule, verify_swap_optimality

EXIT_INPUT, EXIT_CAP, EXIT_INTERNAL = 1, 2, 3


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_INPUT, f"{self.prog}: error: {message}\n")


def _int_list(text: str) -> list[int]:
    try:
        return [int(t) for t in text.split(",")]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def workers() -> int:
    env = os.environ.get("PRUNESCHED_THREADS")
    if env:
        return max(1, int(env))
    return os.cpu_count() or 1


def cmd_solve(args) -> int:
    text = sys.stdin.read() if args.input == "-" else open(args.input, encoding="utf-8").read()
    instance = parse_instance(text)
    objective = Objective(args.objective)
    keep = not args.no_schedule
    start = time.perf_counter_ns()
    sol = solve(instance, objective, args.algorithm, keep_schedule=keep)
    elapsed_ms = (time.perf_counter_ns() - start) // 1_000_000
    if sol.schedule is not None and evaluate(sol.schedule, instance, objective) != sol.value:
        raise DPInternalError("reconstructed schedule does not reproduce the optimum")
    print(f"objective {sol.value}")
    if args.emit_schedule and sol.schedule is not None:
        for line in format_schedule(sol.schedule, instance, objective):
            print(line)
    print(f"states {sol.peak_states} {sol.total_states}")
    print(f"time_ms {elapsed_ms}")
    return 0


def _verify_trial(task) -> tuple[int, list[str], str]:
    """Run one verification trial; returns (trial, failure messages, reproducer text)."""
    trial, n, m, pmax, wmax, due, seed, objectives, self_test = task
    sub_seed = derive_seed(seed, trial)
    instance = generate_instance(n, m, pmax, wmax, due, sub_seed)
    failures = []
    for objective in objectives:
        try:
            expected = brute_force(instance, objective, keep_witnesses=False).value
        except OracleCapError:
            expected = None
        classic = solve_classic(instance, objective)
        pruned = solve_pruned(instance, objective, mutate=self_test)
        values = {"classic": classic.value, "pruned": pruned.value}
        if expected is not None:
            values["oracle"] = expected
        if len(set(values.values())) != 1:
            failures.append(f"{objective}: value mismatch {values}")
        for name, res in (("classic", classic), ("pruned", pruned)):
            if evaluate(res.schedule, instance, objective) != res.value:
                failures.append(f"{objective}: {name} schedule does not evaluate to its value")
        if max(pruned.layer_counts) > state_bound(instance, objective):
            failures.append(f"{objective}: pruned layer exceeds the state bound")
        if max(classic.layer_counts) > index_space_bound(instance, objective):
            failures.append(f"{objective}: classic layer exceeds the index space")
        inst2, sched, plan = imbalanced_schedule(objective, sub_seed, pmax=min(pmax, 4), machines=m)
        report = verify_swap_optimality(sched, plan, inst2, objective)
        laws = completion_law_violations(sched, plan, apply_swap(sched, plan, inst2), inst2)
        if not report.passed or laws:
            failures.append(f"{objective}: swap check failed {report} {laws}")
            failures.append(f"{objective}: swap instance (seed {sub_seed}) "
                            + serialize_instance(inst2).replace("\n", "; ").rstrip("; "))
    return trial, failures, serialize_instance(instance) if failures else ""


def cmd_verify(args) -> int:
    objectives = [Objective(args.objective)] if args.objective else list(Objective)
    dues = [args.due] if args.due else list(DUE_MODES)
    tasks = [(t, args.n[t % len(args.n)], args.m, args.pmax, args.wmax, dues[t % len(dues)],
              args.seed, objectives, args.self_test) for t in range(args.trials)]
    pool = workers()
    if pool > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=pool) as ex:
            results = list(ex.map(_verify_trial, tasks, chunksize=8))
    else:
        results = [_verify_trial(t) for t in tasks]
    passed = 0
    for trial, failures, reproducer in results:
        if not failures:
            passed += 1
            continue
        print(f"# trial {trial} failed")
        for line in failures:
            print(f"# {line}")
        sys.stdout.write(reproducer)
    verdict = "PASS" if passed == len(tasks) else "FAIL"
    print(f"{verdict} {passed}/{len(tasks)}")
    return 0 if verdict == "PASS" else EXIT_INPUT


def cmd_bench(args) -> int:
    objective = Objective(args.objective)
    algorithms = args.algorithm or ["classic", "pruned"]
    header = ["n", "m", "pmax", "algorithm", "median_us", "peak_states"]
    rows = []
    for n in args.n:
        instance = generate_instance(n, args.m, args.pmax, args.wmax, args.due, derive_seed(args.seed, n))
        for alg in algorithms:
            sample = time_solver(instance, objective, alg, args.reps)
            rows.append([n, args.m, instance.pmax, alg, sample.median_ns // 1000, sample.peak_states])
    if args.tsv:
        print("\t".join(header))
        for row in rows:
            print("\t".join(str(v) for v in row))
    else:
        table = [header] + [[str(v) for v in row] for row in rows]
        widths = [max(len(r[c]) for r in table) for c in range(len(header))]
        for r in table:
            print("  ".join(v.rjust(wd) for v, wd in zip(r, widths)))
    return 0


def cmd_gen(args) -> int:
    try:
        instance = generate_instance(args.n, args.m, args.pmax, args.wmax, args.due, args.seed)
    except ValueError as exc:
        raise InstanceError(str(exc))
    sys.stdout.write(serialize_instance(instance))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="prunesched", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("solve", help="solve one instance file")
    p.add_argument("--objective", required=True, choices=[o.value for o in Objective])
    p.add_argument("--algorithm", default="pruned", choices=ALGORITHMS)
    p.add_argument("--input", required=True, help="instance file, or - for standard input")
    p.add_argument("--emit-schedule", action="store_true")
    p.add_argument("--no-schedule", action="store_true", help="value only, skip reconstruction")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("verify", help="cross-check oracle, classic and pruned on random instances")
    p.add_argument("--trials", type=int, default=100)
    p.add_argument("--n", type=_int_list, default=[8])
    p.add_argument("--m", type=int, default=2)
    p.add_argument("--pmax", type=int, default=4)
    p.add_argument("--wmax", type=int, default=5)
    p.add_argument("--due", choices=DUE_MODES, default=None, help="default: cycle through all modes")
    p.add_argument("--objective", choices=[o.value for o in Objective], default=None)
    p.add_argument("--seed", type=int, default=1)
    p.add_argument("--self-test", action="store_true", help="inject a cost mutation; must FAIL")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("bench", help="time classic vs pruned")
    p.add_argument("--n", type=_int_list, default=[1000, 2000, 4000])
    p.add_argument("--m", type=int, default=2)
    p.add_argument("--pmax", type=int, default=4)
    p.add_argument("--wmax", type=int, default=5)
    p.add_argument("--due", choices=DUE_MODES, default="loose")
    p.add_argument("--objective", choices=[o.value for o in Objective], default="wct")
    p.add_argument("--algorithm", choices=ALGORITHMS, action="append")
    p.add_argument("--reps", type=int, default=3)
    p.add_argument("--seed", type=int, default=1)
    p.add_argument("--tsv", action="store_true")
    p.set_defaults(func=cmd_bench)

    p = sub.add_parser("gen", help="print a random instance")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--pmax", type=int, required=True)
    p.add_argument("--wmax", type=int, default=0)
    p.add_argument("--due", choices=DUE_MODES, default="loose")
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_gen)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (InstanceError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except OracleCapError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAP
    except (DPInternalError, AssertionError) as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
