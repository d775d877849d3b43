import os
import re
import subprocess
import sys
from pathlib import Path

import pytest

from prunesched.cli import main

GOLDEN = Path(__file__).parent / "golden"
SEEDS = (11, 22, 33)
OBJECTIVES = ("wct", "lmax", "wtardy")
ALGORITHMS = ("oracle", "classic", "pruned")


def gen_args(seed):
    return ["gen", "--n", "8", "--m", str(2 + seed % 2), "--pmax", "4", "--wmax", "5", "--due", "tight",
            "--seed", str(seed)]


def run(args, capsys):
    code = main(args)
    out, err = capsys.readouterr()
    return code, out, err


def mask_time(text):
    return re.sub(r"^time_ms \d+$", "time_ms *", text, flags=re.M)


def write(tmp_path, text, name="x.txt"):
    path = tmp_path / name
    path.write_text(text)
    return str(path)


def test_solve_tiny(tmp_path, capsys):
    code, out, _ = run(["solve", "--objective", "wct", "--algorithm", "pruned",
                        "--input", write(tmp_path, "machines 2\njob 1 1 0\njob 1 1 0\n")], capsys)
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "objective 2"
    assert re.fullmatch(r"states \d+ \d+", lines[1]) and re.fullmatch(r"time_ms \d+", lines[2])


def test_solve_oracle_lmax(tmp_path, capsys):
    code, out, _ = run(["solve", "--objective", "lmax", "--algorithm", "oracle",
                        "--input", write(tmp_path, "machines 1\njob 1 0 1\njob 1 0 2\n")], capsys)
    assert code == 0 and out.startswith("objective 0\n")


def test_solve_wtardy_schedule_ends_with_discarded(tmp_path, capsys):
    path = write(tmp_path, "machines 2\njob 2 1 2\njob 2 1 2\njob 2 1 2\n")
    code, out, _ = run(["solve", "--objective", "wtardy", "--algorithm", "classic", "--input", path,
                        "--emit-schedule"], capsys)
    lines = out.splitlines()
    assert code == 0 and lines[0] == "objective 1"
    assert lines[1].startswith("machine 1:") and lines[3].startswith("discarded:")
    assert lines[4].startswith("states ")


def test_solve_no_schedule(tmp_path, capsys):
    path = write(tmp_path, "machines 2\njob 1 1 0\n")
    code, out, _ = run(["solve", "--objective", "wct", "--input", path, "--no-schedule", "--emit-schedule"], capsys)
    assert code == 0 and "machine" not in out


def test_states_match_library(tmp_path, capsys):
    from prunesched import Objective, generate_instance, serialize_instance, solve_pruned
    instance = generate_instance(30, 2, 4, 5, "loose", 5)
    path = write(tmp_path, serialize_instance(instance))
    _, out, _ = run(["solve", "--objective", "lmax", "--input", path], capsys)
    res = solve_pruned(instance, Objective.LMAX)
    assert f"objective {res.value}\nstates {res.peak_states} {res.total_states}\n" in out


def test_exit_codes(tmp_path, capsys):
    bad = write(tmp_path, "machines 2\njob 0 4 5\n")
    code, _, err = run(["solve", "--objective", "wct", "--input", bad], capsys)
    assert code == 1 and "p must be ≥ 1 (line 2)" in err
    assert run(["solve", "--objective", "wct", "--input", str(tmp_path / "missing")], capsys)[0] == 1
    big = write(tmp_path, "machines 3\n" + "job 1 1 1\n" * 16)
    assert run(["solve", "--objective", "wct", "--algorithm", "oracle", "--input", big], capsys)[0] == 2
    with pytest.raises(SystemExit) as exc:
        main(["solve", "--objective", "nope", "--input", bad])
    assert exc.value.code == 1
    capsys.readouterr()


def test_internal_error_exit_code(tmp_path, capsys, monkeypatch):
    from prunesched import cli
    from prunesched._dp import DPInternalError

    def boom(*args, **kwargs):
        raise DPInternalError("broken")
    monkeypatch.setattr(cli, "solve", boom)
    path = write(tmp_path, "machines 1\njob 1 1 1\n")
    assert run(["solve", "--objective", "wct", "--input", path], capsys)[0] == 3


def test_gen_examples(capsys):
    args = ["gen", "--n", "1", "--m", "1", "--pmax", "1", "--wmax", "0", "--due", "loose", "--seed", "7"]
    code, out, _ = run(args, capsys)
    assert code == 0 and out == "machines 1\njob 1 0 1\n"
    assert run(args, capsys)[1] == out
    assert run(["gen", "--n", "0", "--m", "1", "--pmax", "1"], capsys)[0] == 1


def test_verify_pass_and_reproducible(capsys, monkeypatch):
    monkeypatch.setenv("PRUNESCHED_THREADS", "1")
    args = ["verify", "--trials", "12", "--n", "6,8", "--m", "2", "--pmax", "4", "--seed", "1"]
    code, out, _ = run(args, capsys)
    assert code == 0 and out.splitlines()[-1] == "PASS 12/12"
    assert run(args, capsys)[1] == out


def test_verify_self_test_fails(capsys, monkeypatch):
    monkeypatch.setenv("PRUNESCHED_THREADS", "1")
    code, out, _ = run(["verify", "--trials", "3", "--objective", "wct", "--self-test"], capsys)
    assert code == 1
    assert out.splitlines()[-1] == "FAIL 0/3"
    assert "machines 2\njob " in out


def test_bench_tsv(capsys):
    code, out, _ = run(["bench", "--n", "40,80", "--pmax", "3", "--reps", "3", "--tsv"], capsys)
    lines = out.splitlines()
    assert code == 0 and len(lines) == 1 + 4
    assert lines[0].split("\t") == ["n", "m", "pmax", "algorithm", "median_us", "peak_states"]
    assert [l.split("\t")[3] for l in lines[1:]] == ["classic", "pruned", "classic", "pruned"]
    pruned_peaks = {int(l.split("\t")[5]) for l in lines[1:] if "pruned" in l}
    assert max(pruned_peaks) <= 8 * 2 * 9 + 1


def test_bench_aligned(capsys):
    code, out, _ = run(["bench", "--n", "30", "--algorithm", "pruned", "--objective", "lmax"], capsys)
    lines = out.splitlines()
    assert code == 0 and len(lines) == 2 and len(set(map(len, lines))) == 1


@pytest.mark.parametrize("seed", SEEDS)
def test_golden_gen(seed, capsys):
    assert run(gen_args(seed), capsys)[1] == (GOLDEN / f"gen_seed{seed}.txt").read_text()


@pytest.mark.parametrize("seed", SEEDS)
@pytest.mark.parametrize("objective", OBJECTIVES)
@pytest.mark.parametrize("algorithm", ALGORITHMS)
def test_golden_solve(seed, objective, algorithm, capsys):
    code, out, _ = run(["solve", "--objective", objective, "--algorithm", algorithm,
                        "--input", str(GOLDEN / f"gen_seed{seed}.txt"), "--emit-schedule"], capsys)
    assert code == 0
    assert mask_time(out) == (GOLDEN / f"solve_seed{seed}_{objective}_{algorithm}.txt").read_text()


def test_module_entry_point_stdin():
    env = dict(os.environ, PRUNESCHED_THREADS="1")
    text = (GOLDEN / "gen_seed11.txt").read_text()
    proc = subprocess.run([sys.executable, "-m", "prunesched", "solve", "--objective", "wct", "--input", "-",
                           "--emit-schedule"], input=text, capture_output=True, text=True, env=env, check=False)
    assert proc.returncode == 0
    assert mask_time(proc.stdout) == (GOLDEN / "solve_seed11_wct_pruned.txt").read_text()
