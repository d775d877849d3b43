import pytest

from prunesched import TimingSample, generate_instance, Objective, scaling_ratio, time_solver


def sample(ns):
    return TimingSample("x", tuple(ns), 0, 1)


def test_time_solver_contract():
    i = generate_instance(50, 2, 3, 3, "loose", 1)
    s = time_solver(i, Objective.WCT, "pruned", 3)
    assert s.repetitions == 3 and s.min_ns <= s.median_ns
    assert s.value == time_solver(i, Objective.WCT, "classic", 3).value
    assert "pruned" in s.config_id
    with pytest.raises(ValueError):
        time_solver(i, Objective.WCT, "pruned", 2)


def test_order_statistics():
    s = sample([5_000_000, 1_000_000, 3_000_000, 2_000_000])
    assert s.min_ns == 1_000_000 and s.median_ns == 2_000_000
    assert s.median_ms == 2 and s.min_ms == 1


def test_scaling_ratio():
    assert scaling_ratio([sample([10] * 3), sample([10] * 3)]) == [1.0]
    assert scaling_ratio([sample([10] * 3), sample([20] * 3), sample([40] * 3)]) == [2.0, 2.0]
    with pytest.raises(ValueError):
        scaling_ratio([sample([1] * 3)])


def test_time_interleaved():
    from prunesched import time_interleaved
    a = generate_instance(40, 2, 3, 3, "loose", 1)
    b = generate_instance(80, 2, 3, 3, "loose", 2)
    samples = time_interleaved([(a, Objective.WCT, "pruned"), (b, Objective.WCT, "classic")], 3)
    assert [s.repetitions for s in samples] == [3, 3]
    assert samples[1].value == time_solver(b, Objective.WCT, "pruned", 3).value
    assert "n=80" in samples[1].config_id
    with pytest.raises(ValueError):
        time_interleaved([(a, Objective.WCT, "pruned")], 1)
