import pytest

from prunesched import Objective, OracleCapError, balanced_optimum_exists, brute_force, evaluate

from conftest import all_proper_schedules, inst

WCT, LMAX, WTARDY = Objective.WCT, Objective.LMAX, Objective.WTARDY


def naive_optimum(instance, objective):
    best = None
    for s in all_proper_schedules(instance, objective):
        try:
            v = evaluate(s, instance, objective)
        except ValueError:
            continue
        best = v if best is None else min(best, v)
    return best


def test_examples():
    assert brute_force(inst(2, [1, 1], [1, 1]), WCT).value == 2
    assert brute_force(inst(1, [1, 1], d=[1, 2]), LMAX).value == 0
    assert brute_force(inst(2, [2, 2, 2], [1, 1, 1], [2, 2, 2]), WTARDY).value == 1


def test_witnesses_are_optimal():
    i = inst(2, [2, 1, 1], [2, 1, 1])
    res = brute_force(i, WCT)
    assert res.value == 7 and res.enumerated == 8
    assert res.witnesses and all(evaluate(s, i, WCT) == 7 for s in res.witnesses)


@pytest.mark.parametrize("seed", range(40))
def test_vectorized_matches_naive_loop(objective, seed):
    from prunesched import generate_instance
    i = generate_instance(1 + seed % 6, 2 + seed % 2, 3, 4, ("tight", "loose", "common")[seed % 3], seed)
    assert brute_force(i, objective, keep_witnesses=False).value == naive_optimum(i, objective)


def test_cap():
    with pytest.raises(OracleCapError):
        brute_force(inst(3, [1] * 15), WCT)


def test_balanced_unit_jobs():
    i = inst(2, [1] * 6, [1] * 6, [3] * 6)
    for objective in Objective:
        assert balanced_optimum_exists(i, objective, 1)


def test_single_job_cannot_balance_with_zero_bound():
    assert not balanced_optimum_exists(inst(2, [1]), WCT, 0)
    assert balanced_optimum_exists(inst(2, [1]), WCT)
