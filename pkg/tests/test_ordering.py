import itertools

from hypothesis import given, strategies as st

from prunesched import Objective, priority_order
from prunesched.ordering import JACKSON, SMITH, precedes, rule_for

from conftest import inst


def one_based(order):
    return [k + 1 for k in order.permutation]


def test_smith_by_efficiency():
    order = priority_order(inst(2, [2, 1, 3], [4, 1, 9]), Objective.WCT)
    assert one_based(order) == [3, 1, 2] and order.rule == SMITH


def test_jackson_stable_ties():
    order = priority_order(inst(2, [1, 1, 1], d=[5, 2, 2]), Objective.LMAX)
    assert one_based(order) == [2, 3, 1] and order.rule == JACKSON


def test_all_tied_is_identity():
    assert one_based(priority_order(inst(2, [1, 1], [1, 1]), Objective.WCT)) == [1, 2]


def test_wtardy_uses_edd():
    assert rule_for(Objective.WTARDY) == JACKSON
    assert one_based(priority_order(inst(1, [1, 1], d=[3, 1]), Objective.WTARDY)) == [2, 1]


def test_zero_weight_jobs_go_last():
    order = priority_order(inst(1, [3, 1, 2], [0, 2, 0]), Objective.WCT)
    assert one_based(order) == [2, 1, 3]


jobs_strategy = st.lists(st.tuples(st.integers(1, 6), st.integers(0, 6), st.integers(0, 20)), min_size=1, max_size=12)


@given(jobs_strategy, st.sampled_from(list(Objective)))
def test_order_is_sorted_and_stable(rows, objective):
    p, w, d = zip(*rows)
    instance = inst(2, p, w, d)
    order = priority_order(instance, objective)
    assert sorted(order.permutation) == list(range(instance.n))
    jobs = order.jobs(instance)
    for (ka, a), (kb, b) in itertools.combinations(zip(order.permutation, jobs), 2):
        assert precedes(a, b, order.rule)
        if precedes(b, a, order.rule):  # tie: input order kept
            assert ka < kb


@given(jobs_strategy)
def test_smith_matches_float_ratio_on_distinct_keys(rows):
    p, w, d = zip(*rows)
    instance = inst(1, p, w, d)
    order = priority_order(instance, Objective.WCT)
    ratios = [j.w / j.p for j in order.jobs(instance)]
    assert all(x >= y - 1e-12 for x, y in zip(ratios, ratios[1:]))
