import itertools

import pytest
from hypothesis import HealthCheck, settings

from prunesched import Instance, Objective, ProperSchedule, priority_order

settings.register_profile("default", deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")

ALL_OBJECTIVES = list(Objective)


def inst(m, p, w=None, d=None):
    return Instance.from_lists(m, p, w, d)


def all_proper_schedules(instance, objective):
    """Every proper schedule, discards included for WTARDY."""
    order = priority_order(instance, objective)
    choices = list(range(instance.machines))
    if objective is Objective.WTARDY:
        choices.append(None)
    for assignment in itertools.product(choices, repeat=instance.n):
        yield ProperSchedule(order, assignment, instance.machines)


@pytest.fixture(params=ALL_OBJECTIVES, ids=str)
def objective(request):
    return request.param


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for key in sorted(RESULTS):
            terminalreporter.write_line(RESULTS[key])
