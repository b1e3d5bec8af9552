import os

import pytest

from crosslab.classes import parse_class_spec
from crosslab.graphs import complete_bipartite, complete_graph, petersen_graph
from crosslab.harness import build_table
from crosslab.solver import crossing_number

# Budget (planarity tests per solver call) used for the n <= 8 tables.
# Large enough that every level with at most 21 edges is solved exactly;
# the handful of rows it cannot certify are asserted explicitly in the
# tests that consume these fixtures.
TABLE_BUDGET = 2_000_000


def pytest_collection_modifyitems(config, items):
    run_slow = os.environ.get("CROSSLAB_RUN_SLOW")
    run_k7 = os.environ.get("CROSSLAB_RUN_K7")
    skip_slow = pytest.mark.skip(reason="set CROSSLAB_RUN_SLOW=1 to run")
    skip_k7 = pytest.mark.skip(reason="set CROSSLAB_RUN_K7=1 to run")
    for item in items:
        if "slow" in item.keywords and not run_slow:
            item.add_marker(skip_slow)
        if "k7" in item.keywords and not run_k7:
            item.add_marker(skip_k7)


@pytest.fixture(scope="session")
def k5_cert():
    value, cert = crossing_number(complete_graph(5))
    assert value == 1
    return cert


@pytest.fixture(scope="session")
def k6_cert():
    value, cert = crossing_number(complete_graph(6))
    assert value == 3
    return cert


@pytest.fixture(scope="session")
def k33_cert():
    value, cert = crossing_number(complete_bipartite(3, 3))
    assert value == 1
    return cert


@pytest.fixture(scope="session")
def k44_cert():
    value, cert = crossing_number(complete_bipartite(4, 4))
    assert value == 4
    return cert


@pytest.fixture(scope="session")
def petersen_cert():
    value, cert = crossing_number(petersen_graph())
    assert value == 2
    return cert


@pytest.fixture(scope="session")
def table_all8():
    return build_table(parse_class_spec("all"), 8, budget=TABLE_BUDGET)


@pytest.fixture(scope="session")
def table_bip8():
    return build_table(parse_class_spec("bipartite"), 8, budget=TABLE_BUDGET)
