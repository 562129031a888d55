import itertools

import pytest
from hypothesis import settings, strategies as st

from fareyminor.graph_core import Graph

settings.register_profile("default", deadline=None, max_examples=60)
settings.load_profile("default")


@st.composite
def small_graphs(draw, min_vertices=2, max_vertices=7):
    n = draw(st.integers(min_vertices, max_vertices))
    pairs = list(itertools.combinations(range(n), 2))
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True, max_size=len(pairs))) if pairs else []
    return Graph(range(n), chosen)



def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, name): acceptance criterion checked by the test")
    config.criteria = {}


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None:
        return
    key = tuple(marker.args)
    results = item.config.criteria
    if report.when == "call" or report.failed:
        results[key] = results.get(key, True) and report.passed


def pytest_terminal_summary(terminalreporter, config):
    if not config.criteria:
        return
    terminalreporter.section("acceptance criteria")
    for (number, name), ok in sorted(config.criteria.items()):
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'} criterion {number:2d}: {name}")
