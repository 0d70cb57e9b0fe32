import sys
from pathlib import Path

import hypothesis
import pytest

sys.path.insert(0, str(Path(__file__).parent))

from helpers import EXAMPLE_DOT, EXAMPLE_STAR  # noqa: E402
from upsemigroups.core import CayleyTable  # noqa: E402

hypothesis.settings.register_profile("ci", max_examples=200, deadline=None)
hypothesis.settings.register_profile("fast", max_examples=20, deadline=None)
hypothesis.settings.load_profile("ci")


@pytest.fixture
def example_dot():
    return CayleyTable.from_rows(EXAMPLE_DOT)


@pytest.fixture
def example_star():
    return CayleyTable.from_rows(EXAMPLE_STAR)


@pytest.fixture
def trivial():
    return CayleyTable(1, (0,))


def pytest_configure(config):
    config.addinivalue_line("markers", "acceptance(number, title): exit criterion")
    config._acceptance = {}


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    mark = item.get_closest_marker("acceptance")
    if mark is None or rep.when != "call" and not rep.failed:
        return
    number, title = mark.args
    results = item.config._acceptance
    prev = results.get(number, (title, True))
    results[number] = (title, prev[1] and rep.passed)


def pytest_terminal_summary(terminalreporter, config):
    results = getattr(config, "_acceptance", {})
    if not results:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(results):
        title, ok = results[number]
        terminalreporter.write_line(f"[{'PASS' if ok else 'FAIL'}] {number}. {title}")
