import functools

import pytest

from twisted_bruhat.groups import GroupContext
from twisted_bruhat.klv import PolyTable
from twisted_bruhat.twisted import enumerate_iota


@functools.lru_cache(maxsize=None)
def poset_for(model: str):
    return enumerate_iota(GroupContext.parse(model))


@functools.lru_cache(maxsize=None)
def table_for(model: str):
    return PolyTable(poset_for(model))


@pytest.fixture
def flip4():
    return poset_for("flip:4")


@pytest.fixture
def flip6():
    return poset_for("flip:6")


_ACCEPTANCE = pytest.StashKey[list]()


@pytest.fixture
def report(request):
    """Record one acceptance line; printed again in the terminal summary."""
    lines = request.config.stash.setdefault(_ACCEPTANCE, [])

    def record(number: int, ok: bool, detail: str) -> None:
        line = f"criterion {number}: {'PASS' if ok else 'FAIL'}  {detail}"
        lines.append(line)
        print(line)
    return record


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    lines = config.stash.get(_ACCEPTANCE, [])
    if lines:
        terminalreporter.section("acceptance")
        for line in sorted(lines):
            terminalreporter.write_line(line)
