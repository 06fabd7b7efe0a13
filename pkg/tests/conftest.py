import pytest

from hyperstate.hypergraph import parse


@pytest.fixture
def g_a():
    return parse("4:1;2,3;3,4;1,2,3")


@pytest.fixture
def g_b():
    return parse("4:0;1;3,4;1,2,3")


@pytest.fixture
def g_c():
    return parse("3:1,2;2,3")


@pytest.fixture
def g_d():
    return parse("3:0;2,3")


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if not RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(RESULTS, key=lambda k: int(k.split()[1])):
        ok, detail = RESULTS[key]
        terminalreporter.write_line(f"[{'PASS' if ok else 'FAIL'}] {key}: {detail}")
