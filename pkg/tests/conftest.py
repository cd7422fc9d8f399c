import pytest

from matroidlimit.corpus import connected_corpus, corpus


@pytest.fixture(scope="session")
def graphs():
    return corpus()


@pytest.fixture(scope="session")
def connected_graphs():
    return connected_corpus()


def pytest_terminal_summary(terminalreporter):
    import sys

    mod = sys.modules.get("test_acceptance")
    results = getattr(mod, "RESULTS", None)
    if not results:
        return
    terminalreporter.section("acceptance criteria")
    for n, (ok, detail) in sorted(results.items()):
        terminalreporter.write_line(f"criterion {n:2d}: {'PASS' if ok else 'FAIL'}  {detail}")
