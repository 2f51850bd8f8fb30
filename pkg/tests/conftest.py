import pytest

from mutanta import enumerate_mutation_class, enumerate_triangulations


@pytest.fixture(scope="session")
def mutation_catalog():
    """Memoized mutation-class catalogs, one BFS per rank per test session."""
    cache = {}

    def get(n):
        if n not in cache:
            cache[n] = enumerate_mutation_class(n)
        return cache[n]

    return get


@pytest.fixture(scope="session")
def triangulation_catalog():
    cache = {}

    def get(m):
        if m not in cache:
            cache[m] = enumerate_triangulations(m)
        return cache[m]

    return get


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    """One pass/fail line per acceptance criterion at the end of the run."""
    entries = []
    for outcome in ("passed", "failed", "error"):
        for report in terminalreporter.stats.get(outcome, []):
            if getattr(report, "when", "call") != "call":
                continue
            if "test_acceptance" not in report.nodeid:
                continue
            name = report.nodeid.split("::")[-1]
            entries.append((name, outcome == "passed"))
    if not entries:
        return
    terminalreporter.section("acceptance criteria")
    for name, passed in sorted(entries):
        terminalreporter.write_line(f"{'PASS' if passed else 'FAIL'}  {name}")
