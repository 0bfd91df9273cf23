import pytest

from parttopo.store import RecordCache

ACCEPTANCE_LINES: list[str] = []


@pytest.fixture(scope="session")
def census_cache(tmp_path_factory):
    """Record cache shared by every test in the session (full profiles are reused)."""
    return RecordCache(tmp_path_factory.mktemp("cache") / "records.tsv")


@pytest.fixture
def criterion():
    """Record one acceptance line; the test still asserts on its own."""

    def record(name: str, ok: bool, detail: str = "") -> bool:
        ACCEPTANCE_LINES.append(f"{'PASS' if ok else 'FAIL'}  {name}" + (f"  [{detail}]" if detail else ""))
        return ok

    return record


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
