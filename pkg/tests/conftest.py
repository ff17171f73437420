import pytest

_LINES = pytest.StashKey[dict]()


def pytest_configure(config):
    config.stash[_LINES] = {}
    config.addinivalue_line("markers", "criterion(number, title): an acceptance criterion")


@pytest.fixture
def acceptance(request):
    """Records one PASS/FAIL line for the criterion marked on the test."""
    mark = request.node.get_closest_marker("criterion")
    number, title = mark.args
    lines = request.config.stash[_LINES]

    def report(ok: bool, detail: str) -> None:
        lines[number] = f"{'PASS' if ok else 'FAIL'} criterion {number:>2}: {title} [{detail}]"
        assert ok, lines[number]

    yield report
    # an exception before report() still leaves a line
    lines.setdefault(number, f"FAIL criterion {number:>2}: {title} [raised before measuring]")


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    lines = config.stash[_LINES]
    if not lines:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(lines):
        terminalreporter.write_line(lines[number])
