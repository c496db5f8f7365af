import pytest

_criteria: dict[int, tuple[str, str, list[str]]] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None or rep.when != "call":
        return
    number, title = marker.args
    notes = getattr(item, "criterion_notes", [])
    _criteria[number] = (title, "PASS" if rep.passed else "FAIL", notes)


@pytest.fixture
def note(request):
    """Attach a one-line finding to the acceptance summary of this test."""
    request.node.criterion_notes = []
    return request.node.criterion_notes.append


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_criteria):
        title, status, notes = _criteria[number]
        terminalreporter.write_line(f"[{status}] criterion {number}: {title}")
        for n in notes:
            terminalreporter.write_line(f"         {n}")
