import pytest

from dktuples import _kernels

_ACCEPTANCE = []


@pytest.fixture(params=sorted(_kernels.BACKENDS))
def backend(request):
    """Each available kernel implementation in turn."""
    return _kernels.BACKENDS[request.param]


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    marker = item.get_closest_marker("acceptance")
    if marker is None:
        return
    if rep.when == "call" or (rep.when == "setup" and not rep.passed):
        _ACCEPTANCE.append((marker.args[0], item.name, "PASS" if rep.passed else "FAIL"))


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for number, name, verdict in sorted(_ACCEPTANCE):
        terminalreporter.write_line(f"criterion {number:>2}: {verdict}  {name}")
