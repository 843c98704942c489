import pytest

from orbifolder import catalog
from orbifolder.isometry import load_fixture, fixture_dir


@pytest.fixture(scope="session")
def e8_cubed():
    return catalog.build_niemeier("A3")


@pytest.fixture(scope="session")
def leech():
    return catalog.leech()


@pytest.fixture(scope="session")
def swap_fixture():
    return load_fixture(fixture_dir() / "A3_B_swap.json")


def fixture_named(name):
    return load_fixture(fixture_dir() / f"{name}.json")


# ---------------------------------------------------------------------------
# One summary line per acceptance criterion

_CRITERIA = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    mark = item.get_closest_marker("criterion")
    if mark is None or rep.when not in ("setup", "call"):
        return
    num, title = mark.args
    prev = _CRITERIA.get(num, ("PASS", title, 0.0))
    status = prev[0] if rep.passed else "FAIL"
    if rep.skipped:
        status = "SKIP"
    _CRITERIA[num] = (status, title, prev[2] + rep.duration)


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(_CRITERIA):
        status, title, secs = _CRITERIA[num]
        terminalreporter.write_line(f"criterion {num}: {status}  {title}  ({secs:.1f} s)")
