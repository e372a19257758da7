import sys
from pathlib import Path

import pytest
from hypothesis import HealthCheck, settings

from rrcodes.bounds import parity_code
from rrcodes.code import DefiningSet, code_from_defining_set
from rrcodes.field import field_create

sys.path.insert(0, str(Path(__file__).parent))

settings.register_profile("default", max_examples=60, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")

DATA = Path(__file__).resolve().parent.parent / "data"
BINARY_34_INDICES = [1, 2, 4, 8, 9, 13, 15, 16]
BCH15_INDICES = [1, 2, 4, 8, 3, 6, 12, 9]

_criteria: list[tuple[int, bool, str]] = []


@pytest.fixture(scope="session")
def gf2():
    return field_create(2, 1)


@pytest.fixture(scope="session")
def code34(gf2):
    """Binary [34, 18] code, n' = 17, every root of multiplicity 2."""
    return code_from_defining_set(gf2, 17, 1, DefiningSet.uniform(17, BINARY_34_INDICES, 2))


@pytest.fixture(scope="session")
def bch15(gf2):
    return code_from_defining_set(gf2, 15, 0, DefiningSet.uniform(15, BCH15_INDICES, 1))


@pytest.fixture(scope="session")
def parity3(gf2):
    return parity_code(gf2, 3)


@pytest.fixture(scope="session")
def data_dir():
    return DATA


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(n): numbered acceptance criterion checked by the test")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None:
        return
    if rep.when == "call" or (rep.when == "setup" and not rep.passed):
        detail = "; ".join(str(v) for k, v in item.user_properties if k == "detail")
        if not rep.passed and not detail:
            detail = str(rep.longrepr).splitlines()[-1] if rep.longrepr else "error"
        _criteria.append((marker.args[0], rep.passed, detail))


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.write_sep("=", "acceptance criteria")
    for n, ok, detail in sorted(_criteria):
        terminalreporter.write_line(f"criterion {n}: {'PASS' if ok else 'FAIL'} | {detail}")
