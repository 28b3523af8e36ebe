import random

import pytest

from skewpbw.algebras import CATALOG, build_catalog

ALGEBRAS = list(CATALOG)
BIJECTIVE = ALGEBRAS  # every catalog entry has invertible sigmas and unit constants


@pytest.fixture(scope="session")
def catalog():
    return {name: build_catalog(name) for name in ALGEBRAS}


@pytest.fixture
def rng():
    return random.Random(20240611)


def pytest_terminal_summary(terminalreporter):
    import sys

    module = sys.modules.get("test_acceptance")
    results = getattr(module, "RESULTS", None)
    if not results:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(results):
        failures = results[number]
        status = "PASS" if not failures else f"FAIL ({len(failures)} failures)"
        terminalreporter.write_line(f"criterion {number}: {status}: {module.TITLES[number]}")
