import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from cyclejoin import decompose_product  # noqa: E402
from cyclejoin import golden  # noqa: E402


@pytest.fixture(scope="session")
def ex():
    """The degree-4 worked instance: p of order 5 times a primitive q."""
    return decompose_product(golden.P_EX, golden.Q_EX)


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    results = getattr(mod, "RESULTS", None)
    if not results:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(results):
        terminalreporter.write_line(results[n])
