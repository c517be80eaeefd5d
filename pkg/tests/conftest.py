import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from quartic_euler.generation import antiprism, generate  # noqa: E402

DATA = Path(__file__).parent / "data"


@pytest.fixture(scope="session")
def corpus():
    """3-connected quartic plane graphs up to 12 vertices, keyed by order."""
    return generate(12)


@pytest.fixture(scope="session")
def octahedron():
    return antiprism(3)


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(mod.RESULTS):
        terminalreporter.write_line(mod.RESULTS[number].line())
