import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from finring.ringspec import build_ring  # noqa: E402
from finring.verifier import DEFAULT_REGISTRY  # noqa: E402

_RINGS = {}


def ring(spec):
    """Shared, memoized ring instances; rings are immutable so reuse is safe."""
    if spec not in _RINGS:
        _RINGS[spec] = build_ring(spec)
    return _RINGS[spec]


@pytest.fixture(params=DEFAULT_REGISTRY)
def registry_ring(request):
    return ring(request.param)


@pytest.fixture
def z4():
    return ring("zmod:4")


@pytest.fixture
def z6():
    return ring("zmod:6")


@pytest.fixture
def m2():
    return ring("mat:2:zmod:2")


@pytest.fixture
def t2():
    return ring("tri:2:zmod:2")


ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
