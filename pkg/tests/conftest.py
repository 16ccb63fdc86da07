import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from pentaplane import EnumerationConfig, enumerate_pentagulations  # noqa: E402
from pentaplane.constructions import build_named  # noqa: E402


@pytest.fixture(scope="session")
def pool11():
    return list(enumerate_pentagulations(EnumerationConfig(max_n=11)))


@pytest.fixture(scope="session")
def pool14():
    return list(enumerate_pentagulations(EnumerationConfig(max_n=14)))


@pytest.fixture(scope="session")
def named():
    return build_named
