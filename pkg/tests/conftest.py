import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from fences import build_fence


@pytest.fixture(scope="session")
def f434():
    return build_fence((4, 3, 4))


@pytest.fixture(scope="session")
def f22():
    return build_fence((2, 2))


@pytest.fixture(scope="session")
def f222():
    return build_fence((2, 2, 2))


@pytest.fixture(scope="session")
def f48():
    """The 31-element fence with eight parts equal to four; shared across
    the heavy acceptance tests so orbits are computed once."""
    return build_fence((4,) * 8)
