import pytest

from ucoulomb.model import PhysParams


@pytest.fixture
def showcase():
    return PhysParams(1.0, 3.75, 0.005)
