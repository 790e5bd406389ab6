import pytest

from ogpbench.rng import SeededRng


@pytest.fixture
def rng():
    return SeededRng(20240501)
