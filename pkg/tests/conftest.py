import numpy as np
import pytest

from minqube import WeightSpec1D


@pytest.fixture(scope="session")
def w0():
    return WeightSpec1D.shifted_laguerre(0.0)


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)
