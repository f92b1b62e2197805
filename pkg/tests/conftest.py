import numpy as np
import pytest

import spin5 as sp


@pytest.fixture
def rng():
    return np.random.default_rng(12345)


@pytest.fixture
def fundamental_space():
    basis = np.array([sp.standard_spinor(3), sp.standard_spinor(4)])
    return sp.admissible_space(basis)
