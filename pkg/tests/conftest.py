import numpy as np
import pytest

from numtheory.characters import character


@pytest.fixture
def quadratic_mod5():
    return character(5, (2,))


@pytest.fixture
def odd_mod3():
    return character(3, (1,))


@pytest.fixture
def odd_mod4():
    return character(4, (1,))


@pytest.fixture
def cubic_mod7():
    return character(7, (2,))


@pytest.fixture
def rng():
    return np.random.default_rng(20240917)
