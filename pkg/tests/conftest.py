import random

import pytest

from laguerrecert import parse_poly


@pytest.fixture
def phi17():
    return parse_poly("x^2 - x + 17")


@pytest.fixture
def rng():
    return random.Random(20240817)
