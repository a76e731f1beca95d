import random

import pytest

from thompson_orders import DyadicRational, from_word, random_word, standard_grid


def dy(num: int, exp: int = 0) -> DyadicRational:
    return DyadicRational(num, exp)


@pytest.fixture(scope="session")
def grid():
    return standard_grid()


@pytest.fixture()
def rng():
    return random.Random(0xC0FFEE)


def random_element(rng, max_len=6):
    return from_word(random_word(rng, max_len))
