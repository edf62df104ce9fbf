import random

import pytest

from plogic import parse


@pytest.fixture
def rng():
    return random.Random(20240817)


@pytest.fixture
def regrouping_formulas():
    from goldens import A_TEXTS, B_TEXTS
    return (
        {i: parse(t) for i, t in A_TEXTS.items()},
        {i: parse(t) for i, t in B_TEXTS.items()},
    )
